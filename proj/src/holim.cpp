#include "wfskit/holim.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "wfskit/lifting.hpp"
#include "wfskit/search.hpp"
#include "wfskit/wfs.hpp"

namespace wfskit {

namespace {

std::size_t u(int x) { return static_cast<std::size_t>(x); }

Chain chain_face(const FinCategory& c, const Chain& ch, int i) {
  const int n = static_cast<int>(ch.arrows.size());
  Chain f{ch.start, {}};
  const auto& a = ch.arrows;
  for (int k = 0; k < n; ++k) {
    if (i == 0 && k == 0) {
      f.start = c.dst(a[0]);
      continue;
    }
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i - 1) continue;
    if (i > 0 && i < n && k == i) {
      f.arrows.push_back(c.compose(a[u(i)], a[u(i - 1)]));
      continue;
    }
    f.arrows.push_back(a[u(k)]);
  }
  return f;
}

Chain chain_degeneracy(const FinCategory& c, const Chain& ch, int j) {
  Chain s = ch;
  const int obj = j == 0 ? ch.start : c.dst(ch.arrows[u(j - 1)]);
  s.arrows.insert(s.arrows.begin() + j, c.identity[u(obj)]);
  return s;
}

std::string chain_name(const FinCategory& c, const Chain& ch) {
  std::string s = c.objects[u(ch.start)];
  for (int a : ch.arrows) s += ";" + c.morphisms[u(a)].id;
  return s;
}

Chain map_chain(const FinFunctor& f, const Chain& ch) {
  Chain out{f.obj_map[u(ch.start)], {}};
  for (int a : ch.arrows) out.arrows.push_back(f.mor_map[u(a)]);
  return out;
}

/// The comma morphism over h leaving object `from` (unique when it exists).
int lift_morphism(const CommaCategory& c, int from, int h) {
  for (int m = 0; m < c.category.morphism_count(); ++m)
    if (c.category.src(m) == from && c.projection.mor_map[u(m)] == h) return m;
  throw CategoryError("no comma morphism over the given arrow");
}

int find_object(const CommaCategory& c, int i, int arrow) {
  for (int k = 0; k < c.category.object_count(); ++k)
    if (c.object_of[u(k)] == i && c.arrow_of[u(k)] == arrow) return k;
  throw CategoryError("no comma object with the given arrow");
}

/// Functor between comma categories over the same projection, given on
/// structure arrows.
FinFunctor comma_functor(const CommaCategory& a, const CommaCategory& b, const std::function<int(int)>& object_of,
                         const std::function<int(int)>& arrow) {
  FinFunctor f{a.category, b.category, {}, {}};
  for (int k = 0; k < a.category.object_count(); ++k) f.obj_map.push_back(find_object(b, object_of(k), arrow(k)));
  for (int m = 0; m < a.category.morphism_count(); ++m)
    f.mor_map.push_back(lift_morphism(b, f.obj_map[u(a.category.src(m))], a.projection.mor_map[u(m)]));
  return f;
}

/// Factors m through the monomorphism incl.
SSetMap lift_through(const SSetMap& m, const SSetMap& incl) {
  const int top = std::max(0, m.source.top_dim());
  Tabulation ts = tabulate(incl.source, top), tt = tabulate(incl.target, top);
  auto lm = level_map(incl, ts, tt);
  std::vector<std::map<int, int>> back(lm.size());
  for (std::size_t n = 0; n < lm.size(); ++n)
    for (std::size_t x = 0; x < lm[n].size(); ++x) back[n].emplace(lm[n][x], static_cast<int>(x));
  SSetMap out{m.source, incl.source, {}};
  for (int g = 0; g < m.source.size(); ++g) {
    const int n = m.source.nd(g).dim;
    auto it = back[u(n)].find(tt.index_of(m(g)));
    if (it == back[u(n)].end()) throw SSetError("map does not factor through the subobject");
    out.assign.push_back(ts.simplices[u(n)][u(it->second)]);
  }
  return out;
}

std::optional<int> value_truncation(const Diagram& d) {
  std::optional<int> t;
  for (const SSet& v : d.values)
    if (auto vt = v.truncated_at()) t = t ? std::min(*t, *vt) : *vt;
  return t;
}

}  // namespace

CategoryReport validate_diagram(const Diagram& d) {
  CategoryReport r = validate_category(d.shape);
  auto bad = [&r](std::string why) {
    r.ok = false;
    r.violations.push_back(std::move(why));
  };
  if (static_cast<int>(d.values.size()) != d.shape.object_count()) bad("one value per object required");
  if (static_cast<int>(d.arrows.size()) != d.shape.morphism_count()) bad("one map per morphism required");
  if (!r.ok) return r;
  for (int m = 0; m < d.shape.morphism_count(); ++m) {
    const SSetMap& f = d.arrows[u(m)];
    const std::string& id = d.shape.morphisms[u(m)].id;
    try {
      f.validate();
    } catch (const SSetError& e) {
      bad("map of " + id + ": " + e.what());
      continue;
    }
    if (!f.source.same_data(d.values[u(d.shape.src(m))]) || !f.target.same_data(d.values[u(d.shape.dst(m))]))
      bad("map of " + id + " has the wrong endpoints");
    if (d.shape.is_identity(m) && f.assign != SSetMap::identity(f.source).assign) bad(id + " is not sent to an identity");
  }
  if (!r.ok) return r;
  for (int g = 0; g < d.shape.morphism_count(); ++g)
    for (int f = 0; f < d.shape.morphism_count(); ++f) {
      const int gf = d.shape.compose(g, f);
      if (gf >= 0 && compose(d.arrows[u(g)], d.arrows[u(f)]).assign != d.arrows[u(gf)].assign)
        bad("composite " + d.shape.morphisms[u(g)].id + " o " + d.shape.morphisms[u(f)].id + " is not preserved");
    }
  return r;
}

Diagram restrict(const Diagram& d, const FinFunctor& f) {
  Diagram out{f.source, {}, {}};
  for (int k : f.obj_map) out.values.push_back(d.values[u(k)]);
  for (int m : f.mor_map) out.arrows.push_back(d.arrows[u(m)]);
  return out;
}

Diagram constant_diagram(const FinCategory& shape, const SSet& x) {
  return Diagram{shape, std::vector<SSet>(u(shape.object_count()), x),
                 std::vector<SSetMap>(u(shape.morphism_count()), SSetMap::identity(x))};
}

ProductN product_n(const std::vector<SSet>& factors) {
  ProductN p;
  if (factors.empty()) {
    p.set = point();
    return p;
  }
  p.set = factors[0];
  p.projections.push_back(SSetMap::identity(factors[0]));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Product step = product(p.set, factors[k]);
    for (SSetMap& pr : p.projections) pr = compose(pr, step.first);
    p.projections.push_back(step.second);
    p.set = step.set;
    p.steps.push_back(std::move(step));
  }
  return p;
}

SSetMap pairing_n(const ProductN& p, const std::vector<SSetMap>& components, const SSet& source) {
  if (components.empty()) return to_point(source);
  SSetMap acc = components[0];
  for (std::size_t k = 1; k < components.size(); ++k) acc = pairing(p.steps[k - 1], acc, components[k]);
  return acc;
}

SSetMap nerve_map(const Nerve& from, const Nerve& to, const FinFunctor& f) {
  SSetMap out{from.set, to.set, std::vector<Simplex>(u(from.set.size()))};
  for (std::size_t n = 0; n < from.chains.size(); ++n)
    for (std::size_t k = 0; k < from.chains[n].size(); ++k)
      if (from.ez[n][k].nondegenerate()) out.assign[u(from.ez[n][k].nd)] = to.simplex(map_chain(f, from.chains[n][k]));
  return out;
}

// Homotopy colimits ------------------------------------------------------------

Hocolim hocolim(const Diagram& d, int trunc) {
  const FinCategory& I = d.shape;
  Hocolim h;
  h.trunc = trunc;
  if (auto vt = value_truncation(d)) h.trunc = std::min(h.trunc, *vt);
  const int T = h.trunc;
  h.nerve = nerve(I, T);
  for (const SSet& v : d.values) h.values.push_back(tabulate(v, T));
  std::vector<std::vector<std::vector<int>>> arrow_level;
  for (const SSetMap& f : d.arrows)
    arrow_level.push_back(level_map(f, h.values[u(d.shape.src(static_cast<int>(arrow_level.size())))],
                                    h.values[u(d.shape.dst(static_cast<int>(arrow_level.size())))]));

  Levels lv;
  lv.top = T;
  lv.count.assign(u(T + 1), 0);
  lv.face.resize(u(T + 1));
  lv.degen.resize(u(T + 1));
  h.offset.resize(u(T + 1));
  h.decode.resize(u(T + 1));
  std::vector<std::vector<std::string>> names(u(T + 1));
  for (int n = 0; n <= T; ++n)
    for (std::size_t c = 0; c < h.nerve.chains[u(n)].size(); ++c) {
      const Chain& ch = h.nerve.chains[u(n)][c];
      const Tabulation& tv = h.values[u(ch.start)];
      h.offset[u(n)].push_back(lv.count[u(n)]);
      const std::string cname = chain_name(I, ch);
      for (int x = 0; x < tv.levels.count[u(n)]; ++x) {
        h.decode[u(n)].emplace_back(static_cast<int>(c), x);
        names[u(n)].push_back(cname + "|" + tv.set.to_string(tv.simplices[u(n)][u(x)]));
      }
      lv.count[u(n)] += tv.levels.count[u(n)];
    }
  auto element = [&](int n, const Chain& ch, int x) { return h.offset[u(n)][u(h.nerve.index_of(ch))] + x; };
  for (int n = 0; n <= T; ++n) {
    if (n >= 1) lv.face[u(n)].assign(u(n + 1), {});
    if (n < T) lv.degen[u(n)].assign(u(n + 1), {});
    for (auto [c, x] : h.decode[u(n)]) {
      const Chain& ch = h.nerve.chains[u(n)][u(c)];
      const Levels& vl = h.values[u(ch.start)].levels;
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          int y = vl.face[u(n)][u(i)][u(x)];
          if (i == 0) y = arrow_level[u(ch.arrows[0])][u(n - 1)][u(y)];
          lv.face[u(n)][u(i)].push_back(element(n - 1, chain_face(I, ch, i), y));
        }
      if (n < T)
        for (int j = 0; j <= n; ++j)
          lv.degen[u(n)][u(j)].push_back(element(n + 1, chain_degeneracy(I, ch, j), vl.degen[u(n)][u(j)][u(x)]));
    }
  }
  FinitenessReport fin = is_homotopically_finite(I);
  int value_dim = 0;
  for (const SSet& v : d.values) value_dim = std::max(value_dim, v.top_dim());
  h.exact = fin.finite && !value_truncation(d) && fin.max_chain + value_dim <= T;
  h.table = normalize(lv, !h.exact, &names);
  h.set = h.table.set;
  return h;
}

SSetMap hocolim_map(const Hocolim& from, const Hocolim& to, const std::vector<SSetMap>& eta) {
  return map_from_table(from.table, to.set, [&](int n, int e) {
    auto [c, x] = from.decode[u(n)][u(e)];
    const Chain& ch = from.nerve.chains[u(n)][u(c)];
    const int i = ch.start;
    const int y = to.values[u(i)].index_of(eta[u(i)](from.values[u(i)].simplices[u(n)][u(x)]));
    return to.table.ez[u(n)][u(to.offset[u(n)][u(to.nerve.index_of(ch))] + y)];
  });
}

SSetMap hocolim_reindex(const Hocolim& from, const Hocolim& to, const FinFunctor& f) {
  return map_from_table(from.table, to.set, [&](int n, int e) {
    auto [c, x] = from.decode[u(n)][u(e)];
    const Chain& ch = from.nerve.chains[u(n)][u(c)];
    const Chain image = map_chain(f, ch);
    const int y = to.values[u(image.start)].index_of(from.values[u(ch.start)].simplices[u(n)][u(x)]);
    return to.table.ez[u(n)][u(to.offset[u(n)][u(to.nerve.index_of(image))] + y)];
  });
}

// Coend oracle ---------------------------------------------------------------------

Coend coend_oracle(const Diagram& d, int trunc) {
  const FinCategory& I = d.shape;
  Coend c;
  std::vector<SSet> pieces;
  for (int i = 0; i < I.object_count(); ++i) {
    c.unders.push_back(under_category(I, I.objects[u(i)]));
    c.nerves.push_back(nerve(c.unders.back().category, trunc));
    c.pieces.push_back(product(c.nerves.back().set, d.values[u(i)]));
    pieces.push_back(c.pieces.back().set);
  }
  c.sum = coproduct(pieces);
  std::vector<SSet> rel;
  std::vector<SSetMap> left, right;
  for (int m = 0; m < I.morphism_count(); ++m) {
    if (I.is_identity(m)) continue;
    const int i = I.src(m), j = I.dst(m);
    // j/I -> i/I by precomposition with m.
    const CommaCategory& from = c.unders[u(j)];
    const CommaCategory& to = c.unders[u(i)];
    FinFunctor pre = comma_functor(
        from, to, [&](int k) { return from.object_of[u(k)]; },
        [&](int k) { return I.compose(from.arrow_of[u(k)], m); });
    Product s = product(c.nerves[u(j)].set, d.values[u(i)]);
    left.push_back(compose(c.sum.injections[u(i)],
                           product_map(s, c.pieces[u(i)], nerve_map(c.nerves[u(j)], c.nerves[u(i)], pre),
                                       SSetMap::identity(d.values[u(i)]))));
    right.push_back(compose(c.sum.injections[u(j)],
                            product_map(s, c.pieces[u(j)], SSetMap::identity(c.nerves[u(j)].set), d.arrows[u(m)])));
    rel.push_back(s.set);
  }
  Coproduct r = coproduct(rel);
  c.quotient = coequalizer(copair(r, left, c.sum.set), copair(r, right, c.sum.set));
  c.set = c.quotient.set;
  return c;
}

bool coend_agrees(const Hocolim& h, const SSetMap& comparison) {
  if (h.exact) return is_isomorphism(comparison);
  std::vector<bool> hit(static_cast<std::size_t>(comparison.target.size()), false);
  for (const Simplex& s : comparison.assign) {
    if (!s.nondegenerate() || hit[static_cast<std::size_t>(s.nd)]) return false;
    hit[static_cast<std::size_t>(s.nd)] = true;
  }
  for (int g = 0; g < comparison.target.size(); ++g)
    if (comparison.target.nd(g).dim <= h.trunc && !hit[static_cast<std::size_t>(g)]) return false;
  return true;
}

SSetMap coend_comparison(const Hocolim& h, const Coend& c) {
  // Level tables of each piece keyed by the two projections.
  std::vector<Tabulation> tp, tn;
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> pair_index;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    tp.push_back(tabulate(c.pieces[i].set, h.trunc));
    tn.push_back(tabulate(c.nerves[i].set, h.trunc));
    auto first = level_map(c.pieces[i].first, tp.back(), tn.back());
    auto second = level_map(c.pieces[i].second, tp.back(), h.values[i]);
    pair_index.emplace_back(first.size());
    for (std::size_t n = 0; n < first.size(); ++n)
      for (std::size_t e = 0; e < first[n].size(); ++e) pair_index[i][n].emplace(std::make_pair(first[n][e], second[n][e]), static_cast<int>(e));
  }
  return map_from_table(h.table, c.set, [&](int n, int e) {
    auto [ci, x] = h.decode[u(n)][u(e)];
    const Chain& ch = h.nerve.chains[u(n)][u(ci)];
    const int i0 = ch.start;
    const CommaCategory& under = c.unders[u(i0)];
    const FinCategory& base = under.projection.target;
    // i0 -> i1 -> ... as the chain id, a0, a1 a0, ... in i0/I.
    int arrow = base.identity[u(i0)];
    Chain lifted{find_object(under, i0, arrow), {}};
    int obj = lifted.start;
    for (int a : ch.arrows) {
      const int m = lift_morphism(under, obj, a);
      lifted.arrows.push_back(m);
      obj = under.category.dst(m);
    }
    const Simplex s = c.nerves[u(i0)].simplex(lifted);
    const int piece = pair_index[u(i0)][u(n)].at({tn[u(i0)].index_of(s), x});
    return c.quotient.projection(c.sum.injections[u(i0)](tp[u(i0)].simplices[u(n)][u(piece)]));
  });
}

// Homotopy limits --------------------------------------------------------------------

int holim_dimension(const Diagram& d, int trunc) {
  const FinCategory& I = d.shape;
  FinitenessReport fin = is_homotopically_finite(I);
  if (!fin.finite) throw CategoryError("shape is not homotopically finite");
  int m = trunc;
  for (int i = 0; i < I.object_count(); ++i) {
    if (auto t = d.values[u(i)].truncated_at()) {
      Nerve nv = nerve(over_category(I, I.objects[u(i)]).category, std::max(fin.max_chain, 0));
      m = std::min(m, *t - std::max(0, nv.set.top_dim()));
    }
  }
  if (m < 0) throw SSetError("values are truncated too low for the end at this shape");
  return m;
}

Holim holim(const Diagram& d, int trunc) {
  const FinCategory& I = d.shape;
  Holim h;
  h.trunc = holim_dimension(d, trunc);
  const int m = h.trunc;
  const int chain = std::max(is_homotopically_finite(I).max_chain, 0);
  std::vector<SSet> spaces;
  for (int i = 0; i < I.object_count(); ++i) {
    h.overs.push_back(over_category(I, I.objects[u(i)]));
    h.nerves.push_back(nerve(h.overs.back().category, chain));
    h.spaces.push_back(mapping_space(h.nerves.back().set, d.values[u(i)], m));
    spaces.push_back(h.spaces.back().set);
    const SSet& v = d.values[u(i)];
    const int kd = std::min(trunc, v.truncated_at().value_or(trunc));
    RlpReport r = is_kan_fibration(to_point(v), kd);
    if (r.status != LiftStatus::lifted)
      h.warnings.push_back("value at " + I.objects[u(i)] + " is not Kan up to dimension " + std::to_string(kd) +
                           "; the end is stamped but not homotopy invariant");
  }
  h.product = product_n(spaces);
  std::vector<SSet> targets;
  std::vector<SSetMap> post, pre;
  for (int a = 0; a < I.morphism_count(); ++a) {
    if (I.is_identity(a)) continue;
    const int i = I.src(a), j = I.dst(a);
    MappingSpace mu = mapping_space(h.nerves[u(i)].set, d.values[u(j)], m);
    // I/i -> I/j by postcomposition with a.
    const CommaCategory& from = h.overs[u(i)];
    FinFunctor push = comma_functor(
        from, h.overs[u(j)], [&](int k) { return from.object_of[u(k)]; },
        [&](int k) { return I.compose(a, from.arrow_of[u(k)]); });
    post.push_back(compose(mapping_space_map(h.spaces[u(i)], mu, SSetMap::identity(h.nerves[u(i)].set), d.arrows[u(a)]),
                           h.product.projections[u(i)]));
    pre.push_back(compose(mapping_space_map(h.spaces[u(j)], mu, nerve_map(h.nerves[u(i)], h.nerves[u(j)], push),
                                            SSetMap::identity(d.values[u(j)])),
                          h.product.projections[u(j)]));
    targets.push_back(mu.set);
  }
  if (targets.empty()) {
    h.set = h.product.set;
    h.inclusion = SSetMap::identity(h.set);
    return h;
  }
  ProductN q = product_n(targets);
  Equalizer eq = equalizer(pairing_n(q, post, h.product.set), pairing_n(q, pre, h.product.set));
  h.set = eq.set;
  h.inclusion = eq.inclusion;
  return h;
}

SSetMap holim_map(const Holim& from, const Holim& to, const std::vector<SSetMap>& eta) {
  if (from.trunc != to.trunc) throw SSetError("holim_map needs ends computed to the same dimension");
  std::vector<SSetMap> comps;
  for (std::size_t i = 0; i < from.spaces.size(); ++i)
    comps.push_back(compose(
        mapping_space_map(from.spaces[i], to.spaces[i], SSetMap::identity(from.nerves[i].set), eta[i]),
        from.product.projections[i]));
  return lift_through(compose(pairing_n(to.product, comps, from.product.set), from.inclusion), to.inclusion);
}

SSetMap holim_restrict(const Holim& from, const Holim& to, const FinFunctor& f, const Diagram& d) {
  if (from.trunc < to.trunc) throw SSetError("holim_restrict needs the source end computed at least as far");
  std::vector<SSetMap> comps;
  for (int a = 0; a < f.source.object_count(); ++a) {
    const int b = f.obj_map[u(a)];
    const CommaCategory& over_a = to.overs[u(a)];
    // A/a -> B/f(a).
    FinFunctor g = comma_functor(
        over_a, from.overs[u(b)], [&](int k) { return f.obj_map[u(over_a.object_of[u(k)])]; },
        [&](int k) { return f.mor_map[u(over_a.arrow_of[u(k)])]; });
    comps.push_back(compose(mapping_space_map(from.spaces[u(b)], to.spaces[u(a)],
                                              nerve_map(to.nerves[u(a)], from.nerves[u(b)], g),
                                              SSetMap::identity(d.values[u(b)])),
                            from.product.projections[u(b)]));
  }
  return lift_through(compose(pairing_n(to.product, comps, from.product.set), from.inclusion), to.inclusion);
}

// Kan extensions -------------------------------------------------------------------------

Diagram hokan_left(const FinFunctor& alpha, const Diagram& d, int trunc) {
  const FinCategory& J = alpha.target;
  std::vector<CommaCategory> commas;
  std::vector<Hocolim> values;
  Diagram out{J, {}, {}};
  for (int j = 0; j < J.object_count(); ++j) {
    commas.push_back(comma_over(alpha, j));
    values.push_back(hocolim(restrict(d, commas.back().projection), trunc));
    out.values.push_back(values.back().set);
  }
  for (int v = 0; v < J.morphism_count(); ++v) {
    const CommaCategory& a = commas[u(J.src(v))];
    FinFunctor push = comma_functor(
        a, commas[u(J.dst(v))], [&](int k) { return a.object_of[u(k)]; },
        [&](int k) { return J.compose(v, a.arrow_of[u(k)]); });
    out.arrows.push_back(hocolim_reindex(values[u(J.src(v))], values[u(J.dst(v))], push));
  }
  return out;
}

Diagram hokan_right(const FinFunctor& alpha, const Diagram& d, int trunc) {
  const FinCategory& J = alpha.target;
  std::vector<CommaCategory> commas;
  std::vector<Diagram> parts;
  int m = trunc;
  for (int j = 0; j < J.object_count(); ++j) {
    commas.push_back(comma_under(alpha, j));
    parts.push_back(restrict(d, commas.back().projection));
    m = std::min(m, holim_dimension(parts.back(), trunc));
  }
  std::vector<Holim> values;
  Diagram out{J, {}, {}};
  for (const Diagram& p : parts) {
    values.push_back(holim(p, m));
    out.values.push_back(values.back().set);
  }
  for (int v = 0; v < J.morphism_count(); ++v) {
    const int j = J.src(v), k = J.dst(v);
    const CommaCategory& b = commas[u(k)];
    // k \ alpha -> j \ alpha by precomposition with v.
    FinFunctor pull = comma_functor(
        b, commas[u(j)], [&](int x) { return b.object_of[u(x)]; },
        [&](int x) { return J.compose(b.arrow_of[u(x)], v); });
    out.arrows.push_back(holim_restrict(values[u(j)], values[u(k)], pull, parts[u(j)]));
  }
  return out;
}

// Simplicial objects ---------------------------------------------------------------------

Diagram totals(const SobjDiagram& d) {
  Diagram out{d.shape, {}, {}};
  for (const SimpObject& x : d.values) out.values.push_back(x.total());
  for (const SimpMorphism& f : d.arrows) out.arrows.push_back(f.total);
  return out;
}

Diagram indices(const SobjDiagram& d) {
  Diagram out{d.shape, {}, {}};
  for (const SimpObject& x : d.values) out.values.push_back(x.index());
  for (const SimpMorphism& f : d.arrows) out.arrows.push_back(f.index);
  return out;
}

SobjColimit hocolim(const SobjDiagram& d, int trunc) {
  SobjColimit out;
  std::vector<SSetMap> eta;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    eta.push_back(d.values[i].p);
    CofibrancyResult c = is_cofibrant(d.values[i]);
    if (!c.cofibrant) out.warnings.push_back("value at " + d.shape.objects[i] + " is not cofibrant: " + c.detail);
  }
  Hocolim e = hocolim(totals(d), trunc), b = hocolim(indices(d), trunc);
  out.object = SimpObject{hocolim_map(e, b, eta), std::min(e.trunc, b.trunc)};
  return out;
}

SobjColimit holim(const SobjDiagram& d, int trunc) {
  SobjColimit out;
  std::vector<SSetMap> eta;
  for (const SimpObject& x : d.values) eta.push_back(x.p);
  const Diagram de = totals(d), db = indices(d);
  const int m = std::min(holim_dimension(de, trunc), holim_dimension(db, trunc));
  Holim e = holim(de, m), b = holim(db, m);
  out.warnings = e.warnings;
  out.warnings.insert(out.warnings.end(), b.warnings.begin(), b.warnings.end());
  out.object = SimpObject{holim_map(e, b, eta), m};
  return out;
}

}  // namespace wfskit
