#include "wfskit/wfs.hpp"

#include <algorithm>
#include <map>

#include "wfskit/search.hpp"

namespace wfskit {

SSetMap copair(const Coproduct& c, const std::vector<SSetMap>& maps, const SSet& target) {
  SSetMap out{c.set, target, std::vector<Simplex>(static_cast<std::size_t>(c.set.size()))};
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (int id = 0; id < c.injections[k].source.size(); ++id)
      out.assign[static_cast<std::size_t>(c.injections[k](id).nd)] = maps[k](id);
  return out;
}

SSetMap coproduct_map(const Coproduct& source, const Coproduct& target, const std::vector<SSetMap>& maps) {
  std::vector<SSetMap> legs;
  for (std::size_t k = 0; k < maps.size(); ++k) legs.push_back(compose(target.injections[k], maps[k]));
  return copair(source, legs, target.set);
}

Corner box_product(const SSetMap& f, const SSetMap& g) {
  const SSet &a = f.source, &b = f.target, &c = g.source, &d = g.target;
  Product ac = product(a, c), ad = product(a, d), bc = product(b, c), bd = product(b, d);
  SSetMap ida = SSetMap::identity(a), idb = SSetMap::identity(b), idc = SSetMap::identity(c),
          idd = SSetMap::identity(d);
  Pushout po = pushout(product_map(ac, ad, ida, g), product_map(ac, bc, f, idc));
  SSetMap corner = copairing(po, product_map(ad, bd, f, idd), product_map(bc, bd, idb, g));
  return {corner, po.first, po.second};
}

Corner box_tensor(const SetMap& f, const SSetMap& g) { return box_product(discrete_map(f), g); }

Corner box_map(const SSetMap& g, const SSetMap& h, int dim) {
  const SSet &a = g.source, &b = g.target, &x = h.source, &y = h.target;
  MappingSpace bx = mapping_space(b, x, dim), ax = mapping_space(a, x, dim), ay = mapping_space(a, y, dim),
               by = mapping_space(b, y, dim);
  SSetMap ida = SSetMap::identity(a), idb = SSetMap::identity(b), idx = SSetMap::identity(x),
          idy = SSetMap::identity(y);
  Pullback pb = pullback(mapping_space_map(ax, ay, ida, h), mapping_space_map(by, ay, g, idy));
  SSetMap corner = pairing(pb, mapping_space_map(bx, ax, g, idx), mapping_space_map(bx, by, idb, h));
  return {corner, pb.first, pb.second};
}

Corner box_power(const SetMap& f, const SSetMap& h) {
  const SSet &x = h.source, &y = h.target;
  Power xb = power(x, f.target), xa = power(x, f.source), ya = power(y, f.source), yb = power(y, f.target);
  std::vector<SSetMap> c1, c2, u, v;
  for (int i = 0; i < f.source; ++i) {
    c1.push_back(compose(h, xa.projections[static_cast<std::size_t>(i)]));
    c2.push_back(yb.projections[static_cast<std::size_t>(f(i))]);
    u.push_back(xb.projections[static_cast<std::size_t>(f(i))]);
  }
  for (int j = 0; j < f.target; ++j) v.push_back(compose(h, xb.projections[static_cast<std::size_t>(j)]));
  Pullback pb = pullback(power_pairing(ya, c1, xa.set), power_pairing(ya, c2, yb.set));
  SSetMap corner = pairing(pb, power_pairing(xa, u, xb.set), power_pairing(yb, v, xb.set));
  return {corner, pb.first, pb.second};
}

SetMap box_homset(const SSetMap& g, const SSetMap& h) {
  std::vector<SSetMap> lx = all_maps(g.target, h.source);
  std::vector<SSetMap> kx = all_maps(g.source, h.source);
  std::vector<SSetMap> ly = all_maps(g.target, h.target);
  std::map<std::pair<std::vector<Simplex>, std::vector<Simplex>>, int> pairs;
  for (const SSetMap& a : kx)
    for (const SSetMap& b : ly)
      if (compose(h, a) == compose(b, g)) pairs.emplace(std::pair{a.assign, b.assign}, 0);
  int k = 0;
  for (auto& [key, idx] : pairs) idx = k++;
  SetMap out{static_cast<int>(lx.size()), k, {}};
  for (const SSetMap& m : lx) out.values.push_back(pairs.at({compose(m, g).assign, compose(h, m).assign}));
  return out;
}

std::optional<bool> lifts_all(const SSetMap& lambda, const SSetMap& rho, std::uint64_t budget) {
  RlpReport r = has_rlp(rho, {lambda}, std::max(0, lambda.target.top_dim()), budget);
  if (r.status == LiftStatus::budget) return std::nullopt;
  return r.holds();
}

bool lifts_all(const SetMap& lambda, const SetMap& rho) {
  for (const SetMap& bottom : all_set_maps(lambda.target, rho.target))
    for (const SetMap& top : all_set_maps(lambda.source, rho.source)) {
      if (compose(rho, top) != compose(bottom, lambda)) continue;
      bool found = false;
      for (const SetMap& s : all_set_maps(lambda.target, rho.source))
        if (compose(s, lambda) == top && compose(rho, s) == bottom) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

namespace {

AdjunctionCheck agreement(std::array<std::optional<bool>, 3> v) {
  AdjunctionCheck out;
  for (std::size_t k = 0; k < 3; ++k) {
    out.conclusive &= v[k].has_value();
    out.verdicts[k] = v[k].value_or(false);
  }
  out.agree = out.conclusive && out.verdicts[0] == out.verdicts[1] && out.verdicts[1] == out.verdicts[2];
  return out;
}

}  // namespace

AdjunctionCheck check_adjunction_tensor(const SetMap& f, const SSetMap& g, const SSetMap& h, std::uint64_t budget) {
  return agreement({lifts_all(box_tensor(f, g).map, h, budget), std::optional<bool>(lifts_all(f, box_homset(g, h))),
                    lifts_all(g, box_power(f, h).map, budget)});
}

AdjunctionCheck check_adjunction_product(const SSetMap& f, const SSetMap& g, const SSetMap& h, std::uint64_t budget) {
  // Maps out of any of the four objects must see every level they need.
  const int d = std::max({0, f.source.top_dim(), f.target.top_dim(), g.source.top_dim(), g.target.top_dim()});
  return agreement({lifts_all(box_product(f, g).map, h, budget), lifts_all(f, box_map(g, h, d).map, budget),
                    lifts_all(g, box_map(f, h, d).map, budget)});
}

std::string to_string(MorphismClass c) {
  switch (c) {
    case MorphismClass::mono: return "mono";
    case MorphismClass::split_mono: return "split_mono";
    case MorphismClass::eff_mono: return "eff_mono";
    case MorphismClass::epi: return "epi";
    case MorphismClass::split_epi: return "split_epi";
    case MorphismClass::eff_epi: return "eff_epi";
    case MorphismClass::coprod_injection: return "coprod_injection";
    case MorphismClass::custom: return "custom";
  }
  return "?";
}

MorphismClass parse_class(const std::string& name) {
  for (MorphismClass c : {MorphismClass::mono, MorphismClass::split_mono, MorphismClass::eff_mono, MorphismClass::epi,
                          MorphismClass::split_epi, MorphismClass::eff_epi, MorphismClass::coprod_injection,
                          MorphismClass::custom})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown morphism class '" + name + "'");
}

namespace {

bool is_mono(const SSetMap& m) {
  std::vector<bool> hit(static_cast<std::size_t>(m.target.size()), false);
  for (const Simplex& s : m.assign) {
    if (!s.nondegenerate() || hit[static_cast<std::size_t>(s.nd)]) return false;
    hit[static_cast<std::size_t>(s.nd)] = true;
  }
  return true;
}

bool is_epi(const SSetMap& m) {
  std::vector<bool> hit(static_cast<std::size_t>(m.target.size()), false);
  for (const Simplex& s : m.assign)
    if (s.nondegenerate()) hit[static_cast<std::size_t>(s.nd)] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

int depth_of(std::initializer_list<const SSet*> sets) {
  int d = 0;
  for (const SSet* s : sets) d = std::max(d, s->top_dim());
  return d;
}

}  // namespace

Classification classify(const SSetMap& m, MorphismClass c, std::uint64_t budget) {
  Classification out;
  switch (c) {
    case MorphismClass::mono:
    case MorphismClass::eff_mono:
      // In a presheaf topos every mono is regular.
      out.member = is_mono(m);
      return out;
    case MorphismClass::epi:
    case MorphismClass::eff_epi:
      // Effective epis of presheaves are the element-wise surjections.
      out.member = is_epi(m);
      return out;
    case MorphismClass::coprod_injection: {
      if (!is_mono(m)) return out;
      std::vector<bool> image(static_cast<std::size_t>(m.target.size()), false);
      for (const Simplex& s : m.assign) image[static_cast<std::size_t>(s.nd)] = true;
      for (int y = 0; y < m.target.size(); ++y) {
        if (image[static_cast<std::size_t>(y)]) continue;
        for (const Simplex& f : m.target.nd(y).faces)
          if (image[static_cast<std::size_t>(f.nd)]) {
            out.detail = "complement generator " + m.target.nd(y).name + " has a face in the image";
            return out;
          }
      }
      out.member = true;
      return out;
    }
    case MorphismClass::split_mono: {
      const int d = depth_of({&m.source, &m.target});
      Tabulation tx = tabulate(m.source, d);
      MapSearch search(m.target, tx);
      for (int x = 0; x < m.source.size(); ++x)
        search.pin(m(x).nd, m(x).sigma, Simplex::generator(x, m.source.nd(x).dim));
      search.budget(budget);
      out.witness = search.first();
      out.member = out.witness.has_value();
      if (search.status() == SearchStatus::budget) out.detail = "budget exhausted";
      return out;
    }
    case MorphismClass::split_epi: {
      const int d = depth_of({&m.source, &m.target});
      Tabulation tx = tabulate(m.source, d), ty = tabulate(m.target, d);
      MapSearch search(m.target, tx);
      search.over(m, SSetMap::identity(m.target), ty).budget(budget);
      out.witness = search.first();
      out.member = out.witness.has_value();
      if (search.status() == SearchStatus::budget) out.detail = "budget exhausted";
      return out;
    }
    case MorphismClass::custom: break;
  }
  throw UnsupportedError("class '" + to_string(c) + "' is not decidable here");
}

bool classify(const SetMap& m, MorphismClass c) {
  switch (c) {
    case MorphismClass::mono:
    case MorphismClass::eff_mono:
    case MorphismClass::coprod_injection: return m.injective();
    case MorphismClass::split_mono: return m.injective() && (m.source > 0 || m.target == 0);
    case MorphismClass::epi:
    case MorphismClass::eff_epi:
    case MorphismClass::split_epi: return m.surjective();
    case MorphismClass::custom: break;
  }
  throw UnsupportedError("class '" + to_string(c) + "' is not decidable here");
}

MorphismClassSpec class_spec(MorphismClass c) {
  return {to_string(c), [c](const SSetMap& m) { return classify(m, c).member; }, {}};
}

std::optional<std::pair<SSetMap, SSetMap>> check_wfs_on_corpus(const WfsSpec& w, const std::vector<SSetMap>& corpus) {
  for (const SSetMap& l : corpus) {
    if (!w.left.predicate(l)) continue;
    for (const SSetMap& r : corpus) {
      if (!w.right.predicate(r)) continue;
      if (lifts_all(l, r) == false) return std::pair{l, r};
    }
  }
  return std::nullopt;
}

std::optional<RetractWitness> is_retract(const SSetMap& f, const SSetMap& g) {
  const int d = depth_of({&f.source, &f.target, &g.source, &g.target});
  Tabulation ta = tabulate(f.source, d), tb = tabulate(f.target, d), tc = tabulate(g.source, d),
             td = tabulate(g.target, d);
  std::optional<RetractWitness> found;
  MapSearch(f.target, td).budget(UINT64_MAX).run([&](const SSetMap& i2) {
    MapSearch r2s(g.target, tb);
    for (int b = 0; b < f.target.size(); ++b) r2s.pin(i2(b).nd, i2(b).sigma, Simplex::generator(b, f.target.nd(b).dim));
    r2s.budget(UINT64_MAX).run([&](const SSetMap& r2) {
      MapSearch is(f.source, tc);
      is.over(g, compose(i2, f), td).budget(UINT64_MAX).run([&](const SSetMap& i) {
        MapSearch rs(g.source, ta);
        rs.over(f, compose(r2, g), tb).budget(UINT64_MAX);
        for (int a = 0; a < f.source.size(); ++a) rs.pin(i(a).nd, i(a).sigma, Simplex::generator(a, f.source.nd(a).dim));
        if (auto r = rs.first()) found = RetractWitness{i, *r, i2, r2};
        return !found;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

bool verify_retract(const SSetMap& f, const SSetMap& g, const RetractWitness& w) {
  return compose(w.r, w.i) == SSetMap::identity(f.source) && compose(w.r2, w.i2) == SSetMap::identity(f.target) &&
         compose(g, w.i) == compose(w.i2, f) && compose(f, w.r) == compose(w.r2, g);
}

Factorization factor_projective_type(const SSetMap& m, const std::vector<SSet>& projectives) {
  std::vector<SSet> parts{m.source};
  std::vector<SSetMap> legs{m};
  for (const SSet& p : projectives)
    for (const SSetMap& q : all_maps(p, m.target)) {
      parts.push_back(p);
      legs.push_back(q);
    }
  Coproduct c = coproduct(parts);
  return {c.injections.front(), copair(c, legs, m.target)};
}

std::pair<SetMap, SetMap> factor_projective_type(const SetMap& m) {
  SetMap left{m.source, m.source + m.target, {}};
  SetMap right{m.source + m.target, m.target, m.values};
  for (int x = 0; x < m.source; ++x) left.values.push_back(x);
  for (int y = 0; y < m.target; ++y) right.values.push_back(y);
  return {left, right};
}

SoaResult small_object_factorize(const SSetMap& m, const std::vector<SSetMap>& generators, int stages, int dim,
                                 std::uint64_t budget) {
  SoaResult out;
  out.dim = dim;
  SSetMap left = SSetMap::identity(m.source);
  SSetMap right = m;
  for (int stage = 1;; ++stage) {
    std::vector<std::size_t> which;
    std::vector<LiftingSquare> open;
    std::vector<int> cells(generators.size(), 0);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      if (generators[gi].target.top_dim() > dim) continue;
      for (LiftingSquare& sq : all_squares(generators[gi], right)) {
        if (solve_lifting(sq, budget).status == LiftStatus::lifted) continue;
        which.push_back(gi);
        open.push_back(std::move(sq));
        ++cells[gi];
      }
    }
    if (open.empty()) break;
    if (stage > stages) {
      out.partial = true;
      break;
    }
    std::vector<SSet> as, bs;
    std::vector<SSetMap> tops, lambdas, bottoms;
    for (const LiftingSquare& sq : open) {
      as.push_back(sq.lambda.source);
      bs.push_back(sq.lambda.target);
      tops.push_back(sq.top);
      lambdas.push_back(sq.lambda);
      bottoms.push_back(sq.bottom);
    }
    Coproduct ca = coproduct(as), cb = coproduct(bs);
    Pushout po = pushout(copair(ca, tops, right.source), coproduct_map(ca, cb, lambdas));
    right = copairing(po, right, copair(cb, bottoms, m.target));
    left = compose(po.first, left);
    out.log.push_back({stage, cells});
  }
  out.legs = {left, right};
  out.residual = has_rlp(right, generators, dim, budget);
  return out;
}

}  // namespace wfskit
