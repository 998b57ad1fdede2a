#include "wfskit/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wfskit {

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < morphism_count(); ++f)
    if (src(f) == a && dst(f) == b) out.push_back(f);
  return out;
}

int FinCategory::object(const std::string& id) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), id);
  if (it == objects.end() || *it != id) throw CategoryError("unknown object '" + id + "'");
  return static_cast<int>(it - objects.begin());
}

int FinCategory::morphism(const std::string& id) const {
  auto it = std::lower_bound(morphisms.begin(), morphisms.end(), id,
                             [](const Morphism& m, const std::string& s) { return m.id < s; });
  if (it == morphisms.end() || it->id != id) throw CategoryError("unknown morphism '" + id + "'");
  return static_cast<int>(it - morphisms.begin());
}

FinCategory::Builder& FinCategory::Builder::object(std::string id) {
  objects_.push_back(std::move(id));
  return *this;
}

FinCategory::Builder& FinCategory::Builder::morphism(std::string id, std::string src, std::string dst) {
  morphisms_.push_back({std::move(id), std::move(src), std::move(dst)});
  return *this;
}

FinCategory::Builder& FinCategory::Builder::identity(std::string object, std::string morphism) {
  identities_.emplace_back(std::move(object), std::move(morphism));
  return *this;
}

FinCategory::Builder& FinCategory::Builder::composite(std::string g, std::string f, std::string gf) {
  composites_.push_back({std::move(g), std::move(f), std::move(gf)});
  return *this;
}

FinCategory FinCategory::Builder::build() const {
  FinCategory c;
  c.objects = objects_;
  std::sort(c.objects.begin(), c.objects.end());
  if (std::adjacent_find(c.objects.begin(), c.objects.end()) != c.objects.end())
    throw CategoryError("duplicate object id");
  std::map<std::string, std::string> id_of;
  for (const auto& [o, m] : identities_) {
    c.object(o);
    id_of[o] = m;
  }
  std::vector<std::array<std::string, 3>> all = morphisms_;
  for (const std::string& o : c.objects) {
    auto it = id_of.find(o);
    std::string name = it == id_of.end() ? "id_" + o : it->second;
    bool listed = false;
    for (const auto& m : morphisms_) listed |= m[0] == name;
    if (!listed) all.push_back({name, o, o});
    id_of[o] = name;
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i][0] == all[i - 1][0]) throw CategoryError("duplicate morphism id '" + all[i][0] + "'");
  for (const auto& m : all) c.morphisms.push_back({m[0], c.object(m[1]), c.object(m[2])});
  for (const std::string& o : c.objects) c.identity.push_back(c.morphism(id_of[o]));
  const auto n = static_cast<std::size_t>(c.morphism_count());
  c.comp.assign(n, std::vector<int>(n, -1));
  for (int f = 0; f < c.morphism_count(); ++f) {
    c.comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(c.identity[static_cast<std::size_t>(c.src(f))])] = f;
    c.comp[static_cast<std::size_t>(c.identity[static_cast<std::size_t>(c.dst(f))])][static_cast<std::size_t>(f)] = f;
  }
  for (const auto& [g, f, gf] : composites_) {
    const int ig = c.morphism(g), jf = c.morphism(f), k = c.morphism(gf);
    if (c.dst(jf) != c.src(ig)) throw CategoryError("composite " + g + " o " + f + " of non-composable morphisms");
    c.comp[static_cast<std::size_t>(ig)][static_cast<std::size_t>(jf)] = k;
  }
  return c;
}

CategoryReport validate_category(const FinCategory& c) {
  CategoryReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const int m = c.morphism_count();
  for (int o = 0; o < c.object_count(); ++o) {
    const int e = c.identity[static_cast<std::size_t>(o)];
    if (c.src(e) != o || c.dst(e) != o) fail("identity of " + c.objects[static_cast<std::size_t>(o)] + " is not an endomorphism");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const int gf = c.compose(g, f);
      const std::string pair = "(" + c.morphisms[static_cast<std::size_t>(g)].id + ", " + c.morphisms[static_cast<std::size_t>(f)].id + ")";
      if (c.dst(f) != c.src(g)) {
        if (gf >= 0) fail("composite defined on non-composable pair " + pair);
        continue;
      }
      if (gf < 0) {
        fail("missing composite " + pair);
        continue;
      }
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) fail("composite of " + pair + " has wrong endpoints");
    }
  for (int f = 0; f < m; ++f) {
    if (c.compose(f, c.identity[static_cast<std::size_t>(c.src(f))]) != f ||
        c.compose(c.identity[static_cast<std::size_t>(c.dst(f))], f) != f)
      fail("identity law fails for " + c.morphisms[static_cast<std::size_t>(f)].id);
  }
  if (!r.ok) return r;
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (c.dst(g) != c.src(h)) continue;
      for (int f = 0; f < m; ++f) {
        if (c.dst(f) != c.src(g)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          fail("associativity fails on (" + c.morphisms[static_cast<std::size_t>(h)].id + ", " +
               c.morphisms[static_cast<std::size_t>(g)].id + ", " + c.morphisms[static_cast<std::size_t>(f)].id + ")");
      }
    }
  return r;
}

CategoryReport validate_functor(const FinFunctor& F) {
  CategoryReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const FinCategory& s = F.source;
  const FinCategory& t = F.target;
  if (F.obj_map.size() != s.objects.size() || F.mor_map.size() != s.morphisms.size()) {
    fail("functor tables have the wrong size");
    return r;
  }
  for (int f = 0; f < s.morphism_count(); ++f) {
    const int Ff = F.mor_map[static_cast<std::size_t>(f)];
    if (t.src(Ff) != F.obj_map[static_cast<std::size_t>(s.src(f))] || t.dst(Ff) != F.obj_map[static_cast<std::size_t>(s.dst(f))])
      fail("image of " + s.morphisms[static_cast<std::size_t>(f)].id + " has wrong endpoints");
  }
  for (int o = 0; o < s.object_count(); ++o)
    if (F.mor_map[static_cast<std::size_t>(s.identity[static_cast<std::size_t>(o)])] !=
        t.identity[static_cast<std::size_t>(F.obj_map[static_cast<std::size_t>(o)])])
      fail("identity of " + s.objects[static_cast<std::size_t>(o)] + " not preserved");
  for (int g = 0; g < s.morphism_count(); ++g)
    for (int f = 0; f < s.morphism_count(); ++f) {
      const int gf = s.compose(g, f);
      if (gf < 0) continue;
      if (F.mor_map[static_cast<std::size_t>(gf)] !=
          t.compose(F.mor_map[static_cast<std::size_t>(g)], F.mor_map[static_cast<std::size_t>(f)]))
        fail("composite " + s.morphisms[static_cast<std::size_t>(g)].id + " o " + s.morphisms[static_cast<std::size_t>(f)].id +
             " not preserved");
    }
  return r;
}

FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f{c, c, {}, {}};
  for (int o = 0; o < c.object_count(); ++o) f.obj_map.push_back(o);
  for (int m = 0; m < c.morphism_count(); ++m) f.mor_map.push_back(m);
  return f;
}

FinFunctor to_terminal(const FinCategory& c) {
  return FinFunctor{c, terminal_category(), std::vector<int>(c.objects.size(), 0), std::vector<int>(c.morphisms.size(), 0)};
}

FinFunctor make_functor(const FinCategory& source, const FinCategory& target,
                        const std::vector<std::pair<std::string, std::string>>& objects,
                        const std::vector<std::pair<std::string, std::string>>& morphisms) {
  FinFunctor f{source, target, std::vector<int>(source.objects.size(), -1), std::vector<int>(source.morphisms.size(), -1)};
  for (const auto& [a, b] : objects) f.obj_map[static_cast<std::size_t>(source.object(a))] = target.object(b);
  for (int o = 0; o < source.object_count(); ++o) {
    if (f.obj_map[static_cast<std::size_t>(o)] < 0) throw CategoryError("object " + source.objects[static_cast<std::size_t>(o)] + " unmapped");
    f.mor_map[static_cast<std::size_t>(source.identity[static_cast<std::size_t>(o)])] =
        target.identity[static_cast<std::size_t>(f.obj_map[static_cast<std::size_t>(o)])];
  }
  for (const auto& [a, b] : morphisms) f.mor_map[static_cast<std::size_t>(source.morphism(a))] = target.morphism(b);
  for (int m = 0; m < source.morphism_count(); ++m)
    if (f.mor_map[static_cast<std::size_t>(m)] < 0) throw CategoryError("morphism " + source.morphisms[static_cast<std::size_t>(m)].id + " unmapped");
  return f;
}

namespace {

/// Comma category with objects (i, u) where u : alpha(i) -> j (over) or
/// u : j -> alpha(i) (under).
CommaCategory comma(const FinFunctor& alpha, int j, bool over, bool name_by_arrow) {
  const FinCategory& I = alpha.source;
  const FinCategory& J = alpha.target;
  struct Obj {
    int i;
    int u;
    std::string name;
  };
  std::vector<Obj> objs;
  for (int i = 0; i < I.object_count(); ++i) {
    const int ai = alpha.obj_map[static_cast<std::size_t>(i)];
    for (int u : over ? J.hom(ai, j) : J.hom(j, ai)) {
      std::string name = name_by_arrow ? J.morphisms[static_cast<std::size_t>(u)].id
                                       : I.objects[static_cast<std::size_t>(i)] + "|" + J.morphisms[static_cast<std::size_t>(u)].id;
      objs.push_back({i, u, std::move(name)});
    }
  }
  // Morphisms (i,u) -> (i',u') are h : i -> i' with the triangle commuting.
  struct Mor {
    int h;
    int from;
    int to;
    std::string name;
  };
  std::vector<Mor> mors;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (int h : I.hom(objs[a].i, objs[b].i)) {
        const int ah = alpha.mor_map[static_cast<std::size_t>(h)];
        const bool commutes = over ? J.compose(objs[b].u, ah) == objs[a].u : J.compose(ah, objs[a].u) == objs[b].u;
        if (!commutes) continue;
        std::string name = I.is_identity(h) ? "id_" + objs[a].name : I.morphisms[static_cast<std::size_t>(h)].id + "|" + objs[a].name;
        mors.push_back({h, static_cast<int>(a), static_cast<int>(b), std::move(name)});
      }
  FinCategory::Builder builder;
  for (const Obj& o : objs) builder.object(o.name);
  for (const Mor& m : mors) {
    builder.morphism(m.name, objs[static_cast<std::size_t>(m.from)].name, objs[static_cast<std::size_t>(m.to)].name);
    if (I.is_identity(m.h) && m.from == m.to) builder.identity(objs[static_cast<std::size_t>(m.from)].name, m.name);
  }
  for (const Mor& g : mors)
    for (const Mor& f : mors) {
      if (f.to != g.from) continue;
      const int gh = I.compose(g.h, f.h);
      for (const Mor& k : mors)
        if (k.h == gh && k.from == f.from && k.to == g.to) {
          builder.composite(g.name, f.name, k.name);
          break;
        }
    }
  CommaCategory out;
  out.category = builder.build();
  const FinCategory& C = out.category;
  out.object_of.assign(objs.size(), -1);
  out.arrow_of.assign(objs.size(), -1);
  out.projection = FinFunctor{C, I, std::vector<int>(objs.size()), std::vector<int>(mors.size())};
  for (const Obj& o : objs) {
    const auto k = static_cast<std::size_t>(C.object(o.name));
    out.object_of[k] = o.i;
    out.arrow_of[k] = o.u;
    out.projection.obj_map[k] = o.i;
  }
  for (const Mor& m : mors) out.projection.mor_map[static_cast<std::size_t>(C.morphism(m.name))] = m.h;
  return out;
}

}  // namespace

CommaCategory comma_over(const FinFunctor& alpha, int j) { return comma(alpha, j, true, false); }
CommaCategory comma_under(const FinFunctor& alpha, int j) { return comma(alpha, j, false, false); }

CommaCategory under_category(const FinCategory& c, const std::string& i) {
  return comma(identity_functor(c), c.object(i), false, true);
}

CommaCategory over_category(const FinCategory& c, const std::string& i) {
  return comma(identity_functor(c), c.object(i), true, true);
}

FinCategory opposite(const FinCategory& c) {
  FinCategory o = c;
  for (auto& m : o.morphisms) std::swap(m.src, m.dst);
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      o.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = c.comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
  return o;
}

int Nerve::index_of(const Chain& c) const {
  const auto& level = chains[c.arrows.size()];
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || *it != c) throw CategoryError("chain not in nerve");
  return static_cast<int>(it - level.begin());
}

Simplex Nerve::simplex(const Chain& c) const { return ez[c.arrows.size()][static_cast<std::size_t>(index_of(c))]; }

Nerve nerve(const FinCategory& c, int dim) {
  if (dim < 0) throw CategoryError("nerve dimension must be nonnegative");
  Nerve out;
  out.chains.resize(static_cast<std::size_t>(dim + 1));
  for (int o = 0; o < c.object_count(); ++o) out.chains[0].push_back(Chain{o, {}});
  for (int n = 1; n <= dim; ++n)
    for (const Chain& ch : out.chains[static_cast<std::size_t>(n - 1)]) {
      const int end = ch.arrows.empty() ? ch.start : c.dst(ch.arrows.back());
      for (int f = 0; f < c.morphism_count(); ++f) {
        if (c.src(f) != end) continue;
        Chain next = ch;
        next.arrows.push_back(f);
        out.chains[static_cast<std::size_t>(n)].push_back(std::move(next));
      }
    }
  for (auto& level : out.chains) std::sort(level.begin(), level.end());

  Levels lv;
  lv.resize(dim);
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) {
    const auto un = static_cast<std::size_t>(n);
    lv.count[un] = static_cast<int>(out.chains[un].size());
    for (const Chain& ch : out.chains[un]) {
      std::string name;
      if (n == 0) name = c.objects[static_cast<std::size_t>(ch.start)];
      for (std::size_t k = 0; k < ch.arrows.size(); ++k)
        name += (k ? ";" : "") + c.morphisms[static_cast<std::size_t>(ch.arrows[k])].id;
      names[un].push_back(std::move(name));
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
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
              f.arrows.push_back(c.compose(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i - 1)]));
              continue;
            }
            f.arrows.push_back(a[static_cast<std::size_t>(k)]);
          }
          lv.face[un][static_cast<std::size_t>(i)].push_back(out.index_of(f));
        }
      if (n < dim)
        for (int j = 0; j <= n; ++j) {
          Chain s = ch;
          const int obj = j == 0 ? ch.start : c.dst(ch.arrows[static_cast<std::size_t>(j - 1)]);
          s.arrows.insert(s.arrows.begin() + j, c.identity[static_cast<std::size_t>(obj)]);
          lv.degen[un][static_cast<std::size_t>(j)].push_back(out.index_of(s));
        }
    }
  }
  FinitenessReport fin = is_homotopically_finite(c);
  const bool exact = fin.finite && fin.max_chain <= dim;
  Normalized nz = normalize(lv, !exact, &names);
  out.set = nz.set;
  out.ez = std::move(nz.ez);
  return out;
}

FinitenessReport is_homotopically_finite(const FinCategory& c) {
  // Nondegenerate chains are paths of non-identity arrows: finite iff that
  // graph is acyclic, and then the longest path bounds the dimension.
  FinitenessReport r;
  const int n = c.object_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0), longest(static_cast<std::size_t>(n), 0);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  std::function<bool(int)> visit = [&](int o) {
    state[static_cast<std::size_t>(o)] = 1;
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.src(f) != o || c.is_identity(f)) continue;
      const int t = c.dst(f);
      if (state[static_cast<std::size_t>(t)] == 1) {
        // Cycle: walk back along `via` from o to t.
        std::vector<int> loop{f};
        for (int cur = o; cur != t;) {
          const int g = via[static_cast<std::size_t>(cur)];
          loop.push_back(g);
          cur = c.src(g);
        }
        std::reverse(loop.begin(), loop.end());
        r.finite = false;
        r.loop = loop;
        return false;
      }
      if (state[static_cast<std::size_t>(t)] == 0) {
        via[static_cast<std::size_t>(t)] = f;
        if (!visit(t)) return false;
      }
      longest[static_cast<std::size_t>(o)] = std::max(longest[static_cast<std::size_t>(o)], 1 + longest[static_cast<std::size_t>(t)]);
    }
    state[static_cast<std::size_t>(o)] = 2;
    return true;
  };
  for (int o = 0; o < n; ++o)
    if (state[static_cast<std::size_t>(o)] == 0 && !visit(o)) return r;
  for (int o = 0; o < n; ++o) r.max_chain = std::max(r.max_chain, longest[static_cast<std::size_t>(o)]);
  return r;
}

FinCategory terminal_category() { return FinCategory::Builder().object("*").identity("*", "id").build(); }

FinCategory discrete_category(const std::vector<std::string>& objects) {
  FinCategory::Builder b;
  for (const auto& o : objects) b.object(o);
  return b.build();
}

FinCategory poset_category(const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& less) {
  FinCategory::Builder b;
  for (const auto& o : objects) b.object(o);
  auto name = [](const std::string& x, const std::string& y) { return x + "<" + y; };
  for (const auto& [x, y] : less) b.morphism(name(x, y), x, y);
  for (const auto& [x, y] : less)
    for (const auto& [y2, z] : less)
      if (y == y2) b.composite(name(y, z), name(x, y), name(x, z));
  return b.build();
}

FinCategory arrow_category() { return FinCategory::Builder().object("a").object("b").morphism("f", "a", "b").build(); }

FinCategory span_category() {
  return FinCategory::Builder().object("a").object("b").object("c").morphism("l", "c", "a").morphism("r", "c", "b").build();
}

FinCategory cospan_category() {
  return FinCategory::Builder().object("a").object("b").object("c").morphism("l", "a", "c").morphism("r", "b", "c").build();
}

FinCategory cyclic_group_category(int order) {
  FinCategory::Builder b;
  b.object("*").identity("*", "g0");
  for (int k = 1; k < order; ++k) b.morphism("g" + std::to_string(k), "*", "*");
  for (int x = 1; x < order; ++x)
    for (int y = 1; y < order; ++y)
      b.composite("g" + std::to_string(x), "g" + std::to_string(y), "g" + std::to_string((x + y) % order));
  return b.build();
}

FinCategory idempotent_category() {
  return FinCategory::Builder().object("*").identity("*", "id").morphism("e", "*", "*").composite("e", "e", "e").build();
}

}  // namespace wfskit
