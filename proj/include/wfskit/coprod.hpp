#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "wfskit/fincat.hpp"
#include "wfskit/finset.hpp"

namespace wfskit {

// A category with enumerable hom-sets and a finite fragment of objects that
// universal properties are tested against.
template <class C>
concept EnumerableCategory = requires(const C& c, const typename C::Obj& a, const typename C::Mor& f) {
  { c.objects() } -> std::same_as<std::vector<typename C::Obj>>;
  { c.hom(a, a) } -> std::same_as<std::vector<typename C::Mor>>;
  { c.compose(f, f) } -> std::same_as<typename C::Mor>;
  { c.identity(a) } -> std::same_as<typename C::Mor>;
  { c.source(f) } -> std::same_as<typename C::Obj>;
  { c.target(f) } -> std::same_as<typename C::Obj>;
  { c.name(a) } -> std::same_as<std::string>;
};

template <class O, class M>
struct CoproductCone {
  O apex;
  std::vector<M> injections;
};

template <class O, class M>
struct PullbackCone {
  O apex;
  M first;
  M second;
};

// Exhaustive universal-property checks ---------------------------------------------

template <class T>
bool all_distinct(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

template <EnumerableCategory C>
bool is_initial(const C& c, const typename C::Obj& o) {
  for (const auto& z : c.objects())
    if (c.hom(o, z).size() != 1) return false;
  return true;
}

template <EnumerableCategory C>
bool is_terminal(const C& c, const typename C::Obj& o) {
  for (const auto& z : c.objects())
    if (c.hom(z, o).size() != 1) return false;
  return true;
}

/// Hom(apex, z) -> prod Hom(a_i, z) is bijective for every z of the fragment.
template <EnumerableCategory C>
bool verify_coproduct(const C& c, const std::vector<typename C::Obj>& family,
                      const CoproductCone<typename C::Obj, typename C::Mor>& cone) {
  using M = typename C::Mor;
  if (cone.injections.size() != family.size()) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!(c.source(cone.injections[i]) == family[i]) || !(c.target(cone.injections[i]) == cone.apex)) return false;
  for (const auto& z : c.objects()) {
    std::size_t tuples = 1;
    for (const auto& a : family) tuples *= c.hom(a, z).size();
    std::vector<std::vector<M>> seen;
    for (const M& h : c.hom(cone.apex, z)) {
      std::vector<M> t;
      for (const M& j : cone.injections) t.push_back(c.compose(h, j));
      seen.push_back(std::move(t));
    }
    if (seen.size() != tuples || !all_distinct(std::move(seen))) return false;
  }
  return true;
}

/// Every commuting pair (u, v) from a fragment object factors uniquely.
template <EnumerableCategory C>
bool verify_pullback(const C& c, const typename C::Mor& f, const typename C::Mor& g,
                     const PullbackCone<typename C::Obj, typename C::Mor>& cone) {
  using M = typename C::Mor;
  if (!(c.compose(f, cone.first) == c.compose(g, cone.second))) return false;
  for (const auto& w : c.objects()) {
    std::vector<std::pair<M, M>> hit;
    for (const M& h : c.hom(w, cone.apex)) hit.emplace_back(c.compose(cone.first, h), c.compose(cone.second, h));
    std::size_t cones = 0;
    for (const M& u : c.hom(w, c.source(f)))
      for (const M& v : c.hom(w, c.source(g)))
        if (c.compose(f, u) == c.compose(g, v)) ++cones;
    if (cones != hit.size() || !all_distinct(std::move(hit))) return false;
  }
  return true;
}

template <EnumerableCategory C>
std::optional<typename C::Mor> inverse(const C& c, const typename C::Mor& f) {
  for (const auto& g : c.hom(c.target(f), c.source(f)))
    if (c.compose(g, f) == c.identity(c.source(f)) && c.compose(f, g) == c.identity(c.target(f))) return g;
  return std::nullopt;
}

template <EnumerableCategory C>
std::optional<typename C::Mor> find_iso(const C& c, const typename C::Obj& a, const typename C::Obj& b) {
  for (const auto& f : c.hom(a, b))
    if (inverse(c, f)) return f;
  return std::nullopt;
}

// Searches over the fragment: first cone (in enumeration order) that verifies.

template <EnumerableCategory C>
std::optional<typename C::Obj> search_initial(const C& c) {
  for (const auto& o : c.objects())
    if (is_initial(c, o)) return o;
  return std::nullopt;
}

template <EnumerableCategory C>
std::optional<typename C::Obj> search_terminal(const C& c) {
  for (const auto& o : c.objects())
    if (is_terminal(c, o)) return o;
  return std::nullopt;
}

template <EnumerableCategory C>
std::optional<CoproductCone<typename C::Obj, typename C::Mor>> search_coproduct(
    const C& c, const std::vector<typename C::Obj>& family) {
  using M = typename C::Mor;
  for (const auto& apex : c.objects()) {
    std::vector<std::vector<M>> choices;
    for (const auto& a : family) choices.push_back(c.hom(a, apex));
    std::vector<std::size_t> pick(family.size(), 0);
    if (std::any_of(choices.begin(), choices.end(), [](const auto& v) { return v.empty(); })) continue;
    while (true) {
      CoproductCone<typename C::Obj, M> cone{apex, {}};
      for (std::size_t i = 0; i < family.size(); ++i) cone.injections.push_back(choices[i][pick[i]]);
      if (verify_coproduct(c, family, cone)) return cone;
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return std::nullopt;
}

template <EnumerableCategory C>
std::optional<PullbackCone<typename C::Obj, typename C::Mor>> search_pullback(const C& c, const typename C::Mor& f,
                                                                              const typename C::Mor& g) {
  for (const auto& apex : c.objects())
    for (const auto& u : c.hom(apex, c.source(f)))
      for (const auto& v : c.hom(apex, c.source(g))) {
        PullbackCone<typename C::Obj, typename C::Mor> cone{apex, u, v};
        if (c.compose(f, u) == c.compose(g, v) && verify_pullback(c, f, g, cone)) return cone;
      }
  return std::nullopt;
}

// Bases ----------------------------------------------------------------------------

/// Finite sets {0..n-1}; the fragment is sizes 0..max_size.
class FinSetCategory {
 public:
  using Obj = int;
  using Mor = SetMap;

  explicit FinSetCategory(int max_size = 3) : max_size_(max_size) {}
  std::vector<int> objects() const;
  std::vector<SetMap> hom(int a, int b) const { return all_set_maps(a, b); }
  SetMap compose(const SetMap& g, const SetMap& f) const { return wfskit::compose(g, f); }
  SetMap identity(int a) const { return SetMap::identity(a); }
  int source(const SetMap& f) const { return f.source; }
  int target(const SetMap& f) const { return f.target; }
  std::string name(int a) const { return std::to_string(a); }

  std::optional<int> initial() const { return 0; }
  std::optional<int> terminal() const { return 1; }
  std::optional<CoproductCone<int, SetMap>> coproduct(const std::vector<int>& family) const;
  /// Pairs (x, y) with f(x) = g(y) in lexicographic order.
  std::optional<PullbackCone<int, SetMap>> pullback(const SetMap& f, const SetMap& g) const;

 private:
  int max_size_;
};

/// A finite category; limits are found by exhaustive search over all objects.
class FinCategoryBase {
 public:
  using Obj = int;
  using Mor = int;

  explicit FinCategoryBase(FinCategory c) : c_(std::move(c)) {}
  const FinCategory& category() const { return c_; }
  std::vector<int> objects() const;
  std::vector<int> hom(int a, int b) const { return c_.hom(a, b); }
  int compose(int g, int f) const { return c_.compose(g, f); }
  int identity(int a) const { return c_.identity[static_cast<std::size_t>(a)]; }
  int source(int f) const { return c_.src(f); }
  int target(int f) const { return c_.dst(f); }
  std::string name(int a) const { return c_.objects[static_cast<std::size_t>(a)]; }
  std::string morphism_name(int f) const { return c_.morphisms[static_cast<std::size_t>(f)].id; }

  std::optional<int> initial() const { return search_initial(*this); }
  std::optional<int> terminal() const { return search_terminal(*this); }
  std::optional<CoproductCone<int, int>> coproduct(const std::vector<int>& family) const {
    return search_coproduct(*this, family);
  }
  std::optional<PullbackCone<int, int>> pullback(int f, int g) const { return search_pullback(*this, f, g); }

 private:
  FinCategory c_;
};

/// Pointed-set-like category: E (initial, empty) and P1, P2, P3 where Pk has k
/// points including a basepoint, with basepoint-preserving maps. Wedge sums are
/// coproducts, so the two injections P2 -> P3 meet in P1, which is not initial.
FinCategory pointed_sets_category();

// Free coproduct completion ----------------------------------------------------------

template <class O>
struct CoprodObject {
  std::vector<O> family;
  std::vector<std::string> index;  // labels of the index set (x0, x1, ... by default)

  bool operator==(const CoprodObject& o) const { return family == o.family; }
  auto operator<=>(const CoprodObject& o) const { return family <=> o.family; }
  std::size_t size() const { return family.size(); }
};

template <class O>
CoprodObject<O> make_family(std::vector<O> family) {
  CoprodObject<O> out{std::move(family), {}};
  for (std::size_t i = 0; i < out.family.size(); ++i) out.index.push_back("x" + std::to_string(i));
  return out;
}

template <class O, class M>
struct CoprodMorphism {
  CoprodObject<O> source;
  CoprodObject<O> target;
  std::vector<int> index_map;
  std::vector<M> components;  // components[x] : S_x -> T_{index_map[x]}

  bool operator==(const CoprodMorphism& o) const {
    return source == o.source && target == o.target && index_map == o.index_map && components == o.components;
  }
  auto operator<=>(const CoprodMorphism& o) const {
    return std::tie(source, target, index_map, components) <=> std::tie(o.source, o.target, o.index_map, o.components);
  }
};

/// S^coprod over a base; the fragment is all families of base-fragment objects
/// with at most max_family members.
template <EnumerableCategory B>
class Completion {
 public:
  using Obj = CoprodObject<typename B::Obj>;
  using Mor = CoprodMorphism<typename B::Obj, typename B::Mor>;

  explicit Completion(B base, int max_family = 2) : base_(std::move(base)), max_family_(max_family) {}
  const B& base() const { return base_; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out{make_family<typename B::Obj>({})};
    std::vector<typename B::Obj> atoms = base_.objects();
    std::vector<std::vector<typename B::Obj>> layer{{}};
    for (int k = 1; k <= max_family_; ++k) {
      std::vector<std::vector<typename B::Obj>> next;
      for (const auto& f : layer)
        for (const auto& a : atoms) {
          auto g = f;
          g.push_back(a);
          out.push_back(make_family(g));
          next.push_back(std::move(g));
        }
      layer = std::move(next);
    }
    return out;
  }

  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    Mor cur{a, b, std::vector<int>(a.size(), 0), {}};
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
      if (x == a.size()) {
        out.push_back(cur);
        return;
      }
      for (std::size_t y = 0; y < b.size(); ++y) {
        cur.index_map[x] = static_cast<int>(y);
        for (const auto& m : base_.hom(a.family[x], b.family[y])) {
          cur.components.push_back(m);
          rec(x + 1);
          cur.components.pop_back();
        }
      }
    };
    rec(0);
    return out;
  }

  Mor compose(const Mor& g, const Mor& f) const {
    Mor out{f.source, g.target, {}, {}};
    for (std::size_t x = 0; x < f.index_map.size(); ++x) {
      const auto y = static_cast<std::size_t>(f.index_map[x]);
      out.index_map.push_back(g.index_map[y]);
      out.components.push_back(base_.compose(g.components[y], f.components[x]));
    }
    return out;
  }

  Mor identity(const Obj& a) const {
    Mor out{a, a, {}, {}};
    for (std::size_t x = 0; x < a.size(); ++x) {
      out.index_map.push_back(static_cast<int>(x));
      out.components.push_back(base_.identity(a.family[x]));
    }
    return out;
  }

  Obj source(const Mor& f) const { return f.source; }
  Obj target(const Mor& f) const { return f.target; }

  std::string name(const Obj& a) const {
    std::string s = "(";
    for (std::size_t x = 0; x < a.size(); ++x) s += (x ? "," : "") + base_.name(a.family[x]);
    return s + ")";
  }

  /// U : S -> S^coprod.
  Obj embed(const typename B::Obj& s) const { return CoprodObject<typename B::Obj>{{s}, {"*"}}; }
  Mor embed_map(const typename B::Mor& m) const {
    return Mor{embed(base_.source(m)), embed(base_.target(m)), {0}, {m}};
  }

  std::optional<Obj> initial() const { return make_family<typename B::Obj>({}); }
  std::optional<Obj> terminal() const {
    auto t = base_.terminal();
    if (!t) return std::nullopt;
    return embed(*t);
  }

  std::optional<CoproductCone<Obj, Mor>> coproduct(const std::vector<Obj>& family) const {
    CoproductCone<Obj, Mor> cone;
    for (const Obj& o : family) {
      cone.apex.family.insert(cone.apex.family.end(), o.family.begin(), o.family.end());
      for (const auto& l : o.index) cone.apex.index.push_back(std::to_string(cone.injections.size()) + "." + l);
      cone.injections.push_back(Mor{o, {}, {}, {}});
    }
    int offset = 0;
    for (Mor& j : cone.injections) {
      j.target = cone.apex;
      for (std::size_t x = 0; x < j.source.size(); ++x) {
        j.index_map.push_back(offset + static_cast<int>(x));
        j.components.push_back(base_.identity(j.source.family[x]));
      }
      offset += static_cast<int>(j.source.size());
    }
    return cone;
  }

  /// Component-wise: index pairs (x, y) over the same target index, each with
  /// the base pullback of the two components.
  std::optional<PullbackCone<Obj, Mor>> pullback(const Mor& f, const Mor& g) const {
    PullbackCone<Obj, Mor> cone{{}, Mor{{}, f.source, {}, {}}, Mor{{}, g.source, {}, {}}};
    for (std::size_t x = 0; x < f.index_map.size(); ++x)
      for (std::size_t y = 0; y < g.index_map.size(); ++y) {
        if (f.index_map[x] != g.index_map[y]) continue;
        auto p = base_.pullback(f.components[x], g.components[y]);
        if (!p) return std::nullopt;
        cone.apex.family.push_back(p->apex);
        cone.apex.index.push_back(f.source.index[x] + "*" + g.source.index[y]);
        cone.first.index_map.push_back(static_cast<int>(x));
        cone.first.components.push_back(p->first);
        cone.second.index_map.push_back(static_cast<int>(y));
        cone.second.components.push_back(p->second);
      }
    cone.first.source = cone.second.source = cone.apex;
    return cone;
  }

  /// Product as pullback over the terminal object.
  std::optional<PullbackCone<Obj, Mor>> product(const Obj& a, const Obj& b) const {
    auto t = base_.terminal();
    if (!t) return std::nullopt;
    auto bang = [&](const Obj& o) {
      Mor m{o, embed(*t), std::vector<int>(o.size(), 0), {}};
      for (const auto& s : o.family) {
        auto h = base_.hom(s, *t);
        if (h.size() != 1) return std::optional<Mor>{};
        m.components.push_back(h.front());
      }
      return std::optional<Mor>{m};
    };
    auto fa = bang(a), fb = bang(b);
    if (!fa || !fb) return std::nullopt;
    return pullback(*fa, *fb);
  }

 private:
  B base_;
  int max_family_;
};

// The coproduct functor and extensivity ---------------------------------------------

/// Left adjoint of U: the chosen base coproduct of the family.
template <EnumerableCategory B>
std::optional<CoproductCone<typename B::Obj, typename B::Mor>> collapse(const B& base,
                                                                        const CoprodObject<typename B::Obj>& t) {
  return base.coproduct(t.family);
}

/// Hom_S(coprod T, s) -> Hom(T, U s), h |-> (const, h o inj_x), is bijective.
template <EnumerableCategory B>
bool check_collapse_adjunction(const Completion<B>& c, const CoprodObject<typename B::Obj>& t,
                               const typename B::Obj& s) {
  auto cone = collapse(c.base(), t);
  if (!cone) return false;
  std::vector<typename Completion<B>::Mor> images;
  for (const auto& h : c.base().hom(cone->apex, s)) {
    typename Completion<B>::Mor m{t, c.embed(s), std::vector<int>(t.size(), 0), {}};
    for (const auto& j : cone->injections) m.components.push_back(c.base().compose(h, j));
    images.push_back(std::move(m));
  }
  return images.size() == c.hom(t, c.embed(s)).size() && all_distinct(std::move(images));
}

/// Hom(P, X) u Hom(P, Y) -> Hom(P, X u Y) is bijective (P connected) on the fragment.
template <EnumerableCategory C>
bool hom_preserves_coproducts(const C& c, const typename C::Obj& p) {
  for (const auto& x : c.objects())
    for (const auto& y : c.objects()) {
      auto cone = c.coproduct({x, y});
      if (!cone) continue;
      std::vector<typename C::Mor> hit;
      for (int side = 0; side < 2; ++side)
        for (const auto& h : c.hom(p, side ? y : x)) {
          hit.push_back(c.compose(cone->injections[static_cast<std::size_t>(side)], h));
        }
      if (hit.size() != c.hom(p, cone->apex).size() || !all_distinct(std::move(hit))) return false;
    }
  return true;
}

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::size_t instances = 0;
  std::string witness;
};

struct ExtensivityReport {
  std::vector<AxiomVerdict> axioms;
  bool complete = true;      // false when the budget ran out
  std::size_t skipped = 0;   // pairs whose coproduct is missing from the fragment
  std::size_t cap = 0;       // decompositions enumerated by the hom-formula check

  bool passes() const {
    return complete && std::all_of(axioms.begin(), axioms.end(), [](const AxiomVerdict& a) { return a.pass; });
  }
  const AxiomVerdict* find(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.axiom == name) return &a;
    return nullptr;
  }
};

/// Coproduct universality, disjointness and pull-back stability of binary
/// coproducts of fragment objects, plus optionally the decomposition formula
/// for Hom(S, A u B): every map factors as a sum of maps out of the pulled-back
/// summands, uniquely. `budget` bounds the number of instances examined.
template <EnumerableCategory C>
ExtensivityReport verify_extensive(const C& c, bool hom_formula = false, std::uint64_t budget = 1'000'000) {
  using M = typename C::Mor;
  ExtensivityReport rep;
  AxiomVerdict coprod{"coproducts"}, pbs{"pullbacks_of_injections"}, disjoint{"disjointness"},
      stable{"stability"}, formula{"hom_formula"};
  std::uint64_t spent = 0;
  auto spend = [&] {
    if (++spent > budget) rep.complete = false;
    return rep.complete;
  };
  auto fail = [](AxiomVerdict& v, const std::string& w) {
    if (v.pass) v.witness = w;
    v.pass = false;
  };
  const auto objs = c.objects();

  auto init = c.initial();
  ++coprod.instances;
  if (!init || !is_initial(c, *init)) fail(coprod, "no initial object");

  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (!spend()) break;
      auto cone = c.coproduct({a, b});
      if (!cone) {
        ++rep.skipped;
        continue;
      }
      const std::string label = c.name(a) + " u " + c.name(b);
      ++coprod.instances;
      if (!verify_coproduct(c, {a, b}, *cone)) fail(coprod, label + " is not a coproduct");

      const M& ia = cone->injections[0];
      const M& ib = cone->injections[1];
      ++pbs.instances;
      auto meet = c.pullback(ia, ib);
      if (!meet || !verify_pullback(c, ia, ib, *meet)) {
        fail(pbs, "no pullback of the injections of " + label);
        continue;
      }
      ++disjoint.instances;
      if (!is_initial(c, meet->apex))
        fail(disjoint, "pullback of the injections " + c.name(a) + " -> " + c.name(cone->apex) + " <- " + c.name(b) +
                           " is " + c.name(meet->apex) + ", which is not initial");

      for (const auto& z : objs)
        for (const M& f : c.hom(z, cone->apex)) {
          if (!spend()) break;
          ++stable.instances;
          auto pa = c.pullback(ia, f);
          auto pb = c.pullback(ib, f);
          std::ostringstream at;
          at << "along a map " << c.name(z) << " -> " << label;
          if (!pa || !pb) {
            fail(pbs, "no pullback of an injection " + at.str());
            continue;
          }
          // z must be the coproduct of the two pulled-back summands.
          CoproductCone<typename C::Obj, M> split{z, {pa->second, pb->second}};
          if (!verify_coproduct(c, {pa->apex, pb->apex}, split)) {
            fail(stable, c.name(pa->apex) + " u " + c.name(pb->apex) + " -> " + c.name(z) + " is not a coproduct " +
                             at.str());
            continue;
          }
          if (!hom_formula) continue;
          ++formula.instances;
          // f restricted to the summands factors through ia, ib uniquely.
          std::size_t found = 0;
          for (const M& fa : c.hom(pa->apex, a))
            if (c.compose(ia, fa) == c.compose(f, pa->second)) ++found;
          for (const M& fb : c.hom(pb->apex, b))
            if (c.compose(ib, fb) == c.compose(f, pb->second)) ++found;
          ++rep.cap;
          if (found != 2) fail(formula, "a map " + at.str() + " does not decompose uniquely");
        }
    }
  rep.axioms = {coprod, pbs, disjoint, stable};
  if (hom_formula) rep.axioms.push_back(formula);
  return rep;
}

}  // namespace wfskit
