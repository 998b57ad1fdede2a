#include "wfskit/sobj.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wfskit/mapping.hpp"
#include "wfskit/search.hpp"

namespace wfskit {

namespace {

/// Highest level that both presentations determine, capped at the object's truncation.
int top_level(const SimpObject& x) {
  int t = x.trunc;
  for (const SSet* s : {&x.total(), &x.index()})
    if (auto d = s->truncated_at()) t = std::min(t, *d);
  return t;
}

struct Fibres {
  Tabulation tb;
  Tabulation te;
  std::vector<std::vector<int>> p;                   // level map E -> B
  std::vector<std::vector<std::vector<int>>> fibre;  // [n][x] -> elements of E_n
};

Fibres fibres(const SSetMap& p, int top) {
  Fibres f{tabulate(p.target, top), tabulate(p.source, top), {}, {}};
  f.p = level_map(p, f.te, f.tb);
  f.fibre.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    f.fibre[un].resize(static_cast<std::size_t>(f.tb.levels.count[un]));
    for (std::size_t e = 0; e < f.p[un].size(); ++e) f.fibre[un][static_cast<std::size_t>(f.p[un][e])].push_back(static_cast<int>(e));
  }
  return f;
}

std::vector<int> faces_of(const Levels& lv, int n, int x) {
  std::vector<int> out;
  if (n == 0) return out;
  for (int i = 0; i <= n; ++i) out.push_back(lv.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
  return out;
}

/// Compatible face tuples (t_0, ..., t_n) of the boundary of delta(n), t_i from
/// cand[i] (level n-1 of lv): d_i t_j = d_{j-1} t_i for i < j.
void boundary_tuples(int n, const std::vector<std::vector<int>>& cand, const Levels& lv,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 0) {
    emit({});
    return;
  }
  std::vector<int> t(static_cast<std::size_t>(n + 1));
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      emit(t);
      return;
    }
    for (int c : cand[static_cast<std::size_t>(j)]) {
      bool ok = true;
      if (n >= 2)
        for (int i = 0; i < j && ok; ++i)
          ok = lv.face[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] ==
               lv.face[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      if (!ok) continue;
      t[static_cast<std::size_t>(j)] = c;
      rec(j + 1);
    }
  };
  rec(0);
}

struct FibrePower {
  SSet set;
  SSetMap to_index;
  std::optional<Pullback> pb;
};

std::vector<FibrePower> fibre_powers(const SimpObject& x, int s) {
  std::vector<FibrePower> out{{x.index(), SSetMap::identity(x.index()), std::nullopt}};
  if (s >= 1) out.push_back({x.total(), x.p, std::nullopt});
  for (int k = 2; k <= s; ++k) {
    Pullback pb = pullback(out.back().to_index, x.p);
    out.push_back({pb.set, compose(x.p, pb.second), pb});
  }
  return out;
}

std::vector<SSetMap> fibre_power_maps(const SimpMorphism& f, const std::vector<FibrePower>& px,
                                      const std::vector<FibrePower>& py) {
  std::vector<SSetMap> out{f.index};
  if (px.size() >= 2) out.push_back(f.total);
  for (std::size_t k = 2; k < px.size(); ++k)
    out.push_back(pairing(*py[k].pb, compose(out[k - 1], px[k].pb->first), compose(f.total, px[k].pb->second)));
  return out;
}

int max_member(const Family& a) { return a.family.empty() ? 0 : *std::max_element(a.family.begin(), a.family.end()); }

std::string verdict_reason(const Family& p, const std::string& what) {
  std::string s = "Hom(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p.family[i]);
  return s + ", f) " + what;
}

}  // namespace

void SimpMorphism::validate() const {
  source.p.validate();
  target.p.validate();
  total.validate();
  index.validate();
  if (compose(target.p, total).assign != compose(index, source.p).assign)
    throw SSetError("morphism of simplicial objects does not commute with the projections");
}

SimpObject empty_object(int trunc) {
  SSet e = empty_sset();
  return SimpObject{SSetMap{e, e, {}}, trunc};
}

SimpMorphism identity(const SimpObject& x) {
  return {x, x, SSetMap::identity(x.total()), SSetMap::identity(x.index())};
}

SimpMorphism compose(const SimpMorphism& g, const SimpMorphism& f) {
  return {f.source, g.target, compose(g.total, f.total), compose(g.index, f.index)};
}

SimpMorphism initial_map(const SimpObject& x) {
  return {empty_object(x.trunc), x, from_empty(x.total()), from_empty(x.index())};
}

Family level(const SimpObject& x, int n) {
  Fibres f = fibres(x.p, n);
  std::vector<int> sizes;
  for (const auto& fib : f.fibre[static_cast<std::size_t>(n)]) sizes.push_back(static_cast<int>(fib.size()));
  Family out = make_family(sizes);
  for (std::size_t i = 0; i < out.size(); ++i) out.index[i] = f.tb.set.to_string(f.tb.simplices[static_cast<std::size_t>(n)][i]);
  return out;
}

SimpObject tensor(const Family& a, const SSet& k, int trunc) {
  int sum = 0;
  SetMap owner{0, static_cast<int>(a.size()), {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a.family[i];
    for (int e = 0; e < a.family[i]; ++e) owner.values.push_back(static_cast<int>(i));
  }
  owner.source = sum;
  Product b = product(k, discrete(static_cast<int>(a.size())));
  Product e = product(k, discrete(sum));
  return SimpObject{product_map(e, b, SSetMap::identity(k), discrete_map(owner)), trunc};
}

SimpObject constant(const Family& a, int trunc) { return tensor(a, point(), trunc); }

HomLeft hom_left(const SSet& k, const SimpObject& x) {
  HomLeft out;
  const int depth = search_depth(k);
  Tabulation tb = tabulate(x.index(), depth), te = tabulate(x.total(), depth);
  std::vector<int> sizes;
  for (const SSetMap& beta : all_maps(k, x.index())) {
    MapSearch s(k, te);
    s.over(x.p, beta, tb);
    out.index.push_back(beta);
    out.members.push_back(s.all());
    sizes.push_back(static_cast<int>(out.members.back().size()));
  }
  out.object = make_family(sizes);
  return out;
}

SSet hom_right(const Family& a, const SimpObject& x) {
  std::vector<FibrePower> powers = fibre_powers(x, max_member(a));
  if (a.size() == 1) return powers[static_cast<std::size_t>(a.family[0])].set;
  SSet acc = point();
  for (int s : a.family) acc = product(acc, powers[static_cast<std::size_t>(s)].set).set;
  return acc;
}

SSetMap hom_right(const Family& a, const SimpMorphism& f) {
  const int m = max_member(a);
  std::vector<FibrePower> px = fibre_powers(f.source, m), py = fibre_powers(f.target, m);
  std::vector<SSetMap> maps = fibre_power_maps(f, px, py);
  if (a.size() == 1) return maps[static_cast<std::size_t>(a.family[0])];
  SSet ax = point(), ay = point();
  SSetMap acc = SSetMap::identity(ax);
  for (int s : a.family) {
    Product sx = product(ax, px[static_cast<std::size_t>(s)].set);
    Product sy = product(ay, py[static_cast<std::size_t>(s)].set);
    acc = product_map(sx, sy, acc, maps[static_cast<std::size_t>(s)]);
    ax = sx.set;
    ay = sy.set;
  }
  return acc;
}

CofibrancyResult is_cofibrant(const SimpObject& x) {
  CofibrancyResult r;
  r.trunc = top_level(x);
  Fibres f = fibres(x.p, r.trunc);
  r.cofibrant = true;
  for (int n = 0; n <= r.trunc; ++n) {
    const auto un = static_cast<std::size_t>(n);
    LevelCertificate cert{n, {}, {}};
    for (int e = 0; e < f.tb.levels.count[un]; ++e) {
      const Simplex& s = f.tb.simplices[un][static_cast<std::size_t>(e)];
      if (s.nondegenerate()) {
        cert.nondegenerate.push_back(e);
        continue;
      }
      const int k = s.sigma.codomain;
      const int base = f.tb.index_of_nd(s.nd);
      if (f.fibre[un][static_cast<std::size_t>(e)].size() != f.fibre[static_cast<std::size_t>(k)][static_cast<std::size_t>(base)].size()) {
        r.cofibrant = false;
        r.failed_level = n;
        r.detail = "degeneracy " + degeneracy_word(s.sigma) + " of " + f.tb.set.nd(s.nd).name + " has " +
                   std::to_string(f.fibre[un][static_cast<std::size_t>(e)].size()) + " fibre elements but " +
                   f.tb.set.nd(s.nd).name + " has " +
                   std::to_string(f.fibre[static_cast<std::size_t>(k)][static_cast<std::size_t>(base)].size()) +
                   ": not a coproduct injection at level " + std::to_string(n);
        r.certificate.clear();
        return r;
      }
      cert.degenerate.push_back({e, degeneracy_word(s.sigma), s.nd});
    }
    r.certificate.push_back(std::move(cert));
  }
  return r;
}

bool verify_cofibrancy(const SimpObject& x, const CofibrancyResult& r) {
  if (!r.cofibrant) return false;
  const int top = std::min(r.trunc, top_level(x));
  if (static_cast<int>(r.certificate.size()) != top + 1) return false;
  Tabulation tb = tabulate(x.index(), top), te = tabulate(x.total(), top);
  std::vector<std::vector<int>> p = level_map(x.p, te, tb);
  for (const LevelCertificate& c : r.certificate) {
    const auto un = static_cast<std::size_t>(c.level);
    std::vector<int> seen = c.nondegenerate;
    for (int e : c.nondegenerate)
      if (!tb.simplices[un][static_cast<std::size_t>(e)].nondegenerate()) return false;
    for (const DegenerateSummand& d : c.degenerate) {
      seen.push_back(d.element);
      const int k = tb.set.nd(d.base).dim;
      Monotone theta = parse_degeneracy_word(d.word, k);
      if (tb.set.apply(Simplex::generator(d.base, k), theta) != tb.simplices[un][static_cast<std::size_t>(d.element)]) return false;
      // Applying theta to the base fibre must give the whole fibre of the element.
      const int base = tb.index_of_nd(d.base);
      std::set<int> image, fibre;
      for (std::size_t e = 0; e < p[static_cast<std::size_t>(k)].size(); ++e)
        if (p[static_cast<std::size_t>(k)][e] == base)
          image.insert(te.index_of(te.set.apply(te.simplices[static_cast<std::size_t>(k)][e], theta)));
      for (std::size_t e = 0; e < p[un].size(); ++e)
        if (p[un][e] == d.element) fibre.insert(static_cast<int>(e));
      if (image != fibre) return false;
    }
    std::sort(seen.begin(), seen.end());
    if (static_cast<int>(seen.size()) != tb.levels.count[un] || std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return false;
  }
  return true;
}

std::optional<int> degeneracy_failure(const SimpObject& x) {
  CofibrancyResult r = is_cofibrant(x);
  if (r.cofibrant) return std::nullopt;
  return r.failed_level;
}

LatchingData latching(const SimpObject& x, int n) {
  if (auto bad = degeneracy_failure(x); bad && *bad <= n)
    throw UnsupportedError("latching object: degeneracies into level " + std::to_string(*bad) +
                           " are not coproduct injections");
  Fibres f = fibres(x.p, n);
  LatchingData out;
  std::vector<int> sizes;
  const auto un = static_cast<std::size_t>(n);
  for (int e = 0; e < f.tb.levels.count[un]; ++e)
    if (!f.tb.simplices[un][static_cast<std::size_t>(e)].nondegenerate()) {
      out.elements.push_back(e);
      sizes.push_back(static_cast<int>(f.fibre[un][static_cast<std::size_t>(e)].size()));
    }
  out.object = make_family(sizes);
  return out;
}

Family matching(const SimpObject& x, int n) { return hom_left(boundary(n), x).object; }

ReedyResult reedy_factorize(const SimpMorphism& f, int trunc) {
  const SimpObject& X = f.source;
  const SimpObject& Y = f.target;
  ReedyResult out;
  out.trunc = std::min(trunc, top_level(Y));
  const int T = out.trunc;

  // Z starts as the T-skeleton of X; new cells are appended level by level.
  SSet::Builder bb, eb;
  std::vector<Simplex> pz, fb, fe;
  auto copy = [T](const SSet& s, SSet::Builder& b, std::vector<int>& remap) {
    remap.assign(static_cast<std::size_t>(s.size()), -1);
    for (int k = 0; k <= std::min(T, s.top_dim()); ++k)
      for (int id : s.nd_of_dim(k)) {
        std::vector<Simplex> faces = s.nd(id).faces;
        for (Simplex& fc : faces) fc.nd = remap[static_cast<std::size_t>(fc.nd)];
        remap[static_cast<std::size_t>(id)] = b.add(s.nd(id).name, k, std::move(faces));
      }
  };
  std::vector<int> rb, re;
  copy(X.index(), bb, rb);
  copy(X.total(), eb, re);
  auto moved = [](Simplex s, const std::vector<int>& remap) {
    s.nd = remap[static_cast<std::size_t>(s.nd)];
    return s;
  };
  std::vector<int> back_b(static_cast<std::size_t>(X.index().size())), back_e(static_cast<std::size_t>(X.total().size()));
  std::vector<int> order_b, order_e;
  for (int id = 0; id < X.index().size(); ++id)
    if (rb[static_cast<std::size_t>(id)] >= 0) order_b.push_back(id);
  for (int id = 0; id < X.total().size(); ++id)
    if (re[static_cast<std::size_t>(id)] >= 0) order_e.push_back(id);
  std::sort(order_b.begin(), order_b.end(), [&](int a, int b) { return rb[static_cast<std::size_t>(a)] < rb[static_cast<std::size_t>(b)]; });
  std::sort(order_e.begin(), order_e.end(), [&](int a, int b) { return re[static_cast<std::size_t>(a)] < re[static_cast<std::size_t>(b)]; });
  for (int id : order_b) fb.push_back(f.index(id));
  for (int id : order_e) {
    pz.push_back(moved(X.p(id), rb));
    fe.push_back(f.total(id));
  }
  const bool clipped = X.index().top_dim() > T || X.total().top_dim() > T || X.index().truncated_at() ||
                       X.total().truncated_at();
  SSet::Builder xb = bb, xe = eb;
  if (clipped) {
    xb.set_truncated_at(T);
    xe.set_truncated_at(T);
  }
  SimpObject xt{SSetMap{xe.build_unchecked(), xb.build_unchecked(), pz}, X.trunc};

  Fibres fy = fibres(Y.p, T);
  for (int n = 0; n <= T; ++n) {
    const auto un = static_cast<std::size_t>(n);
    SSet B = SSet::Builder(bb).build_unchecked(), E = SSet::Builder(eb).build_unchecked();
    Tabulation tB = tabulate(B, n), tE = tabulate(E, n);
    auto pl = level_map(SSetMap{E, B, pz}, tE, tB);
    auto bl = level_map(SSetMap{B, Y.index(), fb}, tB, fy.tb);
    auto el = level_map(SSetMap{E, Y.total(), fe}, tE, fy.te);
    std::vector<std::vector<int>> fibre(static_cast<std::size_t>(tB.levels.count[un]));
    for (std::size_t e = 0; e < pl[un].size(); ++e) fibre[static_cast<std::size_t>(pl[un][e])].push_back(static_cast<int>(e));

    // Corner images of the existing level-n members.
    using Elem = std::pair<std::vector<int>, int>;
    std::map<Elem, std::vector<std::set<Elem>>> existing;
    for (int x = 0; x < tB.levels.count[un]; ++x) {
      std::set<Elem> image;
      for (int e : fibre[static_cast<std::size_t>(x)]) image.insert({faces_of(tE.levels, n, e), el[un][static_cast<std::size_t>(e)]});
      existing[{faces_of(tB.levels, n, x), bl[un][static_cast<std::size_t>(x)]}].push_back(std::move(image));
    }

    int added = 0;
    for (int y = 0; y < fy.tb.levels.count[un]; ++y) {
      std::vector<int> dy = faces_of(fy.tb.levels, n, y);
      std::vector<std::vector<int>> cand(static_cast<std::size_t>(n + 1));
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          for (int b = 0; b < tB.levels.count[un - 1]; ++b)
            if (bl[un - 1][static_cast<std::size_t>(b)] == dy[static_cast<std::size_t>(i)]) cand[static_cast<std::size_t>(i)].push_back(b);
      boundary_tuples(n, cand, tB.levels, [&](const std::vector<int>& beta) {
        std::vector<Elem> member;
        for (int ey : fy.fibre[un][static_cast<std::size_t>(y)]) {
          std::vector<int> de = faces_of(fy.te.levels, n, ey);
          std::vector<std::vector<int>> ec(static_cast<std::size_t>(n + 1));
          if (n >= 1)
            for (int i = 0; i <= n; ++i)
              for (int s = 0; s < tE.levels.count[un - 1]; ++s)
                if (pl[un - 1][static_cast<std::size_t>(s)] == beta[static_cast<std::size_t>(i)] &&
                    el[un - 1][static_cast<std::size_t>(s)] == de[static_cast<std::size_t>(i)])
                  ec[static_cast<std::size_t>(i)].push_back(s);
          boundary_tuples(n, ec, tE.levels, [&](const std::vector<int>& sigma) { member.push_back({sigma, ey}); });
        }
        std::sort(member.begin(), member.end());
        auto it = existing.find({beta, y});
        if (it != existing.end())
          for (const std::set<Elem>& image : it->second)
            if (std::includes(image.begin(), image.end(), member.begin(), member.end())) return;
        // Not covered by a surjective member: glue a copy of the corner member.
        std::vector<Simplex> faces;
        for (int b : beta) faces.push_back(tB.simplices[un - 1][static_cast<std::size_t>(b)]);
        const int cell = bb.add("+" + std::to_string(n) + "." + std::to_string(added++), n, std::move(faces));
        fb.push_back(fy.tb.simplices[un][static_cast<std::size_t>(y)]);
        int k = 0;
        for (const auto& [sigma, ey] : member) {
          std::vector<Simplex> ef;
          for (int s : sigma) ef.push_back(tE.simplices[un - 1][static_cast<std::size_t>(s)]);
          eb.add("+" + std::to_string(n) + "." + std::to_string(cell) + "." + std::to_string(k++), n, std::move(ef));
          pz.push_back(Simplex::generator(cell, n));
          fe.push_back(fy.te.simplices[un][static_cast<std::size_t>(ey)]);
        }
      });
    }
    out.cells.push_back(added);
  }
  bb.set_truncated_at(T);
  eb.set_truncated_at(T);
  SSet B = bb.build(), E = eb.build();
  out.middle = SimpObject{SSetMap{E, B, pz}, T};
  SSetMap lt{xt.total(), E, {}}, li{xt.index(), B, {}};
  for (int id = 0; id < xt.total().size(); ++id) lt.assign.push_back(Simplex::generator(id, xt.total().nd(id).dim));
  for (int id = 0; id < xt.index().size(); ++id) li.assign.push_back(Simplex::generator(id, xt.index().nd(id).dim));
  out.left = SimpMorphism{xt, out.middle, lt, li};
  out.right = SimpMorphism{out.middle, Y, SSetMap{E, Y.total(), fe}, SSetMap{B, Y.index(), fb}};
  return out;
}

ReedyCheck verify_reedy(const ReedyResult& r) {
  ReedyCheck c;
  const int T = r.trunc;
  auto fail = [&c](bool& flag, const std::string& why) {
    if (flag) c.detail = why;
    flag = false;
  };
  // Left leg: injective on members, bijective on each member.
  {
    const SimpMorphism& l = r.left;
    const int top = std::min(T, top_level(l.source));
    Fibres fx = fibres(l.source.p, top), fz = fibres(l.target.p, top);
    auto bi = level_map(l.index, fx.tb, fz.tb);
    auto ei = level_map(l.total, fx.te, fz.te);
    for (int n = 0; n <= top && c.left_ok; ++n) {
      const auto un = static_cast<std::size_t>(n);
      std::vector<int> img = bi[un];
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) fail(c.left_ok, "left leg identifies members at level " + std::to_string(n));
      for (std::size_t x = 0; x < bi[un].size() && c.left_ok; ++x) {
        std::set<int> image;
        for (int e : fx.fibre[un][x]) image.insert(ei[un][static_cast<std::size_t>(e)]);
        const auto& target = fz.fibre[un][static_cast<std::size_t>(bi[un][x])];
        if (image.size() != fx.fibre[un][x].size() || image.size() != target.size())
          fail(c.left_ok, "left leg is not a bijection on a member at level " + std::to_string(n));
      }
    }
  }
  // Right leg: the matching corner is split epi at every level.
  const SimpMorphism& q = r.right;
  const SimpObject& Z = q.source;
  const SimpObject& Y = q.target;
  Fibres fz = fibres(Z.p, T), fy = fibres(Y.p, T);
  using Elem = std::pair<std::vector<Simplex>, int>;
  for (int n = 0; n <= T && c.right_ok; ++n) {
    const auto un = static_cast<std::size_t>(n);
    SSetMap incl = boundary_inclusion(n);
    const SSet& sphere = incl.source;
    auto bdry = [&](const SSet& s, const Simplex& x) { return compose(yoneda(s, x), incl).assign; };
    // Images of the existing members, keyed by (boundary, image in Y).
    std::map<std::pair<std::vector<Simplex>, int>, std::vector<std::set<Elem>>> images;
    for (int z = 0; z < fz.tb.levels.count[un]; ++z) {
      const Simplex& zs = fz.tb.simplices[un][static_cast<std::size_t>(z)];
      std::set<Elem> image;
      for (int e : fz.fibre[un][static_cast<std::size_t>(z)]) {
        const Simplex& es = fz.te.simplices[un][static_cast<std::size_t>(e)];
        image.insert({bdry(Z.total(), es), fy.te.index_of(q.total(es))});
      }
      images[{bdry(Z.index(), zs), fy.tb.index_of(q.index(zs))}].push_back(std::move(image));
    }
    const int depth = search_depth(sphere);
    Tabulation tzb = tabulate(Z.index(), depth), tze = tabulate(Z.total(), depth);
    Tabulation tyb = tabulate(Y.index(), depth);
    for (int y = 0; y < fy.tb.levels.count[un] && c.right_ok; ++y) {
      SSetMap dy = compose(yoneda(Y.index(), fy.tb.simplices[un][static_cast<std::size_t>(y)]), incl);
      MapSearch betas(sphere, tzb);
      betas.over(q.index, dy, tyb).budget(UINT64_MAX);
      for (const SSetMap& beta : betas.all()) {
        std::set<Elem> member;
        MapSearch lifts(sphere, tze);
        lifts.over(Z.p, beta, tzb).budget(UINT64_MAX);
        std::vector<SSetMap> over_beta = lifts.all();
        for (int ey : fy.fibre[un][static_cast<std::size_t>(y)]) {
          const auto de = bdry(Y.total(), fy.te.simplices[un][static_cast<std::size_t>(ey)]);
          for (const SSetMap& s : over_beta)
            if (compose(q.total, s).assign == de) member.insert({s.assign, ey});
        }
        bool covered = false;
        auto it = images.find({beta.assign, y});
        if (it != images.end())
          for (const auto& image : it->second)
            covered = covered || std::includes(image.begin(), image.end(), member.begin(), member.end());
        if (!covered) {
          fail(c.right_ok, "matching corner of the right leg is not split epi at level " + std::to_string(n));
          break;
        }
      }
    }
  }
  return c;
}

RlpCofibrancy is_cofibrant_rlp(const SimpObject& x, std::uint64_t budget) {
  RlpCofibrancy out;
  out.replacement = reedy_factorize(initial_map(x), x.trunc);
  const SimpMorphism& q = out.replacement.right;
  const SimpObject& z = q.source;
  if (x.index().top_dim() > out.replacement.trunc || x.total().top_dim() > out.replacement.trunc) {
    out.conclusive = false;
    return out;
  }
  const SSet& bx = x.index();
  const SSet& ex = x.total();
  Tabulation tbz = tabulate(z.index(), std::max(search_depth(bx), 0));
  Tabulation tbx = tabulate(bx, std::max(search_depth(bx), 0));
  Tabulation tez = tabulate(z.total(), std::max(search_depth(ex), 0));
  Tabulation tex = tabulate(ex, std::max(search_depth(ex), 0));
  MapSearch gs(bx, tbz);
  gs.over(q.index, SSetMap::identity(bx), tbx).budget(budget);
  std::uint64_t spent = 0;
  SearchStatus st = gs.run([&](const SSetMap& g) {
    const auto want = compose(g, x.p).assign;
    MapSearch hs(ex, tez);
    hs.over(q.total, SSetMap::identity(ex), tex).budget(budget > spent ? budget - spent : 1);
    SearchStatus hst = hs.run([&](const SSetMap& h) {
      if (compose(z.p, h).assign != want) return true;
      out.section = SimpMorphism{x, z, h, g};
      return false;
    });
    spent += hs.nodes();
    if (hst == SearchStatus::budget) out.conclusive = false;
    return !out.section;
  });
  if (st == SearchStatus::budget) out.conclusive = false;
  out.cofibrant = out.section.has_value();
  if (out.cofibrant) out.conclusive = true;
  return out;
}

std::vector<Family> default_projectives(const std::vector<SimpObject>& inputs, int max_size) {
  std::set<int> sizes{1};
  for (const SimpObject& x : inputs) {
    const int top = top_level(x);
    Fibres f = fibres(x.p, top);
    for (const auto& lv : f.fibre)
      for (const auto& fib : lv)
        if (static_cast<int>(fib.size()) <= max_size) sizes.insert(static_cast<int>(fib.size()));
  }
  std::vector<Family> out;
  for (int s : sizes) out.push_back(Family{{s}, {"*"}});
  return out;
}

namespace {
ClassVerdict aggregate(std::vector<ProjectiveVerdict> per, int trunc) {
  ClassVerdict v;
  v.trunc = trunc;
  for (const auto& p : per) {
    if (p.verdict == Verdict::fail) v.verdict = Verdict::fail;
    else if (p.verdict == Verdict::inconclusive && v.verdict == Verdict::pass) v.verdict = Verdict::inconclusive;
  }
  v.per_projective = std::move(per);
  return v;
}
}  // namespace

ClassVerdict is_fibration(const SimpMorphism& f, const std::vector<Family>& projectives, int dim,
                          std::uint64_t budget) {
  std::vector<ProjectiveVerdict> per;
  for (const Family& p : projectives) {
    RlpReport r = is_kan_fibration(hom_right(p, f), dim, budget);
    ProjectiveVerdict v{p, Verdict::pass, verdict_reason(p, "is a Kan fibration")};
    if (r.status == LiftStatus::no_lift) {
      v.verdict = Verdict::fail;
      v.reason = verdict_reason(p, "has an unfillable horn (generator " + std::to_string(r.generator) + ")");
    } else if (r.status == LiftStatus::budget) {
      v.verdict = Verdict::inconclusive;
      v.reason = verdict_reason(p, "exhausted the search budget");
    }
    per.push_back(std::move(v));
  }
  return aggregate(std::move(per), dim);
}

ClassVerdict is_weq(const SimpMorphism& f, const std::vector<Family>& projectives, int trunc) {
  std::vector<ProjectiveVerdict> per;
  int used = trunc;
  for (const Family& p : projectives) {
    SSetMap m = hom_right(p, f);
    int t = trunc;
    for (const SSet* s : {&m.source, &m.target})
      if (auto d = s->truncated_at()) t = std::min(t, *d - 1);
    used = std::min(used, t);
    WeqReport w = weq_oracle(m, std::max(t, 0));
    per.push_back({p, w.verdict, verdict_reason(p, w.verdict == Verdict::pass ? "is a weak equivalence" : w.reason)});
  }
  return aggregate(std::move(per), used);
}

SimpPullback pullback(const SimpMorphism& f, const SimpMorphism& g) {
  Pullback e = pullback(f.total, g.total);
  Pullback b = pullback(f.index, g.index);
  SSetMap p = pairing(b, compose(f.source.p, e.first), compose(g.source.p, e.second));
  SimpObject obj{p, std::min(f.source.trunc, g.source.trunc)};
  return {obj, SimpMorphism{obj, f.source, e.first, b.first}, SimpMorphism{obj, g.source, e.second, b.second}};
}

SSetMap collapse_levelwise(const SimpMorphism& f) { return f.total; }

std::vector<SimpMorphism> all_morphisms(const SimpObject& x, const SimpObject& y, std::size_t cap) {
  std::vector<SimpMorphism> out;
  const int depth = std::max(search_depth(x.total()), 0);
  Tabulation te = tabulate(y.total(), depth), tb = tabulate(y.index(), depth);
  for (const SSetMap& g : all_maps(x.index(), y.index())) {
    MapSearch s(x.total(), te);
    s.over(y.p, compose(g, x.p), tb);
    s.run([&](const SSetMap& h) {
      out.push_back(SimpMorphism{x, y, h, g});
      return out.size() < cap;
    });
    if (out.size() >= cap) break;
  }
  return out;
}

}  // namespace wfskit
