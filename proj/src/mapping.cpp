#include "wfskit/mapping.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "wfskit/lifting.hpp"
#include "wfskit/search.hpp"

namespace wfskit {

SSetMap delta_map(const Monotone& theta) {
  SSet src = delta(theta.domain());
  SSet dst = delta(theta.codomain);
  SSetMap m{src, dst, {}};
  for (int id = 0; id < src.size(); ++id) {
    std::vector<int> verts;
    for (char c : src.nd(id).name) verts.push_back(theta(c - '0'));
    m.assign.push_back(delta_simplex(dst, verts));
  }
  return m;
}

SSet truncate(const SSet& x, int n) {
  if (x.top_dim() <= n && !x.truncated_at()) return x;
  SSet::Builder b;
  std::vector<int> remap(static_cast<std::size_t>(x.size()), -1);
  for (int k = 0; k <= std::min(n, x.top_dim()); ++k)
    for (int id : x.nd_of_dim(k)) {
      std::vector<Simplex> faces = x.nd(id).faces;
      for (Simplex& f : faces) f.nd = remap[static_cast<std::size_t>(f.nd)];
      remap[static_cast<std::size_t>(id)] = b.add(x.nd(id).name, k, std::move(faces));
    }
  int t = n;
  if (auto d = x.truncated_at()) t = std::min(t, *d);
  b.set_truncated_at(t);
  return b.build_unchecked();
}

namespace {

/// Levels of a simplicial set whose n-simplices are maps D_n -> y, with the
/// structure maps given by precomposition.
struct FunctorTable {
  Levels levels;
  std::vector<std::vector<SSetMap>> maps;
};

FunctorTable precomposition_table(int dim, const std::function<std::vector<SSetMap>(int)>& elements,
                                  const std::function<SSetMap(int, int)>& coface,
                                  const std::function<SSetMap(int, int)>& codegeneracy) {
  FunctorTable t;
  t.levels.resize(dim);
  std::vector<std::map<std::vector<Simplex>, int>> index(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) {
    const auto un = static_cast<std::size_t>(n);
    t.maps.push_back(elements(n));
    for (std::size_t k = 0; k < t.maps[un].size(); ++k) index[un].emplace(t.maps[un][k].assign, static_cast<int>(k));
    t.levels.count[un] = static_cast<int>(t.maps[un].size());
  }
  auto lookup = [&](int n, const SSetMap& m) {
    auto it = index[static_cast<std::size_t>(n)].find(m.assign);
    if (it == index[static_cast<std::size_t>(n)].end()) throw SSetError("precomposition left the enumerated level");
    return it->second;
  };
  for (int n = 0; n <= dim; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        SSetMap d = coface(n, i);
        for (const SSetMap& m : t.maps[un]) t.levels.face[un][static_cast<std::size_t>(i)].push_back(lookup(n - 1, compose(m, d)));
      }
    if (n < dim)
      for (int j = 0; j <= n; ++j) {
        SSetMap s = codegeneracy(n, j);
        for (const SSetMap& m : t.maps[un]) t.levels.degen[un][static_cast<std::size_t>(j)].push_back(lookup(n + 1, compose(m, s)));
      }
  }
  return t;
}

}  // namespace

MappingSpace mapping_space(const SSet& x, const SSet& y, int dim) {
  std::vector<Product> products;
  for (int n = 0; n <= dim + 1; ++n) products.push_back(product(x, delta(n)));
  SSetMap id = SSetMap::identity(x);
  auto shift = [&](int m, int n, const Monotone& theta) {
    return product_map(products[static_cast<std::size_t>(m)], products[static_cast<std::size_t>(n)], id, delta_map(theta));
  };
  FunctorTable t = precomposition_table(
      dim, [&](int n) { return all_maps(products[static_cast<std::size_t>(n)].set, y); },
      [&](int n, int i) { return shift(n - 1, n, Monotone::coface(n, i)); },
      [&](int n, int j) { return shift(n + 1, n, Monotone::codegeneracy(n, j)); });
  Normalized nz = normalize(t.levels, true);
  MappingSpace out{nz.set, std::move(t.maps), std::move(nz.ez), std::move(nz.nd_element), std::move(products), {}};
  out.products.resize(static_cast<std::size_t>(dim + 1));
  out.index.resize(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (std::size_t k = 0; k < out.maps[static_cast<std::size_t>(n)].size(); ++k)
      out.index[static_cast<std::size_t>(n)].emplace(out.maps[static_cast<std::size_t>(n)][k].assign, static_cast<int>(k));
  return out;
}

int MappingSpace::element(int n, const SSetMap& m) const {
  auto it = index[static_cast<std::size_t>(n)].find(m.assign);
  if (it == index[static_cast<std::size_t>(n)].end()) throw SSetError("map not in mapping space level");
  return it->second;
}

SSetMap mapping_space_map(const MappingSpace& from, const MappingSpace& to, const SSetMap& pre, const SSetMap& post) {
  std::vector<SSetMap> shift;
  for (std::size_t n = 0; n < to.products.size(); ++n)
    shift.push_back(product_map(to.products[n], from.products[n], pre, SSetMap::identity(to.products[n].second.target)));
  SSetMap out{from.set, to.set, {}};
  for (auto [n, e] : from.nd_element) {
    const auto un = static_cast<std::size_t>(n);
    SSetMap m = compose(post, compose(from.maps[un][static_cast<std::size_t>(e)], shift[un]));
    out.assign.push_back(to.ez[un][static_cast<std::size_t>(to.element(n, m))]);
  }
  return out;
}

Power power(const SSet& x, int n) {
  Power p;
  if (n == 0) {
    p.set = point();
    return p;
  }
  p.set = x;
  p.projections.push_back(SSetMap::identity(x));
  for (int k = 1; k < n; ++k) {
    Product q = product(p.set, x);
    for (SSetMap& pr : p.projections) pr = compose(pr, q.first);
    p.projections.push_back(q.second);
    p.set = q.set;
  }
  return p;
}

SSetMap power_pairing(const Power& p, const std::vector<SSetMap>& components, const SSet& source) {
  if (components.empty()) return to_point(source);
  // Rebuild the iterated products to pair step by step.
  const SSet& x = components.front().target;
  SSetMap acc = components.front();
  SSet cur = x;
  for (std::size_t k = 1; k < components.size(); ++k) {
    Product q = product(cur, x);
    acc = pairing(q, acc, components[k]);
    cur = q.set;
  }
  acc.target = p.set;
  return acc;
}

namespace {

Subdivision make_sd(int n) {
  Subdivision s;
  for (int k = 0; k <= n; ++k)
    for (const Monotone& inj : all_injections(k, n)) s.faces.push_back(inj.values);
  std::vector<std::string> names;
  for (const auto& f : s.faces) {
    std::string name;
    for (int v : f) name += static_cast<char>('0' + v);
    names.push_back(name);
  }
  const std::size_t size = s.faces.size();
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      leq[a][b] = std::includes(s.faces[b].begin(), s.faces[b].end(), s.faces[a].begin(), s.faces[a].end());
  s.nerve = poset_nerve(names, leq, "<");
  return s;
}

int face_index(const Subdivision& s, const std::vector<int>& face) {
  auto it = std::find(s.faces.begin(), s.faces.end(), face);
  if (it == s.faces.end()) throw SSetError("not a face");
  return static_cast<int>(it - s.faces.begin());
}

/// Map out of sd(delta(m)) given on chains of faces.
SSetMap sd_out(int m, const SSet& target,
               const std::function<Simplex(const std::vector<std::vector<int>>&)>& on_chain) {
  const Subdivision& src = sd(m);
  SSetMap out{src.nerve.set, target, std::vector<Simplex>(static_cast<std::size_t>(src.nerve.set.size()))};
  for (const auto& [chain, id] : src.nerve.chain_id) {
    std::vector<std::vector<int>> faces;
    for (int e : chain) faces.push_back(src.faces[static_cast<std::size_t>(e)]);
    out.assign[static_cast<std::size_t>(id)] = on_chain(faces);
  }
  return out;
}

}  // namespace

const Subdivision& sd(int n) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<Subdivision>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Subdivision>(make_sd(n));
  return *slot;
}

SSetMap sd_map(const Monotone& theta) {
  const Subdivision& dst = sd(theta.codomain);
  return sd_out(theta.domain(), dst.nerve.set, [&](const std::vector<std::vector<int>>& chain) {
    std::vector<int> elems;
    for (const auto& f : chain) {
      std::vector<int> image;
      for (int v : f) image.push_back(theta(v));
      image.erase(std::unique(image.begin(), image.end()), image.end());
      elems.push_back(face_index(dst, image));
    }
    return dst.nerve.simplex(elems);
  });
}

SSetMap last_vertex(int n) {
  SSet d = delta(n);
  return sd_out(n, d, [&](const std::vector<std::vector<int>>& chain) {
    std::vector<int> verts;
    for (const auto& f : chain) verts.push_back(f.back());
    return delta_simplex(d, verts);
  });
}

ExResult ex(const SSet& x, int dim) {
  FunctorTable t = precomposition_table(
      dim, [&](int n) { return all_maps(sd(n).nerve.set, x); },
      [&](int n, int i) { return sd_map(Monotone::coface(n, i)); },
      [&](int n, int j) { return sd_map(Monotone::codegeneracy(n, j)); });
  std::vector<std::map<std::vector<Simplex>, int>> index(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (std::size_t k = 0; k < t.maps[static_cast<std::size_t>(n)].size(); ++k)
      index[static_cast<std::size_t>(n)].emplace(t.maps[static_cast<std::size_t>(n)][k].assign, static_cast<int>(k));
  Normalized nz = normalize(t.levels, true);

  SSet base = truncate(x, dim);
  Tabulation tb = tabulate(base, std::min(dim, std::max(0, base.top_dim())));
  std::vector<SSetMap> lv;
  for (int n = 0; n <= dim; ++n) lv.push_back(last_vertex(n));
  SSetMap unit = map_into_table(tb, nz, [&](int n, int e) {
    Simplex s = tb.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
    s.nd = *x.find(base.nd(s.nd).name);
    SSetMap as_map = compose(yoneda(x, s), lv[static_cast<std::size_t>(n)]);
    return index[static_cast<std::size_t>(n)].at(as_map.assign);
  });
  return {nz.set, unit, std::move(t.maps)};
}

}  // namespace wfskit
