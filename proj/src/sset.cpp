#include "wfskit/sset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wfskit {

namespace {

const std::vector<int> kNoSimplices;

std::string vertex_string(const std::vector<int>& vertices) {
  std::string s;
  for (int v : vertices) s += std::to_string(v);
  return s;
}

}  // namespace

// SSet --------------------------------------------------------------------------

SSet::SSet() : data_(std::make_shared<const Data>()) {}

const std::vector<int>& SSet::nd_of_dim(int n) const {
  if (n < 0 || n > top_dim()) return kNoSimplices;
  return data_->by_dim[static_cast<std::size_t>(n)];
}

std::optional<int> SSet::find(const std::string& name) const {
  auto it = data_->names.find(name);
  if (it == data_->names.end()) return std::nullopt;
  return it->second;
}

Simplex SSet::restrict(int id, const Monotone& injection) const {
  if (injection.is_identity()) return Simplex::generator(id, injection.codomain);
  const int k = injection.codomain;
  int missing = k;
  for (; missing >= 0; --missing)
    if (std::find(injection.values.begin(), injection.values.end(), missing) == injection.values.end())
      break;
  Monotone rest;
  rest.codomain = k - 1;
  for (int v : injection.values) rest.values.push_back(v < missing ? v : v - 1);
  const Simplex& f = nd(id).faces[static_cast<std::size_t>(missing)];
  return apply(f, rest);
}

Simplex SSet::apply(const Simplex& x, const Monotone& theta) const {
  const Monotone tau = compose(x.sigma, theta);
  EpiMono em = epi_mono(tau);
  Simplex z = restrict(x.nd, em.mono);
  return Simplex{z.nd, compose(z.sigma, em.epi)};
}

Simplex SSet::face(const Simplex& x, int i) const {
  return apply(x, Monotone::coface(x.dim(), i));
}

Simplex SSet::degeneracy(const Simplex& x, int j) const {
  return apply(x, Monotone::codegeneracy(x.dim(), j));
}

std::string SSet::to_string(const Simplex& x) const {
  if (x.nondegenerate()) return nd(x.nd).name;
  return degeneracy_word(x.sigma) + "(" + nd(x.nd).name + ")";
}

void SSet::validate() const {
  for (int id = 0; id < size(); ++id) {
    const NdSimplex& s = nd(id);
    const int n = s.dim;
    if (n == 0) {
      if (!s.faces.empty()) throw SSetError("vertex '" + s.name + "' has faces");
      continue;
    }
    if (static_cast<int>(s.faces.size()) != n + 1)
      throw SSetError("simplex '" + s.name + "' needs " + std::to_string(n + 1) + " faces");
    for (const Simplex& f : s.faces) {
      if (f.nd < 0 || f.nd >= size()) throw SSetError("simplex '" + s.name + "' has a dangling face");
      if (f.dim() != n - 1) throw SSetError("simplex '" + s.name + "' has a face of wrong dimension");
      if (!f.sigma.is_surjective() || f.sigma.codomain != nd(f.nd).dim)
        throw SSetError("simplex '" + s.name + "' has a face with a malformed degeneracy word");
    }
    const Simplex self = Simplex::generator(id, n);
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        if (n < 2) continue;
        Simplex lhs = face(face(self, j), i);
        Simplex rhs = face(face(self, i), j - 1);
        if (lhs != rhs)
          throw SSetError("simplicial identity d" + std::to_string(i) + "d" + std::to_string(j) +
                          " = d" + std::to_string(j - 1) + "d" + std::to_string(i) +
                          " fails on '" + s.name + "'");
      }
  }
}

int SSet::Builder::add(std::string name, int dim, std::vector<Simplex> faces) {
  for (const Simplex& f : faces)
    if (f.nd < 0 || f.nd >= static_cast<int>(nd_.size()))
      throw SSetError("face of '" + name + "' references an unknown generator");
  nd_.push_back(NdSimplex{std::move(name), dim, std::move(faces)});
  return static_cast<int>(nd_.size()) - 1;
}

SSet SSet::Builder::build_unchecked() {
  auto data = std::make_shared<Data>();
  data->truncated_at = truncated_at_;
  int top = -1;
  for (const auto& s : nd_) top = std::max(top, s.dim);
  data->by_dim.resize(static_cast<std::size_t>(top + 1));
  for (int id = 0; id < static_cast<int>(nd_.size()); ++id) {
    const auto& s = nd_[static_cast<std::size_t>(id)];
    if (!data->names.emplace(s.name, id).second)
      throw SSetError("duplicate simplex name '" + s.name + "'");
    data->by_dim[static_cast<std::size_t>(s.dim)].push_back(id);
  }
  data->nd = std::move(nd_);
  nd_.clear();
  return SSet(std::move(data));
}

SSet SSet::Builder::build() {
  SSet s = build_unchecked();
  s.validate();
  return s;
}

// Maps ---------------------------------------------------------------------------

Simplex SSetMap::operator()(const Simplex& x) const {
  return target.apply(assign[static_cast<std::size_t>(x.nd)], x.sigma);
}

void SSetMap::validate() const {
  if (static_cast<int>(assign.size()) != source.size())
    throw SSetError("map assigns " + std::to_string(assign.size()) + " of " +
                    std::to_string(source.size()) + " generators");
  for (int id = 0; id < source.size(); ++id) {
    const NdSimplex& s = source.nd(id);
    const Simplex& img = assign[static_cast<std::size_t>(id)];
    if (img.nd < 0 || img.nd >= target.size() || img.dim() != s.dim ||
        img.sigma.codomain != target.nd(img.nd).dim || !img.sigma.is_surjective())
      throw SSetError("image of '" + s.name + "' is not a simplex of matching dimension");
    for (int i = 0; i < static_cast<int>(s.faces.size()); ++i) {
      if (target.face(img, i) != (*this)(s.faces[static_cast<std::size_t>(i)]))
        throw SSetError("map does not commute with d" + std::to_string(i) + " on '" + s.name + "'");
    }
  }
}

bool SSetMap::operator==(const SSetMap& other) const { return assign == other.assign; }

SSetMap SSetMap::identity(const SSet& x) {
  SSetMap m{x, x, {}};
  for (int id = 0; id < x.size(); ++id) m.assign.push_back(Simplex::generator(id, x.nd(id).dim));
  return m;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  SSetMap out{f.source, g.target, {}};
  out.assign.reserve(f.assign.size());
  for (const Simplex& s : f.assign) out.assign.push_back(g(s));
  return out;
}

// Levels -------------------------------------------------------------------------

void Levels::resize(int top_dim) {
  top = top_dim;
  const auto n = static_cast<std::size_t>(top_dim + 1);
  count.assign(n, 0);
  face.assign(n, {});
  degen.assign(n, {});
  for (int k = 0; k <= top_dim; ++k) {
    if (k >= 1) face[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k + 1), {});
    if (k < top_dim) degen[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k + 1), {});
  }
}

int Levels::act(int n, int x, const Monotone& theta) const {
  EpiMono em = epi_mono(theta);
  // Faces along the injection.
  Monotone mono = em.mono;
  int level = n;
  while (!mono.is_identity()) {
    int missing = mono.codomain;
    for (; missing >= 0; --missing)
      if (std::find(mono.values.begin(), mono.values.end(), missing) == mono.values.end()) break;
    x = face[static_cast<std::size_t>(level)][static_cast<std::size_t>(missing)][static_cast<std::size_t>(x)];
    --level;
    for (int& v : mono.values)
      if (v > missing) --v;
    mono.codomain -= 1;
  }
  // Degeneracies in increasing index order.
  const Monotone& epi = em.epi;
  for (int j = 0; j < epi.domain(); ++j) {
    if (epi(j) == epi(j + 1)) {
      x = degen[static_cast<std::size_t>(level)][static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
      ++level;
    }
  }
  return x;
}

int Tabulation::index_of(const Simplex& x) const {
  const auto n = static_cast<std::size_t>(x.dim());
  if (n >= index.size()) throw SSetError("simplex above tabulated dimension");
  auto it = index[n].find(x);
  if (it == index[n].end()) throw SSetError("simplex not in tabulation");
  return it->second;
}

Tabulation tabulate(const SSet& x, int top) {
  if (auto d = x.truncated_at(); d && top > *d)
    throw SSetError("cannot tabulate to dimension " + std::to_string(top) + " a presentation truncated at " +
                    std::to_string(*d));
  Tabulation t;
  t.set = x;
  t.levels.resize(top);
  t.simplices.resize(static_cast<std::size_t>(top + 1));
  t.index.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& level = t.simplices[static_cast<std::size_t>(n)];
    for (int k = 0; k <= std::min(n, x.top_dim()); ++k)
      for (const Monotone& sigma : all_surjections(n, k))
        for (int id : x.nd_of_dim(k)) level.push_back(Simplex{id, sigma});
    std::sort(level.begin(), level.end(), [](const Simplex& a, const Simplex& b) {
      if (a.sigma.codomain != b.sigma.codomain) return a.sigma.codomain > b.sigma.codomain;
      if (a.nd != b.nd) return a.nd < b.nd;
      return a.sigma < b.sigma;
    });
    for (int i = 0; i < static_cast<int>(level.size()); ++i)
      t.index[static_cast<std::size_t>(n)].emplace(level[static_cast<std::size_t>(i)], i);
    t.levels.count[static_cast<std::size_t>(n)] = static_cast<int>(level.size());
  }
  for (int n = 0; n <= top; ++n) {
    const auto& level = t.simplices[static_cast<std::size_t>(n)];
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        auto& row = t.levels.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
        row.reserve(level.size());
        for (const Simplex& s : level) row.push_back(t.index_of(x.face(s, i)));
      }
    if (n < top)
      for (int j = 0; j <= n; ++j) {
        auto& row = t.levels.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
        row.reserve(level.size());
        for (const Simplex& s : level) row.push_back(t.index_of(x.degeneracy(s, j)));
      }
  }
  return t;
}

Normalized normalize(const Levels& levels, bool truncated,
                     const std::vector<std::vector<std::string>>* names) {
  const int top = levels.top;
  Normalized out;
  out.ez.resize(static_cast<std::size_t>(top + 1));
  // A degenerate element remembers one (j, z) with s_j z = element.
  std::vector<std::vector<std::pair<int, int>>> source(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n)
    source[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(levels.count[static_cast<std::size_t>(n)]), {-1, -1});
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int z = 0; z < levels.count[static_cast<std::size_t>(n)]; ++z) {
        int y = levels.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][static_cast<std::size_t>(z)];
        auto& slot = source[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(y)];
        if (slot.first < 0) slot = {j, z};
      }
  SSet::Builder builder;
  for (int n = 0; n <= top; ++n) {
    auto& ez = out.ez[static_cast<std::size_t>(n)];
    ez.resize(static_cast<std::size_t>(levels.count[static_cast<std::size_t>(n)]));
    for (int x = 0; x < levels.count[static_cast<std::size_t>(n)]; ++x) {
      auto [j, z] = source[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
      if (j >= 0) {
        const Simplex& below = out.ez[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(z)];
        ez[static_cast<std::size_t>(x)] = Simplex{below.nd, compose(below.sigma, Monotone::codegeneracy(n - 1, j))};
        continue;
      }
      std::vector<Simplex> faces;
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          faces.push_back(out.ez[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(
              levels.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])]);
      std::string name = names ? (*names)[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)]
                               : "x" + std::to_string(n) + "_" + std::to_string(x);
      int id = builder.add(std::move(name), n, std::move(faces));
      ez[static_cast<std::size_t>(x)] = Simplex::generator(id, n);
      out.nd_element.emplace_back(n, x);
    }
  }
  if (truncated) builder.set_truncated_at(top);
  out.set = builder.build_unchecked();
  return out;
}

SSetMap map_into_table(const Tabulation& source, const Normalized& target,
                       const std::function<int(int, int)>& element) {
  SSetMap m{source.set, target.set, {}};
  for (int id = 0; id < source.set.size(); ++id) {
    const int n = source.set.nd(id).dim;
    const int x = source.index_of_nd(id);
    m.assign.push_back(target.ez[static_cast<std::size_t>(n)][static_cast<std::size_t>(element(n, x))]);
  }
  return m;
}

SSetMap map_from_table(const Normalized& source, const SSet& target,
                       const std::function<Simplex(int, int)>& image) {
  SSetMap m{source.set, target, {}};
  for (auto [n, x] : source.nd_element) m.assign.push_back(image(n, x));
  return m;
}

std::vector<std::vector<int>> level_map(const SSetMap& f, const Tabulation& source,
                                        const Tabulation& target) {
  std::vector<std::vector<int>> out(source.simplices.size());
  for (std::size_t n = 0; n < source.simplices.size(); ++n)
    for (const Simplex& s : source.simplices[n]) out[n].push_back(target.index_of(f(s)));
  return out;
}

// Standard objects ------------------------------------------------------------

namespace {

/// Sub-simplicial set of delta(n) on the vertex subsets accepted by `keep`.
SSet simplex_subsets(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  SSet::Builder b;
  std::map<std::vector<int>, int> ids;
  for (int k = 0; k <= n; ++k)
    for (const Monotone& inj : all_injections(k, n)) {
      const std::vector<int>& verts = inj.values;
      if (!keep(verts)) continue;
      std::vector<Simplex> faces;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) {
          std::vector<int> f = verts;
          f.erase(f.begin() + i);
          faces.push_back(Simplex::generator(ids.at(f), k - 1));
        }
      ids[verts] = b.add(vertex_string(verts), k, std::move(faces));
    }
  return b.build_unchecked();
}

}  // namespace

SSet delta(int n) {
  return simplex_subsets(n, [](const std::vector<int>&) { return true; });
}

SSet boundary(int n) {
  return simplex_subsets(n, [n](const std::vector<int>& v) { return static_cast<int>(v.size()) <= n; });
}

SSet horn(int n, int k) {
  if (k < 0 || k > n || n < 1) throw SSetError("horn index out of range");
  return simplex_subsets(n, [n, k](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) == n + 1) return false;
    if (static_cast<int>(v.size()) == n && std::find(v.begin(), v.end(), k) == v.end()) return false;
    return true;
  });
}

SSet empty_sset() { return SSet::Builder().build_unchecked(); }

SSet point() { return delta(0); }

SSet circle() {
  SSet::Builder b;
  int v = b.add("v", 0);
  b.add("e", 1, {Simplex::generator(v, 0), Simplex::generator(v, 0)});
  return b.build();
}

SSet discrete(int size) {
  SSet::Builder b;
  for (int i = 0; i < size; ++i) b.add(std::to_string(i), 0);
  return b.build_unchecked();
}

Simplex delta_simplex(const SSet& delta_n, const std::vector<int>& vertices) {
  Monotone seq;
  seq.values = vertices;
  seq.codomain = vertices.empty() ? 0 : vertices.back();
  EpiMono em = epi_mono(seq);
  auto id = delta_n.find(vertex_string(em.mono.values));
  if (!id) throw SSetError("no simplex " + vertex_string(em.mono.values));
  return Simplex{*id, em.epi};
}

SSetMap inclusion_into_delta(const SSet& sub, int n) {
  SSet d = delta(n);
  SSetMap m{sub, d, {}};
  for (int id = 0; id < sub.size(); ++id) {
    auto target = d.find(sub.nd(id).name);
    if (!target) throw SSetError("'" + sub.nd(id).name + "' is not a face of delta(" + std::to_string(n) + ")");
    m.assign.push_back(Simplex::generator(*target, sub.nd(id).dim));
  }
  return m;
}

SSetMap boundary_inclusion(int n) { return inclusion_into_delta(boundary(n), n); }
SSetMap horn_inclusion(int n, int k) { return inclusion_into_delta(horn(n, k), n); }

SSetMap yoneda(const SSet& x, const Simplex& s) {
  const int n = s.dim();
  SSet d = delta(n);
  SSetMap m{d, x, {}};
  for (int id = 0; id < d.size(); ++id) {
    Monotone inj;
    inj.codomain = n;
    for (char c : d.nd(id).name) inj.values.push_back(c - '0');
    m.assign.push_back(x.apply(s, inj));
  }
  return m;
}

SSetMap to_point(const SSet& x) {
  SSet p = point();
  SSetMap m{x, p, {}};
  for (int id = 0; id < x.size(); ++id)
    m.assign.push_back(Simplex{0, Monotone::constant(x.nd(id).dim, 0, 0)});
  return m;
}

SSetMap from_empty(const SSet& x) { return SSetMap{empty_sset(), x, {}}; }

// Limits and colimits --------------------------------------------------------

Coproduct coproduct(const std::vector<SSet>& parts) {
  SSet::Builder b;
  std::vector<std::vector<int>> ids(parts.size());
  // Insert by dimension so faces exist before use.
  int top = -1;
  for (const auto& p : parts) top = std::max(top, p.top_dim());
  for (std::size_t i = 0; i < parts.size(); ++i) ids[i].assign(static_cast<std::size_t>(parts[i].size()), -1);
  for (int n = 0; n <= top; ++n)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int id : parts[i].nd_of_dim(n)) {
        std::vector<Simplex> faces;
        for (const Simplex& f : parts[i].nd(id).faces)
          faces.push_back(Simplex{ids[i][static_cast<std::size_t>(f.nd)], f.sigma});
        ids[i][static_cast<std::size_t>(id)] =
            b.add(std::to_string(i) + "." + parts[i].nd(id).name, n, std::move(faces));
      }
  std::optional<int> trunc;
  for (const auto& p : parts)
    if (p.truncated_at()) trunc = trunc ? std::min(*trunc, *p.truncated_at()) : *p.truncated_at();
  b.set_truncated_at(trunc);
  Coproduct out;
  out.set = b.build_unchecked();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    SSetMap inj{parts[i], out.set, {}};
    for (int id = 0; id < parts[i].size(); ++id)
      inj.assign.push_back(Simplex::generator(ids[i][static_cast<std::size_t>(id)], parts[i].nd(id).dim));
    out.injections.push_back(std::move(inj));
  }
  return out;
}

namespace {

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

/// Levels of a sub-table given by membership; returns compact index maps.
struct SubLevels {
  Levels levels;
  std::vector<std::vector<int>> members;  // compact -> original
};

SubLevels restrict_levels(const Levels& full, const std::vector<std::vector<bool>>& keep) {
  SubLevels out;
  out.levels.resize(full.top);
  std::vector<std::vector<int>> compact(static_cast<std::size_t>(full.top + 1));
  out.members.resize(static_cast<std::size_t>(full.top + 1));
  for (int n = 0; n <= full.top; ++n) {
    compact[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(full.count[static_cast<std::size_t>(n)]), -1);
    for (int x = 0; x < full.count[static_cast<std::size_t>(n)]; ++x)
      if (keep[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)]) {
        compact[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] =
            static_cast<int>(out.members[static_cast<std::size_t>(n)].size());
        out.members[static_cast<std::size_t>(n)].push_back(x);
      }
    out.levels.count[static_cast<std::size_t>(n)] = static_cast<int>(out.members[static_cast<std::size_t>(n)].size());
  }
  for (int n = 0; n <= full.top; ++n) {
    const auto& mem = out.members[static_cast<std::size_t>(n)];
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        for (int x : mem)
          out.levels.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].push_back(
              compact[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(
                  full.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])]);
    if (n < full.top)
      for (int j = 0; j <= n; ++j)
        for (int x : mem)
          out.levels.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)].push_back(
              compact[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(
                  full.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])]);
  }
  return out;
}

struct ProductTable {
  Tabulation tx, ty;
  Levels levels;
  std::vector<std::vector<std::string>> names;
  int pair(int n, int a, int b) const { return a * ty.levels.count[static_cast<std::size_t>(n)] + b; }
};

ProductTable product_table(const SSet& x, const SSet& y, int top) {
  ProductTable p;
  p.tx = tabulate(x, top);
  p.ty = tabulate(y, top);
  p.levels.resize(top);
  p.names.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const int cx = p.tx.levels.count[un], cy = p.ty.levels.count[un];
    p.levels.count[un] = cx * cy;
    for (int a = 0; a < cx; ++a)
      for (int b = 0; b < cy; ++b)
        p.names[un].push_back("(" + x.to_string(p.tx.simplices[un][static_cast<std::size_t>(a)]) + "," +
                              y.to_string(p.ty.simplices[un][static_cast<std::size_t>(b)]) + ")");
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        auto& row = p.levels.face[un][static_cast<std::size_t>(i)];
        const auto& fx = p.tx.levels.face[un][static_cast<std::size_t>(i)];
        const auto& fy = p.ty.levels.face[un][static_cast<std::size_t>(i)];
        for (int a = 0; a < cx; ++a)
          for (int b = 0; b < cy; ++b)
            row.push_back(p.pair(n - 1, fx[static_cast<std::size_t>(a)], fy[static_cast<std::size_t>(b)]));
      }
    if (n < top)
      for (int j = 0; j <= n; ++j) {
        auto& row = p.levels.degen[un][static_cast<std::size_t>(j)];
        const auto& sx = p.tx.levels.degen[un][static_cast<std::size_t>(j)];
        const auto& sy = p.ty.levels.degen[un][static_cast<std::size_t>(j)];
        for (int a = 0; a < cx; ++a)
          for (int b = 0; b < cy; ++b)
            row.push_back(p.pair(n + 1, sx[static_cast<std::size_t>(a)], sy[static_cast<std::size_t>(b)]));
      }
  }
  return p;
}

int product_top(const SSet& x, const SSet& y, std::optional<int> top) {
  if (top) return *top;
  int t = std::max(0, x.top_dim()) + std::max(0, y.top_dim());
  if (auto tr = min_trunc(x.truncated_at(), y.truncated_at())) t = *tr;
  return t;
}

}  // namespace

Product product(const SSet& x, const SSet& y, std::optional<int> top) {
  const int t = product_top(x, y, top);
  ProductTable p = product_table(x, y, t);
  const bool truncated = top.has_value() || min_trunc(x.truncated_at(), y.truncated_at()).has_value();
  Normalized nz = normalize(p.levels, truncated, &p.names);
  Product out;
  out.set = nz.set;
  out.first = map_from_table(nz, x, [&](int n, int e) {
    const int cy = p.ty.levels.count[static_cast<std::size_t>(n)];
    return p.tx.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(e / cy)];
  });
  out.second = map_from_table(nz, y, [&](int n, int e) {
    const int cy = p.ty.levels.count[static_cast<std::size_t>(n)];
    return p.ty.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(e % cy)];
  });
  return out;
}

Pullback pullback(const SSetMap& f, const SSetMap& g, std::optional<int> top) {
  const SSet& x = f.source;
  const SSet& y = g.source;
  const int t = product_top(x, y, top);
  ProductTable p = product_table(x, y, t);
  Tabulation tz = tabulate(f.target, t);
  auto fx = level_map(f, p.tx, tz);
  auto gy = level_map(g, p.ty, tz);
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(t + 1));
  for (int n = 0; n <= t; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const int cx = p.tx.levels.count[un], cy = p.ty.levels.count[un];
    for (int a = 0; a < cx; ++a)
      for (int b = 0; b < cy; ++b)
        keep[un].push_back(fx[un][static_cast<std::size_t>(a)] == gy[un][static_cast<std::size_t>(b)]);
  }
  SubLevels sub = restrict_levels(p.levels, keep);
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(t + 1));
  for (int n = 0; n <= t; ++n)
    for (int e : sub.members[static_cast<std::size_t>(n)])
      names[static_cast<std::size_t>(n)].push_back(p.names[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
  const bool truncated = top.has_value() || min_trunc(x.truncated_at(), y.truncated_at()).has_value();
  Normalized nz = normalize(sub.levels, truncated, &names);
  Pullback out;
  out.set = nz.set;
  out.first = map_from_table(nz, x, [&](int n, int e) {
    const auto un = static_cast<std::size_t>(n);
    const int orig = sub.members[un][static_cast<std::size_t>(e)];
    return p.tx.simplices[un][static_cast<std::size_t>(orig / p.ty.levels.count[un])];
  });
  out.second = map_from_table(nz, y, [&](int n, int e) {
    const auto un = static_cast<std::size_t>(n);
    const int orig = sub.members[un][static_cast<std::size_t>(e)];
    return p.ty.simplices[un][static_cast<std::size_t>(orig % p.ty.levels.count[un])];
  });
  return out;
}

Equalizer equalizer(const SSetMap& f, const SSetMap& g) {
  const SSet& x = f.source;
  const int t = std::max(0, x.top_dim());
  Tabulation tx = tabulate(x, t);
  Tabulation ty = tabulate(f.target, t);
  auto lf = level_map(f, tx, ty);
  auto lg = level_map(g, tx, ty);
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(t + 1));
  std::vector<std::vector<std::string>> all_names(static_cast<std::size_t>(t + 1));
  for (int n = 0; n <= t; ++n)
    for (int a = 0; a < tx.levels.count[static_cast<std::size_t>(n)]; ++a) {
      keep[static_cast<std::size_t>(n)].push_back(lf[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] ==
                                                  lg[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)]);
      all_names[static_cast<std::size_t>(n)].push_back(x.to_string(tx.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)]));
    }
  SubLevels sub = restrict_levels(tx.levels, keep);
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(t + 1));
  for (int n = 0; n <= t; ++n)
    for (int e : sub.members[static_cast<std::size_t>(n)])
      names[static_cast<std::size_t>(n)].push_back(all_names[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
  Normalized nz = normalize(sub.levels, x.truncated_at().has_value(), &names);
  Equalizer out;
  out.set = nz.set;
  out.inclusion = map_from_table(nz, x, [&](int n, int e) {
    return tx.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(sub.members[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)])];
  });
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[static_cast<std::size_t>(b)] = a;
    else parent[static_cast<std::size_t>(a)] = b;
  }
};

struct QuotientTable {
  Levels levels;
  std::vector<std::vector<int>> cls;    // element -> class
  std::vector<std::vector<int>> repr;   // class -> smallest element
};

QuotientTable quotient(const Levels& base, const std::vector<std::vector<std::pair<int, int>>>& glue) {
  QuotientTable q;
  const int top = base.top;
  q.levels.resize(top);
  q.cls.resize(static_cast<std::size_t>(top + 1));
  q.repr.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    UnionFind uf(base.count[un]);
    for (auto [a, b] : glue[un]) uf.unite(a, b);
    std::map<int, int> root_class;
    for (int x = 0; x < base.count[un]; ++x) {
      int r = uf.find(x);
      auto [it, inserted] = root_class.emplace(r, static_cast<int>(q.repr[un].size()));
      if (inserted) q.repr[un].push_back(x);
      q.cls[un].push_back(it->second);
    }
    q.levels.count[un] = static_cast<int>(q.repr[un].size());
  }
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        for (int r : q.repr[un])
          q.levels.face[un][static_cast<std::size_t>(i)].push_back(
              q.cls[un - 1][static_cast<std::size_t>(base.face[un][static_cast<std::size_t>(i)][static_cast<std::size_t>(r)])]);
    if (n < top)
      for (int j = 0; j <= n; ++j)
        for (int r : q.repr[un])
          q.levels.degen[un][static_cast<std::size_t>(j)].push_back(
              q.cls[un + 1][static_cast<std::size_t>(base.degen[un][static_cast<std::size_t>(j)][static_cast<std::size_t>(r)])]);
  }
  return q;
}

}  // namespace

Pushout pushout(const SSetMap& f, const SSetMap& g) {
  const SSet& b = f.target;
  const SSet& c = g.target;
  int top = std::max({0, b.top_dim(), c.top_dim()});
  Coproduct bc = coproduct({b, c});
  Tabulation tbc = tabulate(bc.set, top);
  Tabulation ta = tabulate(f.source, top);
  std::vector<std::vector<std::pair<int, int>>> glue(static_cast<std::size_t>(top + 1));
  SSetMap fi = compose(bc.injections[0], f);
  SSetMap gi = compose(bc.injections[1], g);
  for (int n = 0; n <= top; ++n)
    for (const Simplex& s : ta.simplices[static_cast<std::size_t>(n)])
      glue[static_cast<std::size_t>(n)].emplace_back(tbc.index_of(fi(s)), tbc.index_of(gi(s)));
  QuotientTable q = quotient(tbc.levels, glue);
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n)
    for (int r : q.repr[static_cast<std::size_t>(n)])
      names[static_cast<std::size_t>(n)].push_back(bc.set.to_string(tbc.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)]));
  Normalized nz = normalize(q.levels, false, &names);
  Pushout out;
  out.set = nz.set;
  Tabulation tb = tabulate(b, top);
  Tabulation tc = tabulate(c, top);
  out.first = map_into_table(tb, nz, [&](int n, int e) {
    return q.cls[static_cast<std::size_t>(n)][static_cast<std::size_t>(
        tbc.index_of(bc.injections[0](tb.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)])))];
  });
  out.second = map_into_table(tc, nz, [&](int n, int e) {
    return q.cls[static_cast<std::size_t>(n)][static_cast<std::size_t>(
        tbc.index_of(bc.injections[1](tc.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)])))];
  });
  return out;
}

Coequalizer coequalizer(const SSetMap& f, const SSetMap& g) {
  const SSet& b = f.target;
  int top = std::max(0, b.top_dim());
  Tabulation tb = tabulate(b, top);
  Tabulation ta = tabulate(f.source, top);
  std::vector<std::vector<std::pair<int, int>>> glue(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n)
    for (const Simplex& s : ta.simplices[static_cast<std::size_t>(n)])
      glue[static_cast<std::size_t>(n)].emplace_back(tb.index_of(f(s)), tb.index_of(g(s)));
  QuotientTable q = quotient(tb.levels, glue);
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n)
    for (int r : q.repr[static_cast<std::size_t>(n)])
      names[static_cast<std::size_t>(n)].push_back(b.to_string(tb.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)]));
  Normalized nz = normalize(q.levels, b.truncated_at().has_value(), &names);
  Coequalizer out;
  out.set = nz.set;
  out.projection = map_into_table(tb, nz, [&](int n, int e) { return q.cls[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]; });
  return out;
}

SSet opposite(const SSet& x) {
  auto flip = [](const Monotone& s) {
    Monotone out;
    out.codomain = s.codomain;
    const int m = s.domain();
    for (int t = 0; t <= m; ++t) out.values.push_back(s.codomain - s(m - t));
    return out;
  };
  SSet::Builder b;
  for (int id = 0; id < x.size(); ++id) {
    const NdSimplex& s = x.nd(id);
    std::vector<Simplex> faces;
    for (int i = 0; i < static_cast<int>(s.faces.size()); ++i) {
      const Simplex& f = s.faces[static_cast<std::size_t>(s.dim - i)];
      faces.push_back(Simplex{f.nd, flip(f.sigma)});
    }
    b.add(s.name, s.dim, std::move(faces));
  }
  b.set_truncated_at(x.truncated_at());
  return b.build_unchecked();
}

Simplex PosetNerve::simplex(const std::vector<int>& chain) const {
  std::vector<int> distinct;
  Monotone epi;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i == 0 || chain[i] != chain[i - 1]) distinct.push_back(chain[i]);
    epi.values.push_back(static_cast<int>(distinct.size()) - 1);
  }
  epi.codomain = static_cast<int>(distinct.size()) - 1;
  auto it = chain_id.find(distinct);
  if (it == chain_id.end()) throw SSetError("not a chain of the poset");
  return Simplex{it->second, epi};
}

PosetNerve poset_nerve(const std::vector<std::string>& names,
                       const std::vector<std::vector<bool>>& leq, const std::string& separator) {
  PosetNerve out;
  SSet::Builder b;
  const int size = static_cast<int>(names.size());
  std::vector<std::vector<int>> current;
  for (int v = 0; v < size; ++v) current.push_back({v});
  int dim = 0;
  while (!current.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& chain : current) {
      std::vector<Simplex> faces;
      if (dim >= 1)
        for (int i = 0; i <= dim; ++i) {
          std::vector<int> f = chain;
          f.erase(f.begin() + i);
          faces.push_back(Simplex::generator(out.chain_id.at(f), dim - 1));
        }
      std::string name;
      for (std::size_t i = 0; i < chain.size(); ++i)
        name += (i ? separator : std::string()) + names[static_cast<std::size_t>(chain[i])];
      out.chain_id[chain] = b.add(std::move(name), dim, std::move(faces));
      for (int v = 0; v < size; ++v)
        if (v != chain.back() && leq[static_cast<std::size_t>(chain.back())][static_cast<std::size_t>(v)]) {
          auto ext = chain;
          ext.push_back(v);
          next.push_back(std::move(ext));
        }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
    ++dim;
  }
  out.set = b.build_unchecked();
  return out;
}

}  // namespace wfskit
