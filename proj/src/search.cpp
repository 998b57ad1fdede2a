#include "wfskit/search.hpp"

#include <algorithm>

namespace wfskit {

MapSearch::MapSearch(SSet source, const Tabulation& target)
    : source_(std::move(source)), target_(target) {
  for (int n = 0; n <= source_.top_dim(); ++n)
    for (int id : source_.nd_of_dim(n)) order_.push_back(id);
  pins_.resize(static_cast<std::size_t>(source_.size()));
  required_over_.assign(static_cast<std::size_t>(source_.size()), -1);
  assigned_.assign(static_cast<std::size_t>(source_.size()), -1);
  by_faces_.resize(static_cast<std::size_t>(target_.levels.top + 1));
}

MapSearch& MapSearch::pin(int nd, const Monotone& theta, const Simplex& image) {
  pins_[static_cast<std::size_t>(nd)].emplace_back(theta, target_.index_of(image));
  return *this;
}

MapSearch& MapSearch::over(const SSetMap& rho, const SSetMap& v, const Tabulation& base) {
  over_map_ = level_map(rho, target_, base);
  for (int id = 0; id < source_.size(); ++id)
    required_over_[static_cast<std::size_t>(id)] = base.index_of(v(id));
  return *this;
}

MapSearch& MapSearch::injective_on_generators() {
  injective_ = true;
  return *this;
}

MapSearch& MapSearch::budget(std::uint64_t max_nodes) {
  max_nodes_ = max_nodes;
  return *this;
}

const std::vector<int>& MapSearch::candidates(int n, const std::vector<int>& faces) {
  auto& index = by_faces_[static_cast<std::size_t>(n)];
  if (index.empty()) {
    const auto un = static_cast<std::size_t>(n);
    for (int c = 0; c < target_.levels.count[un]; ++c) {
      std::vector<int> key;
      if (n >= 1)
        for (int i = 0; i <= n; ++i) key.push_back(target_.levels.face[un][static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
      index[key].push_back(c);
    }
  }
  static const std::vector<int> none;
  auto it = index.find(faces);
  return it == index.end() ? none : it->second;
}

bool MapSearch::descend(std::size_t depth, const std::function<bool(const SSetMap&)>& visit) {
  if (depth == order_.size()) {
    SSetMap m{source_, target_.set, {}};
    m.assign.reserve(assigned_.size());
    for (int id = 0; id < source_.size(); ++id) {
      const int n = source_.nd(id).dim;
      m.assign.push_back(target_.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(assigned_[static_cast<std::size_t>(id)])]);
    }
    status_ = SearchStatus::found;
    return visit(m);
  }
  const int id = order_[depth];
  const NdSimplex& s = source_.nd(id);
  const int n = s.dim;
  if (n > target_.levels.top) return true;
  std::vector<int> faces;
  for (const Simplex& f : s.faces)
    faces.push_back(target_.levels.act(f.sigma.codomain, assigned_[static_cast<std::size_t>(f.nd)], f.sigma));
  for (int c : candidates(n, faces)) {
    if (++nodes_ > max_nodes_) {
      status_ = SearchStatus::budget;
      return false;
    }
    if (required_over_[static_cast<std::size_t>(id)] >= 0 &&
        over_map_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] != required_over_[static_cast<std::size_t>(id)])
      continue;
    if (injective_) {
      const Simplex& img = target_.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
      if (!img.nondegenerate() || used_[static_cast<std::size_t>(img.nd)]) continue;
    }
    bool ok = true;
    for (const auto& [theta, want] : pins_[static_cast<std::size_t>(id)])
      if (target_.levels.act(n, c, theta) != want) {
        ok = false;
        break;
      }
    if (!ok) continue;
    assigned_[static_cast<std::size_t>(id)] = c;
    if (injective_) used_[static_cast<std::size_t>(target_.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)].nd)] = true;
    const bool go_on = descend(depth + 1, visit);
    if (injective_) used_[static_cast<std::size_t>(target_.simplices[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)].nd)] = false;
    assigned_[static_cast<std::size_t>(id)] = -1;
    if (!go_on) return false;
  }
  return true;
}

SearchStatus MapSearch::run(const std::function<bool(const SSetMap&)>& visit) {
  nodes_ = 0;
  status_ = SearchStatus::exhausted;
  used_.assign(static_cast<std::size_t>(target_.set.size()), false);
  if (source_.top_dim() > target_.levels.top) {
    // Maps need target simplices in every source dimension.
    throw SSetError("target tabulated below the source dimension");
  }
  bool found_any = false;
  descend(0, [&](const SSetMap& m) {
    found_any = true;
    return visit(m);
  });
  if (status_ == SearchStatus::budget) return status_;
  status_ = found_any ? SearchStatus::found : SearchStatus::exhausted;
  return status_;
}

std::optional<SSetMap> MapSearch::first() {
  std::optional<SSetMap> out;
  run([&](const SSetMap& m) {
    out = m;
    return false;
  });
  return out;
}

std::vector<SSetMap> MapSearch::all() {
  std::vector<SSetMap> out;
  run([&](const SSetMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

int search_depth(const SSet& source) { return std::max(0, source.top_dim()); }

std::vector<SSetMap> all_maps(const SSet& source, const SSet& target) {
  Tabulation t = tabulate(target, search_depth(source));
  return MapSearch(source, t).budget(UINT64_MAX).all();
}

std::optional<SSetMap> find_isomorphism(const SSet& source, const SSet& target, std::uint64_t budget) {
  if (source.top_dim() != target.top_dim()) return std::nullopt;
  for (int n = 0; n <= source.top_dim(); ++n)
    if (source.nd_of_dim(n).size() != target.nd_of_dim(n).size()) return std::nullopt;
  Tabulation t = tabulate(target, search_depth(source));
  return MapSearch(source, t).injective_on_generators().budget(budget).first();
}

bool is_isomorphism(const SSetMap& f) {
  if (f.source.size() != f.target.size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(f.target.size()), false);
  for (const Simplex& s : f.assign) {
    if (!s.nondegenerate() || hit[static_cast<std::size_t>(s.nd)]) return false;
    hit[static_cast<std::size_t>(s.nd)] = true;
  }
  return true;
}

}  // namespace wfskit
