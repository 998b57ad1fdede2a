#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wfskit/sset.hpp"

namespace wfskit {

enum class SearchStatus { found, exhausted, budget };

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Backtracking enumeration of simplicial maps source -> target.
///
/// Generators of the source are assigned in (dimension, id) order; a candidate
/// for an n-simplex must already agree on its faces with the images of lower
/// generators, so every complete assignment is a valid map. Optional pins fix
/// the image of x . theta for a generator x, and `over` forces rho . map = v.
class MapSearch {
 public:
  MapSearch(SSet source, const Tabulation& target);

  /// The image of source generator `nd` pulled back along theta must be `image`.
  MapSearch& pin(int nd, const Monotone& theta, const Simplex& image);
  /// Forces rho o map = v, where rho : target -> base and v : source -> base.
  MapSearch& over(const SSetMap& rho, const SSetMap& v, const Tabulation& base);
  /// Only nondegenerate images, pairwise distinct (isomorphism search).
  MapSearch& injective_on_generators();
  MapSearch& budget(std::uint64_t max_nodes);

  /// Visits complete maps in lexicographic order; return false to stop.
  SearchStatus run(const std::function<bool(const SSetMap&)>& visit);
  std::optional<SSetMap> first();
  std::vector<SSetMap> all();

  std::uint64_t nodes() const { return nodes_; }
  SearchStatus status() const { return status_; }

 private:
  bool descend(std::size_t depth, const std::function<bool(const SSetMap&)>& visit);
  const std::vector<int>& candidates(int n, const std::vector<int>& faces);

  SSet source_;
  const Tabulation& target_;
  std::vector<int> order_;
  std::vector<std::vector<std::pair<Monotone, int>>> pins_;
  std::vector<int> required_over_;
  std::vector<std::vector<int>> over_map_;
  bool injective_ = false;
  std::uint64_t max_nodes_ = kDefaultBudget;
  std::uint64_t nodes_ = 0;
  SearchStatus status_ = SearchStatus::exhausted;
  std::vector<int> assigned_;  // target element per source generator
  std::vector<bool> used_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
};

/// Tabulation depth needed to search maps out of `source`.
int search_depth(const SSet& source);

std::vector<SSetMap> all_maps(const SSet& source, const SSet& target);

/// Isomorphism source -> target, if any.
std::optional<SSetMap> find_isomorphism(const SSet& source, const SSet& target,
                                        std::uint64_t budget = kDefaultBudget);

/// Whether f is an isomorphism (bijective on generators, nondegenerate images).
bool is_isomorphism(const SSetMap& f);

}  // namespace wfskit
