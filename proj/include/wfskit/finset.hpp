#pragma once

#include <vector>

#include "wfskit/sset.hpp"

namespace wfskit {

/// Map of finite sets {0..source-1} -> {0..target-1}.
struct SetMap {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
  auto operator<=>(const SetMap&) const = default;
  bool injective() const;
  bool surjective() const;
  static SetMap identity(int n);
};

SetMap compose(const SetMap& g, const SetMap& f);
std::vector<SetMap> all_set_maps(int source, int target);
/// The map of discrete simplicial sets.
SSetMap discrete_map(const SetMap& f);

}  // namespace wfskit
