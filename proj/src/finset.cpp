#include "wfskit/finset.hpp"

#include <algorithm>

namespace wfskit {

bool SetMap::injective() const {
  std::vector<int> v = values;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool SetMap::surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target), false);
  for (int v : values) hit[static_cast<std::size_t>(v)] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

SetMap SetMap::identity(int n) {
  SetMap m{n, n, {}};
  for (int i = 0; i < n; ++i) m.values.push_back(i);
  return m;
}

SetMap compose(const SetMap& g, const SetMap& f) {
  SetMap m{f.source, g.target, {}};
  for (int v : f.values) m.values.push_back(g(v));
  return m;
}

std::vector<SetMap> all_set_maps(int source, int target) {
  std::vector<SetMap> out;
  if (source > 0 && target == 0) return out;
  SetMap m{source, target, std::vector<int>(static_cast<std::size_t>(source), 0)};
  for (;;) {
    out.push_back(m);
    int k = source - 1;
    while (k >= 0 && m.values[static_cast<std::size_t>(k)] == target - 1) m.values[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++m.values[static_cast<std::size_t>(k)];
  }
  return out;
}

SSetMap discrete_map(const SetMap& f) {
  SSetMap m{discrete(f.source), discrete(f.target), {}};
  for (int v : f.values) m.assign.push_back(Simplex::generator(v, 0));
  return m;
}

}  // namespace wfskit
