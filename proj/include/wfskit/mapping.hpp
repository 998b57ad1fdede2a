#pragma once

#include <map>
#include <vector>

#include "wfskit/sset.hpp"

namespace wfskit {

/// The map delta(m) -> delta(n) induced by theta : [m] -> [n].
SSetMap delta_map(const Monotone& theta);

/// The n-skeleton of x stamped as a truncated presentation (x itself when it
/// has no simplices above n).
SSet truncate(const SSet& x, int n);

/// Simplicial mapping space, levels 0..dim; level n lists the maps x * delta(n) -> y.
struct MappingSpace {
  SSet set;
  std::vector<std::vector<SSetMap>> maps;  // table element -> map
  std::vector<std::vector<Simplex>> ez;    // table element -> EZ simplex of `set`
  std::vector<std::pair<int, int>> nd_element;
  std::vector<Product> products;           // x * delta(n)
  std::vector<std::map<std::vector<Simplex>, int>> index;

  int element(int n, const SSetMap& m) const;
};
MappingSpace mapping_space(const SSet& x, const SSet& y, int dim);
/// Map(B, X) -> Map(A, Y) induced by pre : A -> B and post : X -> Y.
SSetMap mapping_space_map(const MappingSpace& from, const MappingSpace& to, const SSetMap& pre,
                          const SSetMap& post);

/// The n-fold power x * ... * x with its projections (a point for n = 0).
struct Power {
  SSet set;
  std::vector<SSetMap> projections;
};
Power power(const SSet& x, int n);
/// The map into a power with the given components.
SSetMap power_pairing(const Power& p, const std::vector<SSetMap>& components, const SSet& source);

/// Barycentric subdivision of delta(n): nerve of its nonempty faces.
struct Subdivision {
  PosetNerve nerve;
  std::vector<std::vector<int>> faces;  // element -> vertex subset
};
const Subdivision& sd(int n);
/// sd(theta) : sd(delta(m)) -> sd(delta(n)).
SSetMap sd_map(const Monotone& theta);
/// Last-vertex map sd(delta(n)) -> delta(n).
SSetMap last_vertex(int n);

struct ExResult {
  SSet set;
  SSetMap unit;  // truncate(x, dim) -> Ex(x)
  std::vector<std::vector<SSetMap>> maps;  // table element -> map sd(delta(n)) -> x
};
/// Kan's Ex, levels 0..dim.
ExResult ex(const SSet& x, int dim);

}  // namespace wfskit
