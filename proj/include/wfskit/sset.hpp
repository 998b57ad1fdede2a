#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfskit/monotone.hpp"

namespace wfskit {

/// A simplex in Eilenberg-Zilber form: a nondegenerate generator pulled back
/// along a surjection [dim] ->> [dim of generator].
struct Simplex {
  int nd = -1;
  Monotone sigma;

  int dim() const { return sigma.domain(); }
  bool nondegenerate() const { return sigma.is_identity(); }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  static Simplex generator(int id, int dim) { return Simplex{id, Monotone::identity(dim)}; }
};

class SSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NdSimplex {
  std::string name;
  int dim = 0;
  std::vector<Simplex> faces;  // d_0 .. d_dim, empty for vertices
};

/// Finite simplicial set stored as nondegenerate generators with EZ-form faces.
///
/// Copies are cheap; the data is shared and immutable. `truncated_at()` is set
/// when the presentation is only the skeleton of a larger object, in which case
/// every level up to that dimension is exact and nothing above it is recorded.
class SSet {
 public:
  class Builder;

  SSet();

  int size() const { return static_cast<int>(data_->nd.size()); }
  const NdSimplex& nd(int id) const { return data_->nd[static_cast<std::size_t>(id)]; }
  const std::vector<int>& nd_of_dim(int n) const;
  /// Highest dimension carrying a nondegenerate simplex (-1 when empty).
  int top_dim() const { return static_cast<int>(data_->by_dim.size()) - 1; }
  std::optional<int> truncated_at() const { return data_->truncated_at; }
  std::optional<int> find(const std::string& name) const;
  bool empty() const { return data_->nd.empty(); }

  /// x . theta for theta : [m] -> [dim x].
  Simplex apply(const Simplex& x, const Monotone& theta) const;
  Simplex face(const Simplex& x, int i) const;
  Simplex degeneracy(const Simplex& x, int j) const;
  /// The restriction of a generator along an injection.
  Simplex restrict(int nd, const Monotone& injection) const;

  std::string to_string(const Simplex& x) const;

  /// Throws SSetError naming the first violated invariant.
  void validate() const;

  bool same_data(const SSet& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::vector<NdSimplex> nd;
    std::vector<std::vector<int>> by_dim;
    std::map<std::string, int> names;
    std::optional<int> truncated_at;
  };
  explicit SSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class SSet::Builder {
 public:
  /// Faces must already reference added generators.
  int add(std::string name, int dim, std::vector<Simplex> faces = {});
  void set_truncated_at(std::optional<int> d) { truncated_at_ = d; }
  const NdSimplex& nd(int id) const { return nd_[static_cast<std::size_t>(id)]; }
  /// Validates and freezes.
  SSet build();
  SSet build_unchecked();

 private:
  std::vector<NdSimplex> nd_;
  std::optional<int> truncated_at_;
};

/// A map of simplicial sets, given on nondegenerate generators.
struct SSetMap {
  SSet source;
  SSet target;
  std::vector<Simplex> assign;

  Simplex operator()(const Simplex& x) const;
  Simplex operator()(int nd) const { return assign[static_cast<std::size_t>(nd)]; }
  void validate() const;
  bool operator==(const SSetMap& other) const;

  static SSetMap identity(const SSet& x);
};

SSetMap compose(const SSetMap& g, const SSetMap& f);

/// Dense levelwise table of a simplicial set up to dimension `top`.
struct Levels {
  int top = -1;
  std::vector<int> count;
  std::vector<std::vector<std::vector<int>>> face;   // face[n][i][x] for n >= 1
  std::vector<std::vector<std::vector<int>>> degen;  // degen[n][j][x] : level n -> n+1

  int act(int n, int x, const Monotone& theta) const;
  void resize(int top_dim);
};

/// Tabulation of an SSet: level elements are EZ simplices in canonical order.
struct Tabulation {
  SSet set;
  Levels levels;
  std::vector<std::vector<Simplex>> simplices;
  std::vector<std::map<Simplex, int>> index;

  int index_of(const Simplex& x) const;
  int index_of_nd(int nd) const { return index_of(Simplex::generator(nd, set.nd(nd).dim)); }
};

Tabulation tabulate(const SSet& x, int top);

/// Result of normalizing a levelwise table: the simplicial set plus the EZ
/// decomposition of every table element.
struct Normalized {
  SSet set;
  std::vector<std::vector<Simplex>> ez;
  std::vector<std::pair<int, int>> nd_element;  // (level, element) of each generator
};

/// Extracts nondegenerate generators from a table. When `truncated` is set the
/// result is stamped as the skeleton at `levels.top`.
Normalized normalize(const Levels& levels, bool truncated,
                     const std::vector<std::vector<std::string>>* names = nullptr);

/// Map into a normalized table: `element(n, x)` is the target element hit by
/// the source tabulation element x of level n.
SSetMap map_into_table(const Tabulation& source, const Normalized& target,
                       const std::function<int(int, int)>& element);
/// Map out of a normalized table: `image(n, x)` is the image of table element x.
SSetMap map_from_table(const Normalized& source, const SSet& target,
                       const std::function<Simplex(int, int)>& image);
/// Level table of a map over given tabulations.
std::vector<std::vector<int>> level_map(const SSetMap& f, const Tabulation& source,
                                        const Tabulation& target);

// Standard simplices and their sub-objects -----------------------------------

SSet delta(int n);
SSet boundary(int n);
SSet horn(int n, int k);
SSet empty_sset();
SSet point();
/// The circle with one vertex and one nondegenerate edge.
SSet circle();
/// Finite set as a discrete simplicial set.
SSet discrete(int size);
/// Inclusion of a sub-simplicial set of delta(n) given by vertex-string names.
SSetMap inclusion_into_delta(const SSet& sub, int n);
SSetMap boundary_inclusion(int n);
SSetMap horn_inclusion(int n, int k);
/// The n-simplex x of X viewed as a map delta(n) -> X.
SSetMap yoneda(const SSet& x, const Simplex& s);
SSetMap to_point(const SSet& x);
SSetMap from_empty(const SSet& x);
/// Simplex of delta(n) (or any poset nerve) from a weakly increasing vertex sequence.
Simplex delta_simplex(const SSet& delta_n, const std::vector<int>& vertices);

// Limits and colimits -----------------------------------------------------------

struct Coproduct {
  SSet set;
  std::vector<SSetMap> injections;
};
Coproduct coproduct(const std::vector<SSet>& parts);

struct Product {
  SSet set;
  SSetMap first;
  SSetMap second;
};
/// `top` caps the computed dimension (default: exact, dim X + dim Y).
Product product(const SSet& x, const SSet& y, std::optional<int> top = std::nullopt);

struct Pullback {
  SSet set;
  SSetMap first;   // to f.source
  SSetMap second;  // to g.source
};
Pullback pullback(const SSetMap& f, const SSetMap& g, std::optional<int> top = std::nullopt);

struct Equalizer {
  SSet set;
  SSetMap inclusion;
};
Equalizer equalizer(const SSetMap& f, const SSetMap& g);

struct Pushout {
  SSet set;
  SSetMap first;   // from f.target
  SSetMap second;  // from g.target
};
/// Pushout of the span f.target <- A -> g.target.
Pushout pushout(const SSetMap& f, const SSetMap& g);

struct Coequalizer {
  SSet set;
  SSetMap projection;
};
Coequalizer coequalizer(const SSetMap& f, const SSetMap& g);

/// Reverses the vertex order: d_i <-> d_{n-i}.
SSet opposite(const SSet& x);

/// Nerve of a finite poset; generators are strictly increasing chains, named by
/// joining element names with `separator`.
struct PosetNerve {
  SSet set;
  std::map<std::vector<int>, int> chain_id;
  /// Simplex for a weakly increasing chain of elements.
  Simplex simplex(const std::vector<int>& chain) const;
};
PosetNerve poset_nerve(const std::vector<std::string>& names,
                       const std::vector<std::vector<bool>>& less_or_equal,
                       const std::string& separator = ",");

}  // namespace wfskit
