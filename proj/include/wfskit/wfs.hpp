#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfskit/finset.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/mapping.hpp"

namespace wfskit {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Box constructions ---------------------------------------------------------------

/// Corner map of a two-variable functor together with the structure maps into
/// (pushout case) or out of (pullback case) its middle object.
struct Corner {
  SSetMap map;
  SSetMap first;
  SSetMap second;
};

/// f [x] g : A*D  u_{A*C}  B*C -> B*D for f : A -> B, g : C -> D.
Corner box_product(const SSetMap& f, const SSetMap& g);
/// Tensoring of a finite-set map with a simplicial map: the same corner for disc(f).
Corner box_tensor(const SetMap& f, const SSetMap& g);

/// Box-hom for the simplicial mapping space, truncated at dim:
/// Map(B, X) -> Map(A, X) x_{Map(A, Y)} Map(B, Y) for g : A -> B, h : X -> Y.
Corner box_map(const SSetMap& g, const SSetMap& h, int dim);
/// Box-hom for the cotensor X^A: X^B -> X^A x_{Y^A} Y^B for f : A -> B.
Corner box_power(const SetMap& f, const SSetMap& h);
/// Box-hom for the hom-set: Hom(L, X) -> Hom(K, X) x_{Hom(K, Y)} Hom(L, Y).
SetMap box_homset(const SSetMap& g, const SSetMap& h);

enum class Bifunctor { tensor, product };

/// Verdicts of the three equivalent lifting problems of a two-variable adjunction.
struct AdjunctionCheck {
  bool agree = true;
  bool conclusive = true;
  std::array<bool, 3> verdicts{};
};

/// (f [tensor] g) lifts h  <=>  f lifts Hom_l(g, h)  <=>  g lifts Hom_r(f, h).
AdjunctionCheck check_adjunction_tensor(const SetMap& f, const SSetMap& g, const SSetMap& h,
                                        std::uint64_t budget = kDefaultBudget);
/// (f [x] g) lifts h  <=>  f lifts map(g, h)  <=>  g lifts map(f, h).
AdjunctionCheck check_adjunction_product(const SSetMap& f, const SSetMap& g, const SSetMap& h,
                                         std::uint64_t budget = kDefaultBudget);

/// Whether every square from lambda to rho lifts (nullopt on budget).
std::optional<bool> lifts_all(const SSetMap& lambda, const SSetMap& rho, std::uint64_t budget = kDefaultBudget);
bool lifts_all(const SetMap& lambda, const SetMap& rho);

// Morphism classes ----------------------------------------------------------------

enum class MorphismClass { mono, split_mono, eff_mono, epi, split_epi, eff_epi, coprod_injection, custom };
std::string to_string(MorphismClass c);
MorphismClass parse_class(const std::string& name);

struct Classification {
  bool member = false;
  std::optional<SSetMap> witness;  // section / retraction when split
  std::string detail;
};
/// Throws UnsupportedError for `custom`.
Classification classify(const SSetMap& m, MorphismClass c, std::uint64_t budget = kDefaultBudget);
bool classify(const SetMap& m, MorphismClass c);

struct MorphismClassSpec {
  std::string name;
  std::function<bool(const SSetMap&)> predicate;
  std::vector<SSetMap> generators;
};
MorphismClassSpec class_spec(MorphismClass c);

enum class WfsFlavor { projective_type, injective_type, generated, custom };

struct WfsSpec {
  MorphismClassSpec left;
  MorphismClassSpec right;
  WfsFlavor flavor = WfsFlavor::custom;
};
/// First (l, r) pair from the corpus with l in left, r in right and no lifting.
std::optional<std::pair<SSetMap, SSetMap>> check_wfs_on_corpus(const WfsSpec& w, const std::vector<SSetMap>& corpus);

/// f is a retract of g: i, r on domains and i2, r2 on codomains.
struct RetractWitness {
  SSetMap i, r, i2, r2;
};
std::optional<RetractWitness> is_retract(const SSetMap& f, const SSetMap& g);
bool verify_retract(const SSetMap& f, const SSetMap& g, const RetractWitness& w);

// Factorizations ------------------------------------------------------------------

struct Factorization {
  SSetMap left;
  SSetMap right;
};

/// X -> X u P -> Y with P the coproduct of one copy of p for every map p -> Y.
Factorization factor_projective_type(const SSetMap& m, const std::vector<SSet>& projectives);
/// FinSet with R = surjections: X -> X u Y -> Y.
std::pair<SetMap, SetMap> factor_projective_type(const SetMap& m);

struct StageLog {
  int stage = 0;
  std::vector<int> cells;  // attached cells per generator
};

struct SoaResult {
  Factorization legs;
  std::vector<StageLog> log;
  bool partial = false;
  int dim = 0;
  RlpReport residual;
};
/// Stage-bounded small object argument: each stage glues one cell for every
/// square against a generator (codomain dim <= dim) that has no lift.
SoaResult small_object_factorize(const SSetMap& m, const std::vector<SSetMap>& generators, int stages, int dim,
                                 std::uint64_t budget = kDefaultBudget);

/// Coproduct of maps between coproducts.
SSetMap coproduct_map(const Coproduct& source, const Coproduct& target, const std::vector<SSetMap>& maps);
/// Map out of a coproduct given on each summand.
SSetMap copair(const Coproduct& c, const std::vector<SSetMap>& maps, const SSet& target);

}  // namespace wfskit
