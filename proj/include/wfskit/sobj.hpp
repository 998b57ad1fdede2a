#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfskit/coprod.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/wfs.hpp"

namespace wfskit {

using Family = CoprodObject<int>;

/// A simplicial object in the free coproduct completion of finite sets, held
/// as a map p : E -> B. Level n is the family indexed by B_n whose member at x
/// is the fibre of p over x; structure maps act on both at once.
struct SimpObject {
  SSetMap p;
  int trunc = 3;

  const SSet& total() const { return p.source; }
  const SSet& index() const { return p.target; }
};

/// total and index commute with the two projections.
struct SimpMorphism {
  SimpObject source;
  SimpObject target;
  SSetMap total;
  SSetMap index;

  void validate() const;
};

SimpObject empty_object(int trunc = 3);
SimpMorphism identity(const SimpObject& x);
SimpMorphism compose(const SimpMorphism& g, const SimpMorphism& f);
SimpMorphism initial_map(const SimpObject& x);

/// Member sizes of level n in table order of B_n.
Family level(const SimpObject& x, int n);

/// (a (x) k)_n = one copy of a for every n-simplex of k.
SimpObject tensor(const Family& a, const SSet& k, int trunc = 3);
SimpObject constant(const Family& a, int trunc = 3);

/// The end of X_n^{k_n}: members are indexed by maps k -> B and the member at
/// beta is the set of lifts k -> E of beta.
struct HomLeft {
  Family object;
  std::vector<SSetMap> index;
  std::vector<std::vector<SSetMap>> members;
};
HomLeft hom_left(const SSet& k, const SimpObject& x);

/// Level n is Hom(a, X_n); for a one-member family {s} this is the s-fold
/// fibre power of p (B itself for s = 0).
SSet hom_right(const Family& a, const SimpObject& x);
SSetMap hom_right(const Family& a, const SimpMorphism& f);

/// Whether every degeneracy is a coproduct injection (member maps onto).
/// Returns the first failing level, if any.
std::optional<int> degeneracy_failure(const SimpObject& x);

struct LatchingData {
  Family object;
  std::vector<int> elements;  // degenerate elements of B_n, in table order
};
/// Join of the degeneracy summands; throws UnsupportedError when some
/// degeneracy is not a coproduct injection.
LatchingData latching(const SimpObject& x, int n);
Family matching(const SimpObject& x, int n);

struct DegenerateSummand {
  int element = 0;   // of B_n
  std::string word;  // degeneracy word of the surjection
  int base = 0;      // nondegenerate generator of B
};
struct LevelCertificate {
  int level = 0;
  std::vector<int> nondegenerate;
  std::vector<DegenerateSummand> degenerate;
};
struct CofibrancyResult {
  bool cofibrant = false;
  int trunc = 0;
  std::vector<LevelCertificate> certificate;
  int failed_level = -1;
  std::string detail;
};
/// Decomposition decider: X_n splits as degenerate summands, each a copy of a
/// lower nondegenerate summand, plus the nondegenerate rest.
CofibrancyResult is_cofibrant(const SimpObject& x);
/// Re-checks a certificate against x.
bool verify_cofibrancy(const SimpObject& x, const CofibrancyResult& r);

struct ReedyResult {
  SimpObject middle;
  SimpMorphism left;
  SimpMorphism right;
  std::vector<int> cells;  // new index cells per level
  int trunc = 0;
};
/// Factors f levelwise: at level n the corner L_n Z u X_n -> M_n Z x_{M_n Y} Y_n
/// is factored as an injection into a sum with the corner members not already
/// covered by a surjective member. Levels above trunc are not constructed.
ReedyResult reedy_factorize(const SimpMorphism& f, int trunc);

struct ReedyCheck {
  bool left_ok = true;
  bool right_ok = true;
  std::string detail;
  bool ok() const { return left_ok && right_ok; }
};
/// Left leg degreewise a coproduct injection; every matching corner of the
/// right leg split epi through level trunc. Recomputes matching objects with
/// map search rather than the face tuples used by the construction.
ReedyCheck verify_reedy(const ReedyResult& r);

struct RlpCofibrancy {
  bool cofibrant = false;
  bool conclusive = true;
  std::optional<SimpMorphism> section;
  ReedyResult replacement;
};
/// Factors 0 -> X as 0 -> X' -> X and searches a section of X' -> X.
RlpCofibrancy is_cofibrant_rlp(const SimpObject& x, std::uint64_t budget = kDefaultBudget);

/// U-images of the member sizes occurring in the inputs (at most max_size), and 1.
std::vector<Family> default_projectives(const std::vector<SimpObject>& inputs, int max_size = 3);

struct ProjectiveVerdict {
  Family projective;
  Verdict verdict = Verdict::pass;
  std::string reason;
};
struct ClassVerdict {
  Verdict verdict = Verdict::pass;
  int trunc = 0;
  std::vector<ProjectiveVerdict> per_projective;
};
ClassVerdict is_fibration(const SimpMorphism& f, const std::vector<Family>& projectives, int dim,
                          std::uint64_t budget = kDefaultBudget);
/// Homology check of every Hom(P, f), at trunc lowered to what the
/// presentations determine.
ClassVerdict is_weq(const SimpMorphism& f, const std::vector<Family>& projectives, int trunc);

struct SimpPullback {
  SimpObject object;
  SimpMorphism first;
  SimpMorphism second;
};
SimpPullback pullback(const SimpMorphism& f, const SimpMorphism& g);

/// The coproduct functor applied levelwise: the map of total spaces.
SSetMap collapse_levelwise(const SimpMorphism& f);

/// Random morphism X -> Y (nullopt when there is none), chosen uniformly
/// among the enumerated ones.
template <class Rng>
std::optional<SimpMorphism> random_morphism(const SimpObject& x, const SimpObject& y, Rng& rng);

std::vector<SimpMorphism> all_morphisms(const SimpObject& x, const SimpObject& y, std::size_t cap = 4096);

template <class Rng>
std::optional<SimpMorphism> random_morphism(const SimpObject& x, const SimpObject& y, Rng& rng) {
  std::vector<SimpMorphism> all = all_morphisms(x, y);
  if (all.empty()) return std::nullopt;
  return all[static_cast<std::size_t>(rng() % all.size())];
}

}  // namespace wfskit
