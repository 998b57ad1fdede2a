#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wfskit/smith.hpp"
#include "wfskit/sset.hpp"

namespace wfskit {

using Coeff = std::int64_t;

struct HomologyGroup {
  int betti = 0;
  std::vector<Coeff> torsion;  // each > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
  std::string to_string() const;
};

struct HomologyProfile {
  int truncation = 0;
  std::vector<HomologyGroup> groups;  // degrees 0..truncation

  bool operator==(const HomologyProfile&) const = default;
  std::string to_string() const;
};

/// Boundary matrix of the normalized chain complex, C_n -> C_{n-1}, in
/// generator order of nd_of_dim.
IntMatrix<Coeff> boundary_matrix(const SSet& x, int n);

/// Integral homology in degrees 0..truncation. Throws SSetError when the
/// presentation is truncated below truncation + 1.
HomologyProfile homology(const SSet& x, int truncation);

/// Connected components; returns the component of every vertex generator
/// (indexed by position in nd_of_dim(0)) and the number of components.
struct Components {
  int count = 0;
  std::vector<int> of_vertex;
};
Components pi0(const SSet& x);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct WeqReport {
  Verdict verdict = Verdict::pass;
  int truncation = 0;
  std::string reason;
};

/// Effective weak-equivalence check: pi0 bijection and an isomorphism on
/// integral homology in degrees <= truncation, decided through the mapping
/// cone. Sound only on corpora where homology detects weak equivalences;
/// `pi1_sensitive` marks an input where a positive answer is not trusted.
WeqReport weq_oracle(const SSetMap& f, int truncation, bool pi1_sensitive = false);

}  // namespace wfskit
