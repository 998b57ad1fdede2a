#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfskit/search.hpp"
#include "wfskit/sset.hpp"

namespace wfskit {

/// A commuting square  A --top--> X
///                     |lambda    |rho
///                     B --bot--> Y
struct LiftingSquare {
  SSetMap lambda;
  SSetMap rho;
  SSetMap top;
  SSetMap bottom;

  bool commutes() const;
};

enum class LiftStatus { lifted, no_lift, budget };
std::string to_string(LiftStatus s);

struct LiftResult {
  LiftStatus status = LiftStatus::no_lift;
  std::optional<SSetMap> lift;
  std::uint64_t nodes = 0;  // partial assignments explored
};

/// Throws SSetError when the square does not commute.
LiftResult solve_lifting(const LiftingSquare& sq, std::uint64_t budget = kDefaultBudget);

/// Both triangle identities of a candidate lift.
bool verify_lift(const LiftingSquare& sq, const SSetMap& lift);

/// All commuting squares from lambda to rho, in search order.
std::vector<LiftingSquare> all_squares(const SSetMap& lambda, const SSetMap& rho);

struct RlpReport {
  LiftStatus status = LiftStatus::lifted;  // lifted = property holds
  int dim = 0;
  std::size_t squares = 0;
  std::uint64_t nodes = 0;
  std::optional<LiftingSquare> witness;  // first square without a lift
  std::size_t generator = 0;             // index of the witness generator
  bool holds() const { return status == LiftStatus::lifted; }
};

/// Right lifting property of f against the generators whose codomain has
/// dimension <= dim.
RlpReport has_rlp(const SSetMap& f, const std::vector<SSetMap>& generators, int dim,
                  std::uint64_t budget = kDefaultBudget);

std::vector<SSetMap> horn_generators(int dim);
std::vector<SSetMap> boundary_generators(int dim);

RlpReport is_kan_fibration(const SSetMap& f, int dim, std::uint64_t budget = kDefaultBudget);
RlpReport is_trivial_fibration(const SSetMap& f, int dim, std::uint64_t budget = kDefaultBudget);

/// The map <f, g> : Z -> X x Y into a computed product.
SSetMap pairing(const Product& p, const SSetMap& f, const SSetMap& g);
/// The induced map into a computed pullback.
SSetMap pairing(const Pullback& p, const SSetMap& f, const SSetMap& g);

/// f x g : A x B -> X x Y between computed products.
SSetMap product_map(const Product& source, const Product& target, const SSetMap& f, const SSetMap& g);

/// Induced map out of a pushout from two maps agreeing on the span.
SSetMap copairing(const Pushout& p, const SSetMap& f, const SSetMap& g);

}  // namespace wfskit
