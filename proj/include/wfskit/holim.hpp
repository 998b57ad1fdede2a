#pragma once

#include <string>
#include <vector>

#include "wfskit/fincat.hpp"
#include "wfskit/mapping.hpp"
#include "wfskit/sobj.hpp"

namespace wfskit {

/// A functor from a finite shape to simplicial sets.
struct Diagram {
  FinCategory shape;
  std::vector<SSet> values;     // by object
  std::vector<SSetMap> arrows;  // by morphism, identities included
};
CategoryReport validate_diagram(const Diagram& d);
/// d o f.
Diagram restrict(const Diagram& d, const FinFunctor& f);
/// Constant diagram with identity arrows.
Diagram constant_diagram(const FinCategory& shape, const SSet& x);

/// Iterated binary product with its projections (a point for no factors).
struct ProductN {
  SSet set;
  std::vector<SSetMap> projections;
  std::vector<Product> steps;
};
ProductN product_n(const std::vector<SSet>& factors);
SSetMap pairing_n(const ProductN& p, const std::vector<SSetMap>& components, const SSet& source);

/// Nerve of a functor between finite categories, on nerves of equal dimension.
SSetMap nerve_map(const Nerve& from, const Nerve& to, const FinFunctor& f);

/// Diagonal of the simplicial replacement: level n is the sum over composable
/// chains i_0 -> ... -> i_n of X(i_0)_n.
struct Hocolim {
  SSet set;
  int trunc = 0;
  bool exact = false;
  Nerve nerve;
  std::vector<Tabulation> values;
  Normalized table;
  std::vector<std::vector<std::pair<int, int>>> decode;  // element -> (chain, value element)
  std::vector<std::vector<int>> offset;                  // first element of each chain
};
Hocolim hocolim(const Diagram& d, int trunc);
/// Map induced by a natural transformation (components by object).
SSetMap hocolim_map(const Hocolim& from, const Hocolim& to, const std::vector<SSetMap>& eta);
/// Map induced by a shape functor f, where `from` is the hocolim of d o f and
/// `to` the hocolim of d.
SSetMap hocolim_reindex(const Hocolim& from, const Hocolim& to, const FinFunctor& f);

/// Coend of N(i/I) (x) X(i), computed directly as a coequalizer of sums.
struct Coend {
  SSet set;
  std::vector<Nerve> nerves;           // N(i/I)
  std::vector<CommaCategory> unders;   // i/I
  std::vector<Product> pieces;         // N(i/I) x X(i)
  Coproduct sum;
  Coequalizer quotient;
};
Coend coend_oracle(const Diagram& d, int trunc);
/// The canonical comparison from the diagonal to the coend.
SSetMap coend_comparison(const Hocolim& h, const Coend& c);
/// The comparison is an isomorphism onto the coend, or onto its skeleton at
/// h.trunc when the diagonal is only a truncation.
bool coend_agrees(const Hocolim& h, const SSetMap& comparison);

/// End of the cotensors Map(N(I/i), X(i)) as an equalizer of products.
struct Holim {
  SSet set;
  int trunc = 0;
  std::vector<Nerve> nerves;          // N(I/i)
  std::vector<CommaCategory> overs;   // I/i
  std::vector<MappingSpace> spaces;   // Map(N(I/i), X(i))
  ProductN product;
  SSetMap inclusion;                  // into the product
  std::vector<std::string> warnings;
};
/// Throws CategoryError when the shape is not homotopically finite. Values
/// failing the Kan condition at the truncation only produce warnings.
Holim holim(const Diagram& d, int trunc);
/// Dimension up to which holim(d, trunc) is computed.
int holim_dimension(const Diagram& d, int trunc);
SSetMap holim_map(const Holim& from, const Holim& to, const std::vector<SSetMap>& eta);
/// Restriction along a shape functor f : A -> B: `from` is holim over B of d,
/// `to` is holim over A of d o f.
SSetMap holim_restrict(const Holim& from, const Holim& to, const FinFunctor& f, const Diagram& d);

/// Homotopy Kan extensions along alpha : I -> J, one value per object of J.
Diagram hokan_left(const FinFunctor& alpha, const Diagram& d, int trunc);
Diagram hokan_right(const FinFunctor& alpha, const Diagram& d, int trunc);

// Diagrams of simplicial objects over finite-set families ------------------------

struct SobjDiagram {
  FinCategory shape;
  std::vector<SimpObject> values;
  std::vector<SimpMorphism> arrows;
};
Diagram totals(const SobjDiagram& d);
Diagram indices(const SobjDiagram& d);

struct SobjColimit {
  SimpObject object;
  std::vector<std::string> warnings;
};
/// Computed on totals and indices separately; both functors preserve the sums
/// and limits involved.
SobjColimit hocolim(const SobjDiagram& d, int trunc);
SobjColimit holim(const SobjDiagram& d, int trunc);

}  // namespace wfskit
