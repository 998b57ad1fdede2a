#pragma once

#include <random>
#include <vector>

#include "wfskit/sobj.hpp"

namespace wfskit {

/// Small simplicial sets used to seed property tests (all of dimension <= 2).
std::vector<SSet> small_ssets();

/// A seeded simplicial object over finite-set families: either a tensor a (x) k
/// or an arbitrary map E -> B between small simplicial sets.
SimpObject random_simp_object(std::mt19937_64& rng, int trunc = 3);

/// A seeded morphism between two seeded objects; retries until one exists.
SimpMorphism random_simp_morphism(std::mt19937_64& rng, int trunc = 3);

}  // namespace wfskit
