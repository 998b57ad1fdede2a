#include "wfskit/corpus.hpp"

#include "wfskit/search.hpp"

namespace wfskit {

std::vector<SSet> small_ssets() {
  return {point(), discrete(2), delta(1), horn(2, 1), circle(), boundary(2), delta(2)};
}

namespace {
int pick(std::mt19937_64& rng, std::size_t n) { return static_cast<int>(rng() % n); }
}  // namespace

SimpObject random_simp_object(std::mt19937_64& rng, int trunc) {
  const std::vector<SSet> sets = small_ssets();
  if (rng() % 3 == 0) {
    std::vector<int> sizes(static_cast<std::size_t>(1 + pick(rng, 2)));
    for (int& s : sizes) s = pick(rng, 3);
    return tensor(make_family(sizes), sets[static_cast<std::size_t>(pick(rng, 4))], trunc);
  }
  // Keep E small so fibre powers stay at desk scale.
  for (;;) {
    const SSet& b = sets[static_cast<std::size_t>(pick(rng, sets.size()))];
    const SSet& e = sets[static_cast<std::size_t>(pick(rng, 5))];
    std::vector<SSetMap> maps = all_maps(e, b);
    if (maps.empty()) continue;
    return SimpObject{maps[static_cast<std::size_t>(pick(rng, maps.size()))], trunc};
  }
}

SimpMorphism random_simp_morphism(std::mt19937_64& rng, int trunc) {
  for (;;) {
    SimpObject x = random_simp_object(rng, trunc), y = random_simp_object(rng, trunc);
    std::vector<SimpMorphism> all = all_morphisms(x, y, 256);
    if (!all.empty()) return all[static_cast<std::size_t>(pick(rng, all.size()))];
  }
}

}  // namespace wfskit
