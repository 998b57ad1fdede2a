#include <doctest.h>

#include "wfskit/fincat.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/search.hpp"

using namespace wfskit;

namespace {
std::vector<int> counts(const SSet& x) {
  std::vector<int> c;
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(static_cast<int>(x.nd_of_dim(n).size()));
  return c;
}

/// Composable n-chains counted directly from the hom-sets.
long chain_count(const FinCategory& c, int n) {
  std::vector<long> ending(static_cast<std::size_t>(c.object_count()), 1);
  for (int k = 0; k < n; ++k) {
    std::vector<long> next(ending.size(), 0);
    for (int f = 0; f < c.morphism_count(); ++f) next[static_cast<std::size_t>(c.dst(f))] += ending[static_cast<std::size_t>(c.src(f))];
    ending = next;
  }
  long total = 0;
  for (long v : ending) total += v;
  return total;
}

FinCategory chain3() { return poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}); }
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_category(terminal_category()).ok);
  CHECK(validate_category(arrow_category()).ok);
  CHECK(validate_category(cyclic_group_category(3)).ok);
  CHECK(validate_category(idempotent_category()).ok);
  // Perturb one composite of the free monoid on e with e^3 = e: breaks associativity.
  FinCategory bad = FinCategory::Builder()
                        .object("*").identity("*", "id").morphism("e", "*", "*").morphism("ee", "*", "*")
                        .composite("e", "e", "ee").composite("e", "ee", "e").composite("ee", "e", "e")
                        .composite("ee", "ee", "ee").build();
  CHECK(validate_category(bad).ok);
  bad.comp[static_cast<std::size_t>(bad.morphism("ee"))][static_cast<std::size_t>(bad.morphism("ee"))] = bad.morphism("e");
  CategoryReport r = validate_category(bad);
  REQUIRE_FALSE(r.ok);
  CHECK(r.violations.front().find("associativity") != std::string::npos);
}

TEST_CASE("comma categories") {
  CHECK(under_category(terminal_category(), "*").category.object_count() == 1);
  CommaCategory u = under_category(arrow_category(), "a");
  CHECK(u.category.object_count() == 2);
  CHECK(u.category.morphism_count() == 3);
  CHECK(validate_category(u.category).ok);
  CHECK(validate_functor(u.projection).ok);
  CHECK(under_category(span_category(), "c").category.object_count() == 3);
  CHECK(over_category(arrow_category(), "b").category.object_count() == 2);
  CHECK(over_category(arrow_category(), "a").category.object_count() == 1);
}

TEST_CASE("nerves") {
  CHECK(counts(nerve(terminal_category(), 3).set) == std::vector<int>{1});
  CHECK(find_isomorphism(nerve(arrow_category(), 3).set, delta(1)).has_value());
  CHECK(counts(nerve(chain3(), 2).set) == std::vector<int>{3, 3, 1});
  for (const FinCategory& c : {chain3(), span_category(), cyclic_group_category(2), idempotent_category()}) {
    Nerve nv = nerve(c, 3);
    for (int n = 0; n <= 3; ++n) CHECK(static_cast<long>(nv.chains[static_cast<std::size_t>(n)].size()) == chain_count(c, n));
    nv.set.validate();
    Nerve op = nerve(opposite(c), 3);
    CHECK(find_isomorphism(op.set, opposite(nv.set)).has_value());
  }
  Nerve g = nerve(cyclic_group_category(2), 3);
  CHECK(g.set.truncated_at() == 3);
  CHECK(counts(g.set) == std::vector<int>{1, 1, 1, 1});
  for (const std::string& i : {"a", "b", "c"}) {
    Nerve nu = nerve(under_category(span_category(), i).category, 3);
    CHECK(homology(nu.set, 2).to_string() == "H0=Z, H1=0, H2=0");
  }
}

TEST_CASE("homotopic finiteness") {
  CHECK(is_homotopically_finite(chain3()).finite);
  CHECK(is_homotopically_finite(chain3()).max_chain == 2);
  FinitenessReport a = is_homotopically_finite(arrow_category());
  CHECK(a.finite);
  CHECK(a.max_chain == 1);
  FinitenessReport e = is_homotopically_finite(idempotent_category());
  CHECK_FALSE(e.finite);
  CHECK(e.loop.size() == 1);
}

TEST_CASE("group nerve is Kan") {
  Nerve g = nerve(cyclic_group_category(2), 3);
  CHECK(is_kan_fibration(to_point(g.set), 3).holds());
}
