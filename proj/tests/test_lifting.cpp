#include <doctest.h>

#include "wfskit/homology.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/mapping.hpp"
#include "wfskit/search.hpp"

using namespace wfskit;

namespace {
std::vector<int> counts(const SSet& x) {
  std::vector<int> c;
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(static_cast<int>(x.nd_of_dim(n).size()));
  return c;
}
}  // namespace

TEST_CASE("lifting squares") {
  Coproduct two = coproduct({point(), point()});
  SSetMap fold{two.set, point(), {Simplex::generator(0, 0), Simplex::generator(0, 0)}};
  LiftingSquare sq{from_empty(point()), fold, from_empty(two.set), SSetMap::identity(point())};
  LiftResult r = solve_lifting(sq);
  REQUIRE(r.status == LiftStatus::lifted);
  CHECK(verify_lift(sq, *r.lift));

  auto squares = all_squares(horn_inclusion(2, 0), to_point(delta(1)));
  CHECK(squares.size() == 5);
  int failures = 0;
  for (const auto& s : squares)
    if (solve_lifting(s).status == LiftStatus::no_lift) ++failures;
  CHECK(failures == 1);

  // A non-injective left map: the domain is searched at its own dimension.
  auto collapse = all_squares(to_point(delta(1)), SSetMap::identity(point()));
  REQUIRE(collapse.size() == 1);
  CHECK(solve_lifting(collapse[0]).status == LiftStatus::lifted);
  CHECK(has_rlp(to_point(discrete(2)), {to_point(delta(1))}, 1).holds());
}

TEST_CASE("fibrations") {
  CHECK(is_trivial_fibration(to_point(delta(0)), 3).holds());
  // delta(n) is not Kan for n >= 1: the endpoints of an edge cannot be swapped.
  for (int n = 1; n <= 2; ++n) {
    RlpReport r = is_trivial_fibration(to_point(delta(n)), 2);
    CHECK_FALSE(r.holds());
    CHECK(r.generator == 1);
  }
  RlpReport k = is_kan_fibration(to_point(delta(1)), 2);
  CHECK_FALSE(k.holds());
  REQUIRE(k.witness);
  CHECK(k.witness->lambda.source.top_dim() == 1);
  CHECK_FALSE(is_trivial_fibration(to_point(boundary(1)), 1).holds());
  CHECK(is_kan_fibration(SSetMap::identity(circle()), 2).holds());
  CHECK(is_kan_fibration(to_point(circle()), 1).holds());
}

TEST_CASE("pairing") {
  Product p = product(delta(1), delta(1));
  SSetMap d = pairing(p, SSetMap::identity(delta(1)), SSetMap::identity(delta(1)));
  d.validate();
  CHECK(compose(p.first, d) == SSetMap::identity(delta(1)));
}

TEST_CASE("mapping spaces") {
  CHECK(find_isomorphism(mapping_space(delta(0), circle(), 2).set, circle()).has_value());
  MappingSpace m = mapping_space(delta(1), delta(1), 2);
  CHECK(m.set.nd_of_dim(0).size() == 3);
  CHECK(find_isomorphism(mapping_space(boundary(1), delta(0), 2).set, delta(0)).has_value());
  CHECK(homology(mapping_space(delta(1), circle(), 2).set, 1).to_string() == "H0=Z, H1=Z");
}

TEST_CASE("subdivision and Ex") {
  CHECK(counts(sd(1).nerve.set) == std::vector<int>{3, 2});
  CHECK(counts(sd(2).nerve.set) == std::vector<int>{7, 12, 6});
  sd_map(Monotone::coface(2, 1)).validate();
  sd_map(Monotone::codegeneracy(1, 0)).validate();
  last_vertex(2).validate();
  ExResult e0 = ex(delta(0), 2);
  CHECK(find_isomorphism(e0.set, delta(0)).has_value());
  CHECK(counts(e0.set) == std::vector<int>{1});
  ExResult es = ex(circle(), 2);
  CHECK(es.set.nd_of_dim(0).size() == 1);
  CHECK(es.set.nd_of_dim(1).size() == 3);
  es.unit.validate();
  CHECK(weq_oracle(es.unit, 1).verdict == Verdict::pass);
}
