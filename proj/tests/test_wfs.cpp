#include <doctest.h>

#include "wfskit/fincat.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/search.hpp"
#include "wfskit/wfs.hpp"

using namespace wfskit;

namespace {
std::vector<int> counts(const SSet& x) {
  std::vector<int> c;
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(static_cast<int>(x.nd_of_dim(n).size()));
  return c;
}
SSetMap fold2() {
  Coproduct two = coproduct({point(), point()});
  return SSetMap{two.set, point(), {Simplex::generator(0, 0), Simplex::generator(0, 0)}};
}
SSetMap vertex0() { return yoneda(delta(1), Simplex::generator(0, 0)); }
}  // namespace

TEST_CASE("box product") {
  SSetMap f = boundary_inclusion(1);
  Corner c = box_product(f, f);
  c.map.validate();
  CHECK(counts(c.map.source) == std::vector<int>{4, 4});
  CHECK(classify(c.map, MorphismClass::mono).member);
  Corner u = box_product(f, from_empty(point()));
  CHECK(find_isomorphism(u.map.source, boundary(1)).has_value());
  CHECK(find_isomorphism(u.map.target, delta(1)).has_value());
  // Pushout-products of monos are monos.
  std::vector<SSetMap> gens{boundary_inclusion(1), horn_inclusion(2, 1), boundary_inclusion(2), horn_inclusion(1, 0)};
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(classify(box_product(a, b).map, MorphismClass::mono).member);
  Corner t = box_tensor(SetMap{0, 1, {}}, horn_inclusion(2, 0));
  CHECK(find_isomorphism(t.map.source, horn(2, 0)).has_value());
}

TEST_CASE("box hom") {
  SSetMap h = to_point(delta(1));
  Corner c = box_map(from_empty(point()), h, 2);
  CHECK(find_isomorphism(c.map.source, delta(1)).has_value());
  CHECK(c.map.target.nd_of_dim(0).size() == 1);
  Corner b = box_map(boundary_inclusion(1), to_point(delta(1)), 2);
  b.map.validate();
  // Map(delta(1), delta(1)) -> Map(boundary(1), delta(1)) restricts to endpoints.
  CHECK(b.map.source.nd_of_dim(0).size() == 3);
  CHECK(b.map.target.nd_of_dim(0).size() == 4);
}

TEST_CASE("adjunction correspondence") {
  SetMap e{0, 1, {}};
  AdjunctionCheck a = check_adjunction_tensor(e, boundary_inclusion(1), to_point(delta(1)));
  CHECK(a.agree);
  AdjunctionCheck p = check_adjunction_product(from_empty(point()), boundary_inclusion(1), to_point(delta(1)));
  CHECK(p.agree);
  CHECK_FALSE(p.verdicts[0]);
  AdjunctionCheck q = check_adjunction_product(boundary_inclusion(1), horn_inclusion(1, 0), to_point(circle()));
  CHECK(q.agree);
  AdjunctionCheck r = check_adjunction_tensor(SetMap{1, 2, {0}}, horn_inclusion(2, 1), to_point(boundary(1)));
  CHECK(r.agree);
  CHECK(r.verdicts[0]);
}

TEST_CASE("classification") {
  SSetMap id = SSetMap::identity(delta(1));
  CHECK(classify(id, MorphismClass::split_mono).member);
  CHECK(classify(id, MorphismClass::split_epi).member);
  CHECK(*classify(id, MorphismClass::split_epi).witness == id);
  SSetMap f = fold2();
  CHECK(classify(f, MorphismClass::split_epi).member);
  CHECK(classify(f, MorphismClass::eff_epi).member);
  CHECK_FALSE(classify(f, MorphismClass::mono).member);
  Coproduct xy = coproduct({circle(), delta(1)});
  CHECK(classify(xy.injections[0], MorphismClass::coprod_injection).member);
  CHECK_FALSE(classify(vertex0(), MorphismClass::coprod_injection).member);
  CHECK(classify(vertex0(), MorphismClass::split_mono).member);
  CHECK_FALSE(classify(boundary_inclusion(1), MorphismClass::split_mono).member);
  CHECK(classify(to_point(circle()), MorphismClass::split_epi).member);
  CHECK_THROWS_AS(classify(id, MorphismClass::custom), UnsupportedError);
}

TEST_CASE("finite set classes agree with the simplicial deciders") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const SetMap& m : all_set_maps(a, b)) {
        SSetMap d = discrete_map(m);
        for (MorphismClass c : {MorphismClass::mono, MorphismClass::split_mono, MorphismClass::epi,
                                MorphismClass::split_epi, MorphismClass::coprod_injection})
          CHECK(classify(m, c) == classify(d, c).member);
      }
}

TEST_CASE("retracts") {
  CHECK(is_retract(boundary_inclusion(1), boundary_inclusion(1)).has_value());
  CHECK_FALSE(is_retract(boundary_inclusion(1), vertex0()).has_value());
  Product p = product(discrete(2), delta(1));
  auto w = is_retract(fold2(), p.second);
  // Projection 2 x delta(1) -> delta(1) retracts onto the fold 2 -> point.
  REQUIRE(w.has_value());
  CHECK(verify_retract(fold2(), p.second, *w));
}

TEST_CASE("projective type factorization") {
  Factorization f = factor_projective_type(from_empty(delta(1)), {delta(1)});
  CHECK(classify(f.left, MorphismClass::coprod_injection).member);
  CHECK(has_rlp(f.right, {from_empty(delta(1))}, 1).holds());
  auto [l, r] = factor_projective_type(SetMap{2, 3, {0, 0}});
  CHECK(r.surjective());
  CHECK(compose(r, l) == (SetMap{2, 3, {0, 0}}));
}

TEST_CASE("small object argument") {
  SoaResult z = small_object_factorize(SSetMap::identity(circle()), boundary_generators(2), 3, 2);
  CHECK(z.log.empty());
  CHECK_FALSE(z.partial);
  SoaResult k = small_object_factorize(to_point(boundary(1)), horn_generators(2), 3, 2);
  CHECK_FALSE(k.partial);
  CHECK(is_kan_fibration(k.legs.right, 2).holds());
  SoaResult s = small_object_factorize(from_empty(circle()), boundary_generators(2), 5, 2);
  CHECK_FALSE(s.partial);
  CHECK(is_trivial_fibration(s.legs.right, 2).holds());
  CHECK(classify(s.legs.left, MorphismClass::mono).member);
  SoaResult d = small_object_factorize(from_empty(delta(2)), boundary_generators(2), 5, 2);
  CHECK(d.log.size() == 3);
  SoaResult d1 = small_object_factorize(from_empty(delta(2)), boundary_generators(2), 1, 2);
  CHECK(d1.partial);
  CHECK_FALSE(d1.residual.holds());
}
