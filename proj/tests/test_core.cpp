#include <doctest.h>

#include "wfskit/homology.hpp"
#include "wfskit/search.hpp"
#include "wfskit/sset.hpp"

using namespace wfskit;

namespace {
std::vector<int> counts(const SSet& x) {
  std::vector<int> c;
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(static_cast<int>(x.nd_of_dim(n).size()));
  return c;
}
}  // namespace

TEST_CASE("monotone words") {
  Monotone s{{0, 0, 1, 1}, 1};
  CHECK(degeneracy_word(s) == "s2s0");
  CHECK(parse_degeneracy_word("s2s0", 1) == s);
  CHECK(all_monotone(1, 1).size() == 3);
  CHECK(all_surjections(3, 1).size() == 3);
}

TEST_CASE("standard simplices") {
  CHECK(counts(delta(2)) == std::vector<int>{3, 3, 1});
  CHECK(counts(boundary(2)) == std::vector<int>{3, 3});
  CHECK(counts(horn(2, 1)) == std::vector<int>{3, 2});
  CHECK(boundary(0).empty());
  CHECK(counts(delta(3)) == std::vector<int>{4, 6, 4, 1});
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n && n >= 1; ++k) horn_inclusion(n, k).validate();
}

TEST_CASE("products and pushouts") {
  Product p = product(delta(1), delta(1));
  CHECK(counts(p.set) == std::vector<int>{4, 5, 2});
  p.first.validate();
  p.second.validate();
  CHECK(find_isomorphism(product(horn(2, 0), delta(0)).set, horn(2, 0)).has_value());
  Pushout po = pushout(boundary_inclusion(1), to_point(boundary(1)));
  CHECK(counts(po.set) == std::vector<int>{1, 1});
  CHECK(find_isomorphism(po.set, circle()).has_value());
}

TEST_CASE("map search") {
  CHECK(all_maps(delta(1), delta(1)).size() == 3);
  CHECK(all_maps(delta(2), delta(1)).size() == 4);
  CHECK(all_maps(circle(), delta(1)).size() == 2);
  CHECK(all_maps(boundary(1), delta(0)).size() == 1);
}

TEST_CASE("homology") {
  for (int n = 0; n <= 3; ++n) CHECK(homology(delta(n), 2).to_string() == "H0=Z, H1=0, H2=0");
  CHECK(homology(circle(), 1).to_string() == "H0=Z, H1=Z");
  CHECK(homology(boundary(3), 2).to_string() == "H0=Z, H1=0, H2=Z");
  CHECK(pi0(boundary(1)).count == 2);
  CHECK(weq_oracle(SSetMap::identity(circle()), 2).verdict == Verdict::pass);
  SSetMap v = yoneda(delta(2), Simplex::generator(0, 0));
  CHECK(weq_oracle(v, 2).verdict == Verdict::pass);
  CHECK(weq_oracle(to_point(circle()), 2).verdict == Verdict::fail);
  CHECK(weq_oracle(boundary_inclusion(2), 2).verdict == Verdict::fail);
  CHECK(weq_oracle(horn_inclusion(2, 1), 2).verdict == Verdict::pass);
}

TEST_CASE("torsion") {
  // RP^2-like: one vertex, one edge e, one 2-simplex with faces (e, e, s0 v)... use d0=e,d1=s0v? build Z/2.
  SSet::Builder b;
  int v = b.add("v", 0);
  int e = b.add("e", 1, {Simplex::generator(v, 0), Simplex::generator(v, 0)});
  b.add("t", 2, {Simplex::generator(e, 1), Simplex{v, Monotone::constant(1, 0, 0)}, Simplex::generator(e, 1)});
  SSet rp2 = b.build();
  CHECK(homology(rp2, 1).to_string() == "H0=Z, H1=Z/2");
}
