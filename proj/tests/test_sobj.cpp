#include <doctest.h>

#include <random>

#include "wfskit/corpus.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/search.hpp"

#include <set>

using namespace wfskit;

namespace {
Family fam(std::vector<int> sizes) { return make_family<int>(std::move(sizes)); }

// p : delta(1) -> delta(0); s_0 of the vertex meets the nondegenerate edge.
SimpObject collapsed_edge() { return SimpObject{to_point(delta(1)), 3}; }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("tensor levels") {
  Family a = fam({1, 2});
  for (int n = 0; n <= 3; ++n) {
    CHECK(level(tensor(a, point()), n).size() == 2);
    CHECK(level(tensor(a, discrete(2)), n).family == std::vector<int>{1, 2, 1, 2});
    CHECK(level(tensor(a, delta(1)), n).size() == static_cast<std::size_t>(2 * (n + 2)));
  }
  CHECK(sorted(level(tensor(a, delta(1)), 1).family) == std::vector<int>{1, 1, 1, 2, 2, 2});
}

TEST_CASE("left hom") {
  SimpObject x = tensor(fam({2, 1}), circle());
  HomLeft h0 = hom_left(delta(0), x);
  CHECK(sorted(h0.object.family) == sorted(level(x, 0).family));
  HomLeft h1 = hom_left(delta(1), constant(fam({2, 3})));
  CHECK(sorted(h1.object.family) == std::vector<int>{2, 3});
  HomLeft hb = hom_left(boundary(1), x);
  CHECK(sorted(hb.object.family) == std::vector<int>{1, 2, 2, 4});
  CHECK(matching(constant(fam({2})), 0).family == std::vector<int>{1});  // terminal
}

TEST_CASE("right hom") {
  SimpObject c = constant(fam({2, 1}));
  // Hom(U 1, const b) = the two-point constant object; Hom(U 2, -) counts 4 + 1.
  CHECK(hom_right(fam({1}), c).size() == 3);
  CHECK(hom_right(fam({2}), c).size() == 5);
  CHECK(hom_right(fam({0}), c).size() == 2);
  SSet t = hom_right(fam({}), c);
  CHECK(t.size() == 1);
  // Connected source: Hom(U s, a (x) k) = Hom(U s, a) (x) k.
  SimpObject x = tensor(fam({2, 1}), circle());
  SSet h = hom_right(fam({2}), x);
  HomologyProfile hx = homology(h, 1), hk = homology(circle(), 1);
  CHECK(h.nd_of_dim(0).size() == 5);
  CHECK(hx.groups[0].betti == 5 * hk.groups[0].betti);
  CHECK(hx.groups[1].betti == 5 * hk.groups[1].betti);
}

TEST_CASE("latching objects") {
  SimpObject c = constant(fam({2, 3}));
  CHECK(latching(c, 0).object.size() == 0);
  CHECK(sorted(latching(c, 2).object.family) == std::vector<int>{2, 3});
  CHECK(latching(tensor(fam({1}), delta(1)), 1).object.size() == 2);
  CHECK_THROWS_AS(latching(collapsed_edge(), 1), UnsupportedError);
  CHECK(latching(collapsed_edge(), 0).object.size() == 0);
}

TEST_CASE("cofibrancy decomposition") {
  CofibrancyResult c = is_cofibrant(constant(fam({2})));
  REQUIRE(c.cofibrant);
  CHECK(c.certificate.size() == 4);
  for (int n = 1; n <= 3; ++n) CHECK(c.certificate[static_cast<std::size_t>(n)].nondegenerate.empty());
  CHECK(verify_cofibrancy(constant(fam({2})), c));
  for (const SSet& k : small_ssets()) {
    SimpObject t = tensor(fam({1, 2}), k);
    CofibrancyResult r = is_cofibrant(t);
    CHECK(r.cofibrant);
    CHECK(verify_cofibrancy(t, r));
  }
  CofibrancyResult bad = is_cofibrant(collapsed_edge());
  CHECK_FALSE(bad.cofibrant);
  CHECK(bad.failed_level == 1);
  CHECK_FALSE(verify_cofibrancy(collapsed_edge(), c));
}

TEST_CASE("certificate tampering is caught") {
  SimpObject t = tensor(fam({1}), delta(1));
  CofibrancyResult r = is_cofibrant(t);
  REQUIRE(r.cofibrant);
  CofibrancyResult moved = r;
  auto& lv = moved.certificate[1];
  REQUIRE(!lv.degenerate.empty());
  lv.nondegenerate.push_back(lv.degenerate.back().element);
  lv.degenerate.pop_back();
  CHECK_FALSE(verify_cofibrancy(t, moved));
}

TEST_CASE("Reedy factorization of a trivial fibration is the identity on the left") {
  SimpObject x = tensor(fam({2}), delta(1));
  ReedyResult r = reedy_factorize(identity(x), 3);
  CHECK(verify_reedy(r).ok());
  for (int c : r.cells) CHECK(c == 0);
  CHECK(r.left.index.assign.size() == static_cast<std::size_t>(x.index().size()));
}

TEST_CASE("Reedy replacement of a constant object") {
  SimpObject c = constant(fam({2, 1}));
  ReedyResult r = reedy_factorize(initial_map(c), 3);
  CHECK(verify_reedy(r).ok());
  CHECK(r.cells == std::vector<int>{2, 0, 0, 0});
  CHECK(find_isomorphism(r.middle.index(), discrete(2)).has_value());
  CHECK(sorted(level(r.middle, 2).family) == std::vector<int>{1, 2});
  CHECK(is_cofibrant(r.middle).cofibrant);
}

TEST_CASE("Reedy factorization of a fold") {
  SimpObject a = tensor(fam({1, 2}), delta(1));
  Coproduct two = coproduct({a.total(), a.total()});
  Coproduct twob = coproduct({a.index(), a.index()});
  SSetMap fold_e = copair(two, {SSetMap::identity(a.total()), SSetMap::identity(a.total())}, a.total());
  SSetMap fold_b = copair(twob, {SSetMap::identity(a.index()), SSetMap::identity(a.index())}, a.index());
  SSetMap p2 = copair(two, {compose(twob.injections[0], a.p), compose(twob.injections[1], a.p)}, twob.set);
  SimpObject aa{p2, 3};
  SimpMorphism fold{aa, a, fold_e, fold_b};
  fold.validate();
  ReedyResult r = reedy_factorize(fold, 3);
  ReedyCheck ck = verify_reedy(r);
  CHECK(ck.ok());
  // The right leg is a split epi levelwise.
  for (int n = 0; n <= 3; ++n) {
    Tabulation tz = tabulate(r.middle.index(), n), ta = tabulate(a.index(), n);
    auto lm = level_map(r.right.index, tz, ta);
    std::set<int> hit(lm[static_cast<std::size_t>(n)].begin(), lm[static_cast<std::size_t>(n)].end());
    CHECK(static_cast<int>(hit.size()) == ta.levels.count[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("Reedy check catches a broken right leg") {
  SimpObject c = constant(fam({2}));
  ReedyResult r = reedy_factorize(initial_map(c), 3);
  ReedyResult broken = reedy_factorize(initial_map(empty_object()), 3);
  broken.right = SimpMorphism{broken.middle, c, from_empty(c.total()), from_empty(c.index())};
  CHECK_FALSE(verify_reedy(broken).right_ok);
  CHECK(verify_reedy(r).right_ok);
}

TEST_CASE("cofibrancy deciders agree on seeded objects") {
  std::mt19937_64 rng(5);
  int cof = 0;
  for (int i = 0; i < 12; ++i) {
    SimpObject x = random_simp_object(rng);
    const bool a = is_cofibrant(x).cofibrant;
    RlpCofibrancy b = is_cofibrant_rlp(x);
    CHECK(b.conclusive);
    CHECK(a == b.cofibrant);
    cof += a;
  }
  CHECK(cof > 0);
  CHECK(cof < 12);
  CHECK_FALSE(is_cofibrant_rlp(collapsed_edge()).cofibrant);
}

TEST_CASE("fibrations and weak equivalences") {
  SimpObject x = tensor(fam({1, 2}), delta(1));
  auto ps = default_projectives({x});
  CHECK(ps.size() == 2);
  CHECK(is_fibration(identity(x), ps, 2).verdict == Verdict::pass);
  CHECK(is_weq(identity(x), ps, 2).verdict == Verdict::pass);

  // constant(a u b) -> constant(a), split by the injection.
  SimpObject ab = constant(fam({1, 2})), a = constant(fam({1}));
  auto proj = all_morphisms(ab, a);
  REQUIRE(!proj.empty());
  CHECK(is_fibration(proj.front(), default_projectives({ab, a}), 2).verdict == Verdict::pass);
  CHECK(is_weq(proj.front(), default_projectives({ab, a}), 2).verdict == Verdict::fail);

  // The Reedy replacement of a constant object is a weak equivalence.
  SimpObject c = constant(fam({2, 1}));
  ReedyResult r = reedy_factorize(initial_map(c), 3);
  ClassVerdict w = is_weq(r.right, default_projectives({c}), 3);
  CHECK(w.verdict == Verdict::pass);
  CHECK(w.trunc == 2);

  // delta(1) (x) a -> point (x) a collapses the interval: a weak equivalence
  // but not a fibration, since delta(1) is not Kan.
  SimpObject ti = tensor(fam({2}), delta(1)), tp = constant(fam({2}));
  SSetMap e = product_map(product(delta(1), discrete(2)), product(point(), discrete(2)), to_point(delta(1)),
                          SSetMap::identity(discrete(2)));
  SSetMap b = product_map(product(delta(1), discrete(1)), product(point(), discrete(1)), to_point(delta(1)),
                          SSetMap::identity(discrete(1)));
  SimpMorphism squash{ti, tp, e, b};
  squash.validate();
  CHECK(is_weq(squash, default_projectives({ti}), 2).verdict == Verdict::pass);
  CHECK(is_fibration(squash, default_projectives({ti}), 2).verdict == Verdict::fail);
}

TEST_CASE("a non-fibration is refuted with a projective witness") {
  // Include boundary(1) into delta(1) over a single member.
  SimpObject s = tensor(fam({1}), discrete(2)), d = tensor(fam({1}), delta(1));
  SimpMorphism f{s, d, product_map(product(discrete(2), discrete(1)), product(delta(1), discrete(1)),
                                   boundary_inclusion(1), SSetMap::identity(discrete(1))),
                 product_map(product(discrete(2), discrete(1)), product(delta(1), discrete(1)),
                             boundary_inclusion(1), SSetMap::identity(discrete(1)))};
  ClassVerdict v = is_fibration(f, {fam({1})}, 2);
  CHECK(v.verdict == Verdict::fail);
  CHECK(v.per_projective.front().reason.find("horn") != std::string::npos);
}

TEST_CASE("pullbacks and levelwise collapse") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 4; ++i) {
    SimpMorphism f = random_simp_morphism(rng);
    SimpPullback pb = pullback(f, identity(f.target));
    pb.first.validate();
    CHECK(find_isomorphism(pb.object.total(), f.source.total()).has_value());
    CHECK(collapse_levelwise(f).assign == f.total.assign);
  }
}
