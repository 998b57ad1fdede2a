#include <doctest.h>

#include "wfskit/holim.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/search.hpp"

using namespace wfskit;

namespace {

SSetMap vertex_map(const SSet& pt, const SSet& target, int vertex) {
  return SSetMap{pt, target, {Simplex::generator(target.nd_of_dim(0)[static_cast<std::size_t>(vertex)], 0)}};
}

// * <- two points -> *: a suspension of S^0.
Diagram span_fixture() {
  FinCategory s = span_category();
  Diagram d{s, std::vector<SSet>(3), std::vector<SSetMap>(static_cast<std::size_t>(s.morphism_count()))};
  SSet pt = point(), two = discrete(2);
  d.values[static_cast<std::size_t>(s.object("a"))] = pt;
  d.values[static_cast<std::size_t>(s.object("b"))] = pt;
  d.values[static_cast<std::size_t>(s.object("c"))] = two;
  for (int m = 0; m < s.morphism_count(); ++m) {
    const SSet& v = d.values[static_cast<std::size_t>(s.src(m))];
    d.arrows[static_cast<std::size_t>(m)] = s.is_identity(m) ? SSetMap::identity(v) : to_point(two);
  }
  for (int m = 0; m < s.morphism_count(); ++m)
    if (!s.is_identity(m)) d.arrows[static_cast<std::size_t>(m)].target = pt;
  return d;
}

// * -> K(Z/2) <- *.
Diagram loop_fixture() {
  FinCategory c = cospan_category();
  SSet kg = nerve(cyclic_group_category(2), 3).set, pt = point();
  Diagram d{c, std::vector<SSet>(3), std::vector<SSetMap>(static_cast<std::size_t>(c.morphism_count()))};
  d.values[static_cast<std::size_t>(c.object("a"))] = pt;
  d.values[static_cast<std::size_t>(c.object("b"))] = pt;
  d.values[static_cast<std::size_t>(c.object("c"))] = kg;
  for (int m = 0; m < c.morphism_count(); ++m)
    d.arrows[static_cast<std::size_t>(m)] =
        c.is_identity(m) ? SSetMap::identity(d.values[static_cast<std::size_t>(c.src(m))]) : vertex_map(pt, kg, 0);
  return d;
}

Diagram discrete_fixture() {
  FinCategory s = discrete_category({"x", "y"});
  return Diagram{s, {circle(), delta(1)}, {SSetMap::identity(circle()), SSetMap::identity(delta(1))}};
}

}  // namespace

TEST_CASE("fixtures are functors") {
  CHECK(validate_diagram(span_fixture()).ok);
  CHECK(validate_diagram(loop_fixture()).ok);
  Diagram broken = loop_fixture();
  broken.arrows[0] = vertex_map(point(), broken.values[2], 0);
  CHECK_FALSE(validate_diagram(broken).ok);
}

TEST_CASE("hocolim of the span is a circle") {
  Hocolim h = hocolim(span_fixture(), 3);
  CHECK(h.exact);
  HomologyProfile p = homology(h.set, 2);
  REQUIRE(p.groups.size() == 3);
  CHECK(p.groups[0] == HomologyGroup{1, {}});
  CHECK(p.groups[1] == HomologyGroup{1, {}});
  CHECK(p.groups[2] == HomologyGroup{0, {}});
}

TEST_CASE("hocolim over a discrete shape is the coproduct") {
  Hocolim h = hocolim(discrete_fixture(), 3);
  CHECK(find_isomorphism(h.set, coproduct({circle(), delta(1)}).set).has_value());
}

TEST_CASE("hocolim of a constant diagram over a shape with terminal object") {
  FinCategory s = poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  Diagram d = constant_diagram(s, circle());
  Hocolim h = hocolim(d, 3);
  Hocolim at_top = hocolim(restrict(d, make_functor(terminal_category(), s, {{terminal_category().objects[0], "2"}}, {})), 3);
  SSetMap inc = hocolim_reindex(at_top, h, make_functor(terminal_category(), s, {{terminal_category().objects[0], "2"}}, {}));
  CHECK(weq_oracle(inc, 2).verdict == Verdict::pass);
}

TEST_CASE("diagonal agrees with the coend") {
  for (const Diagram& d : {span_fixture(), discrete_fixture()}) {
    Hocolim h = hocolim(d, 3);
    Coend c = coend_oracle(d, 3);
    SSetMap cmp = coend_comparison(h, c);
    cmp.validate();
    CHECK(is_isomorphism(cmp));
    CHECK(coend_agrees(h, cmp));
  }
  // Constant delta(2) over a 3-chain: the diagonal at 3 is only a skeleton of
  // delta(2) x delta(2), so the comparison is onto the 3-skeleton only.
  FinCategory chain = poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  Diagram k = constant_diagram(chain, delta(2));
  Hocolim h = hocolim(k, 3);
  CHECK_FALSE(h.exact);
  SSetMap cmp = coend_comparison(h, coend_oracle(k, 3));
  CHECK_FALSE(is_isomorphism(cmp));
  CHECK(coend_agrees(h, cmp));
}

TEST_CASE("holim of the loop cospan has two components") {
  Holim h = holim(loop_fixture(), 3);
  CHECK(h.warnings.empty());
  CHECK(h.set.nd_of_dim(0).size() == 4);
  CHECK(pi0(h.set).count == 2);
}

TEST_CASE("holim over discrete and terminal shapes") {
  Holim h = holim(discrete_fixture(), 3);
  CHECK(find_isomorphism(h.set, truncate(product(circle(), delta(1)).set, h.trunc)).has_value());
  Diagram one{terminal_category(), {circle()}, {SSetMap::identity(circle())}};
  Holim t = holim(one, 2);
  CHECK(find_isomorphism(t.set, truncate(circle(), 2)).has_value());
}

TEST_CASE("holim rejects loops in the shape") {
  Diagram d = constant_diagram(cyclic_group_category(2), point());
  CHECK_THROWS_AS(holim(d, 2), CategoryError);
}

TEST_CASE("Kan extensions to the point recover hocolim and holim") {
  for (const Diagram& d : {span_fixture(), loop_fixture()}) {
    Diagram left = hokan_left(to_terminal(d.shape), d, 3);
    CHECK(find_isomorphism(left.values[0], hocolim(d, 3).set).has_value());
  }
  Diagram d = loop_fixture();
  Diagram right = hokan_right(to_terminal(d.shape), d, 3);
  CHECK(find_isomorphism(right.values[0], holim(d, 3).set).has_value());
}

TEST_CASE("Kan extensions along an object inclusion") {
  FinCategory arrow = arrow_category();
  SSet s1 = circle(), d1 = delta(1);
  Diagram d{arrow, {s1, d1}, {}};
  d.arrows.resize(static_cast<std::size_t>(arrow.morphism_count()));
  for (int m = 0; m < arrow.morphism_count(); ++m)
    d.arrows[static_cast<std::size_t>(m)] = arrow.is_identity(m) ? SSetMap::identity(d.values[static_cast<std::size_t>(arrow.src(m))])
                                                                 : SSetMap{s1, d1, {Simplex::generator(0, 0), Simplex{0, Monotone::codegeneracy(0, 0)}}};
  REQUIRE(validate_diagram(d).ok);
  FinCategory one = discrete_category({"a"});
  Diagram da = restrict(d, make_functor(one, arrow, {{"a", "a"}}, {}));
  FinFunctor inc = make_functor(one, arrow, {{"a", "a"}}, {});
  Diagram left = hokan_left(inc, da, 3);
  CHECK(validate_diagram(left).ok);
  CHECK(weq_oracle(left.arrows[static_cast<std::size_t>(arrow.morphism("f"))], 2).verdict == Verdict::pass);
  HomologyProfile hb = homology(truncate(left.values[static_cast<std::size_t>(arrow.object("b"))], 3), 1);
  CHECK(hb.groups[1].betti == 1);
  // Right extension of the value at b along {b} -> (a -> b).
  FinFunctor incb = make_functor(discrete_category({"b"}), arrow, {{"b", "b"}}, {});
  Diagram db = restrict(d, incb);
  Diagram right = hokan_right(incb, db, 3);
  CHECK(validate_diagram(right).ok);
  CHECK(pi0(right.values[static_cast<std::size_t>(arrow.object("a"))]).count == 1);
  CHECK(weq_oracle(right.arrows[static_cast<std::size_t>(arrow.morphism("f"))], 1).verdict == Verdict::pass);
}

TEST_CASE("homotopy invariance on a pointwise weak equivalence") {
  // Replace the two points of the span by two intervals.
  Diagram a = span_fixture();
  Diagram b = a;
  const FinCategory& s = a.shape;
  SSet two_int = coproduct({delta(1), delta(1)}).set;
  b.values[static_cast<std::size_t>(s.object("c"))] = two_int;
  std::vector<SSetMap> eta(3);
  for (int m = 0; m < s.morphism_count(); ++m) {
    const SSet& v = b.values[static_cast<std::size_t>(s.src(m))];
    b.arrows[static_cast<std::size_t>(m)] = s.is_identity(m) ? SSetMap::identity(v) : to_point(two_int);
    if (!s.is_identity(m)) b.arrows[static_cast<std::size_t>(m)].target = b.values[static_cast<std::size_t>(s.dst(m))];
  }
  REQUIRE(validate_diagram(b).ok);
  eta[static_cast<std::size_t>(s.object("a"))] = SSetMap::identity(point());
  eta[static_cast<std::size_t>(s.object("b"))] = SSetMap::identity(point());
  // Each point goes to the first vertex of its interval.
  SSetMap pick{a.values[static_cast<std::size_t>(s.object("c"))], two_int, {}};
  for (int k = 0; k < 2; ++k) pick.assign.push_back(Simplex::generator(two_int.nd_of_dim(0)[static_cast<std::size_t>(2 * k)], 0));
  eta[static_cast<std::size_t>(s.object("c"))] = pick;
  Hocolim ha = hocolim(a, 3), hb = hocolim(b, 3);
  SSetMap f = hocolim_map(ha, hb, eta);
  f.validate();
  CHECK(weq_oracle(f, 2).verdict == Verdict::pass);
}
