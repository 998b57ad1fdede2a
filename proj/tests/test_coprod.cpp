#include <doctest.h>

#include <random>

#include "wfskit/coprod.hpp"

using namespace wfskit;

namespace {
using SetCompletion = Completion<FinSetCategory>;
using Family = CoprodObject<int>;
}  // namespace

TEST_CASE("embedding is fully faithful") {
  SetCompletion c(FinSetCategory(3));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto h = c.hom(c.embed(a), c.embed(b));
      CHECK(h.size() == all_set_maps(a, b).size());
      for (const SetMap& m : all_set_maps(a, b)) CHECK(std::find(h.begin(), h.end(), c.embed_map(m)) != h.end());
    }
  CHECK(is_terminal(c, *c.terminal()));
  CHECK(is_initial(c, *c.initial()));
  CHECK(c.embed(2).size() == 1);
}

TEST_CASE("collapse is left adjoint to the embedding") {
  FinSetCategory sets(4);
  SetCompletion c(sets);
  Family t = make_family<int>({1, 2});
  CHECK(collapse(sets, t)->apex == 3);
  CHECK(collapse(sets, c.embed(3))->apex == 3);
  for (int s = 0; s <= 3; ++s) CHECK(check_collapse_adjunction(c, t, s));
  CHECK(check_collapse_adjunction(c, make_family<int>({}), 2));
}

TEST_CASE("limits in the completion") {
  FinSetCategory sets(2);
  SetCompletion c(sets, 2);
  auto p = c.product(make_family<int>({1, 2}), *c.terminal());
  REQUIRE(p);
  CHECK(find_iso(c, p->apex, make_family<int>({1, 2})).has_value());
  auto q = c.product(make_family<int>({1, 2}), make_family<int>({2, 0, 1}));
  REQUIRE(q);
  CHECK(q->apex.size() == 6);
  CHECK(q->apex.family == std::vector<int>{2, 0, 1, 4, 0, 2});
  // Pullback of the two injections of a binary coproduct: empty family.
  auto cone = c.coproduct({make_family<int>({1}), make_family<int>({2})});
  auto meet = c.pullback(cone->injections[0], cone->injections[1]);
  CHECK(meet->apex.size() == 0);
  CHECK(verify_pullback(c, cone->injections[0], cone->injections[1], *meet));
  // Pullback of an injection along itself: the summand.
  auto self = c.pullback(cone->injections[1], cone->injections[1]);
  CHECK(self->apex.family == std::vector<int>{2});
}

TEST_CASE("finite sets are extensive") {
  FinSetCategory sets(4);
  ExtensivityReport r = verify_extensive(sets, true);
  CHECK(r.passes());
  CHECK(r.find("disjointness")->instances == 25);
  CHECK(r.cap > 0);
  ExtensivityReport low = verify_extensive(sets, false, 10);
  CHECK_FALSE(low.complete);
}

TEST_CASE("the completion of a finite base is extensive") {
  ExtensivityReport s = verify_extensive(SetCompletion(FinSetCategory(1), 2), true);
  CHECK(s.passes());
  ExtensivityReport f = verify_extensive(Completion<FinCategoryBase>(FinCategoryBase(span_category()), 2));
  CHECK(f.passes());
}

TEST_CASE("pointed sets are not extensive") {
  FinCategory p = pointed_sets_category();
  CHECK(validate_category(p).ok);
  FinCategoryBase base(p);
  auto e = base.initial();
  REQUIRE(e);
  CHECK(base.name(*e) == "E");
  auto wedge = base.coproduct({p.object("P2"), p.object("P2")});
  REQUIRE(wedge);
  CHECK(base.name(wedge->apex) == "P3");
  ExtensivityReport r = verify_extensive(base);
  CHECK_FALSE(r.passes());
  const AxiomVerdict* d = r.find("disjointness");
  CHECK_FALSE(d->pass);
  CHECK(d->witness.find("is P1") != std::string::npos);
  // The completion repairs this.
  CHECK(verify_extensive(Completion<FinCategoryBase>(base, 1)).passes());
}

TEST_CASE("connected objects are the embedded ones") {
  SetCompletion c(FinSetCategory(1), 2);
  for (const Family& p : c.objects()) CHECK(hom_preserves_coproducts(c, p) == (p.size() == 1));
}

TEST_CASE("hom out of a connected object preserves pushouts along injections") {
  // Pushout of A -> A u B along f : A -> C is C u B; compare hom-set pushouts.
  SetCompletion c(FinSetCategory(2), 2);
  std::mt19937 rng(7);
  auto objs = c.objects();
  for (int trial = 0; trial < 10; ++trial) {
    const Family& a = objs[rng() % objs.size()];
    const Family& b = objs[rng() % objs.size()];
    const Family& cc = objs[rng() % objs.size()];
    auto fs = c.hom(a, cc);
    if (fs.empty()) continue;
    const auto& f = fs[rng() % fs.size()];
    const Family p = c.embed(static_cast<int>(rng() % 3));
    auto ab = c.coproduct({a, b});
    auto cb = c.coproduct({cc, b});
    // Set-level pushout of Hom(P, C) <- Hom(P, A) -> Hom(P, A u B) has
    // |Hom(P, C)| + |Hom(P, A u B)| - |Hom(P, A)| elements since the left map
    // is injective.
    const std::size_t expected = c.hom(p, cc).size() + c.hom(p, ab->apex).size() - c.hom(p, a).size();
    CHECK(c.hom(p, cb->apex).size() == expected);
  }
}

TEST_CASE("collapse commutes with pullbacks on seeded set diagrams") {
  FinSetCategory sets(3);
  SetCompletion c(sets, 2);
  std::mt19937 rng(11);
  auto objs = c.objects();
  int done = 0;
  while (done < 10) {
    const Family& x = objs[rng() % objs.size()];
    const Family& y = objs[rng() % objs.size()];
    const Family& z = objs[rng() % objs.size()];
    auto fs = c.hom(x, z), gs = c.hom(y, z);
    if (fs.empty() || gs.empty()) continue;
    const auto& f = fs[rng() % fs.size()];
    const auto& g = gs[rng() % gs.size()];
    auto pb = c.pullback(f, g);
    REQUIRE(pb);
    // Collapse the cospan and pull back in FinSet.
    auto flat = [&](const CoprodMorphism<int, SetMap>& m) {
      auto s = *collapse(sets, m.source), t = *collapse(sets, m.target);
      SetMap out{s.apex, t.apex, std::vector<int>(static_cast<std::size_t>(s.apex))};
      for (std::size_t i = 0; i < m.index_map.size(); ++i)
        for (int e = 0; e < m.source.family[i]; ++e)
          out.values[static_cast<std::size_t>(s.injections[i](e))] =
              t.injections[static_cast<std::size_t>(m.index_map[i])](m.components[i](e));
      return out;
    };
    CHECK(collapse(sets, pb->apex)->apex == sets.pullback(flat(f), flat(g))->apex);
    ++done;
  }
}
