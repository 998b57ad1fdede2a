// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <wfskit binary> <fixture dir> <work dir>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sys/wait.h>
#include <sstream>

#include "wfskit/coprod.hpp"
#include "wfskit/corpus.hpp"
#include "wfskit/holim.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/io.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/search.hpp"
#include "wfskit/wfs.hpp"

using namespace wfskit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }
std::size_t u(int x) { return static_cast<std::size_t>(x); }

struct Line {
  std::string id;
  bool pass;
  std::string what;
  std::string detail;
};

std::optional<SSetMap> random_map(std::mt19937_64& rng, const std::vector<SSet>& from, const std::vector<SSet>& to) {
  for (int tries = 0; tries < 64; ++tries) {
    const SSet& x = from[rng() % from.size()];
    const SSet& y = to[rng() % to.size()];
    std::vector<SSetMap> all = all_maps(x, y);
    if (!all.empty()) return all[rng() % all.size()];
  }
  return std::nullopt;
}

// Brute-force lift search: generator by generator over the level tables, no
// shared search code. Faces are checked directly against the chosen images.
bool brute_lifts(const LiftingSquare& sq) {
  const SSet& b = sq.lambda.target;
  const SSet& x = sq.rho.source;
  Tabulation tx = tabulate(x, std::max(0, b.top_dim()));
  std::vector<Simplex> assign(u(b.size()));
  std::function<bool(int)> go = [&](int g) {
    if (g == b.size()) {
      SSetMap l{b, x, assign};
      return compose(l, sq.lambda) == sq.top && compose(sq.rho, l) == sq.bottom;
    }
    const NdSimplex& s = b.nd(g);
    for (const Simplex& c : tx.simplices[u(s.dim)]) {
      if (sq.rho(c) != sq.bottom(g)) continue;
      bool ok = true;
      for (int i = 0; ok && i < static_cast<int>(s.faces.size()); ++i) {
        const Simplex& f = s.faces[u(i)];
        ok = x.face(c, i) == x.apply(assign[u(f.nd)], f.sigma);
      }
      if (!ok) continue;
      assign[u(g)] = c;
      if (go(g + 1)) return true;
    }
    return false;
  };
  return go(0);
}

Line c1_lifting() {
  auto t = Clock::now();
  std::vector<SSetMap> lambdas;
  for (int n = 0; n <= 2; ++n) lambdas.push_back(boundary_inclusion(n));
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k) lambdas.push_back(horn_inclusion(n, k));
  std::mt19937_64 rng(101);
  std::vector<SSet> sets = small_ssets();
  std::vector<SSet> targets(sets.begin(), sets.begin() + 5);
  std::size_t squares = 0, lifted = 0, disagree = 0, budget = 0;
  for (int i = 0; i < 20; ++i) {
    SSetMap rho = *random_map(rng, sets, targets);
    for (const SSetMap& l : lambdas)
      for (const LiftingSquare& sq : all_squares(l, rho)) {
        ++squares;
        LiftResult r = solve_lifting(sq);
        if (r.status == LiftStatus::budget) {
          ++budget;
          continue;
        }
        const bool a = r.status == LiftStatus::lifted;
        lifted += a;
        if (a != brute_lifts(sq) || (a && !verify_lift(sq, *r.lift))) ++disagree;
      }
  }
  const double s = since(t);
  std::ostringstream d;
  d << squares << " squares (" << lifted << " liftable), " << disagree << " disagreements, " << budget
    << " budget stops, " << s << " s";
  return {"C1", disagree == 0 && budget == 0 && squares > 0 && s < 60, "lifting oracle soundness", d.str()};
}

Line c2_adjunction() {
  auto t = Clock::now();
  std::mt19937_64 rng(202);
  std::vector<SSetMap> small{from_empty(point()), boundary_inclusion(1), horn_inclusion(1, 0), horn_inclusion(1, 1),
                             to_point(discrete(2)), to_point(delta(1))};
  std::vector<SSet> sets = small_ssets();
  std::vector<SSet> lows(sets.begin(), sets.begin() + 5);
  int failures = 0, inconclusive = 0;
  for (int i = 0; i < 100; ++i) {
    SSetMap h = *random_map(rng, lows, lows);
    SSetMap g = small[rng() % small.size()];
    AdjunctionCheck p = check_adjunction_product(small[rng() % small.size()], g, h);
    std::vector<SetMap> fs = all_set_maps(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
    if (fs.empty()) fs.push_back(SetMap{0, 1, {}});
    AdjunctionCheck q = check_adjunction_tensor(fs[rng() % fs.size()], g, h);
    for (const AdjunctionCheck* c : {&p, &q}) {
      failures += !c->agree;
      inconclusive += !c->conclusive;
    }
  }
  std::ostringstream d;
  d << "100 triples x {product, tensor}: " << failures << " failures, " << inconclusive << " inconclusive, " << since(t)
    << " s";
  return {"C2", failures == 0 && inconclusive == 0, "two-variable adjunction correspondence", d.str()};
}

std::string square_text(const LiftingSquare& sq) {
  std::ostringstream o;
  o << "top:";
  for (int i = 0; i < sq.top.source.size(); ++i)
    o << " " << sq.top.source.nd(i).name << "->" << sq.top.target.to_string(sq.top(i));
  return o.str();
}

Line c3_fibrations() {
  std::ostringstream d;
  bool a = true;
  d << "(a)";
  for (int n = 0; n <= 3; ++n) {
    RlpReport r = is_trivial_fibration(to_point(delta(n)), 3);
    d << " n=" << n << ":" << (r.holds() ? "pass" : "fail");
    if (!r.holds()) {
      a = false;
      if (r.witness) d << " [no filler; " << square_text(*r.witness) << "]";
    }
  }
  RlpReport k = is_kan_fibration(to_point(delta(1)), 3);
  const bool b = !k.holds() && k.witness && k.witness->lambda.target.top_dim() >= 1 &&
                 k.witness->lambda.source.top_dim() == k.witness->lambda.target.top_dim() - 1;
  d << "; (b) delta(1) not Kan: " << (b ? "pass" : "fail");
  if (k.witness) d << " [horn " << square_text(*k.witness) << "]";
  RlpReport g = is_kan_fibration(to_point(nerve(cyclic_group_category(2), 4).set), 3);
  d << "; (c) nerve of Z/2 Kan to dim 3: " << (g.holds() ? "pass" : "fail");
  if (!a) d << "; (a) is false for n >= 1: delta(n) is not Kan";
  return {"C3", a && b && g.holds(), "trivial and Kan fibration facts", d.str()};
}

Diagram span_fixture() {
  FinCategory s = span_category();
  SSet pt = point(), two = discrete(2);
  Diagram d{s, std::vector<SSet>(3), std::vector<SSetMap>(u(s.morphism_count()))};
  d.values[u(s.object("a"))] = pt;
  d.values[u(s.object("b"))] = pt;
  d.values[u(s.object("c"))] = two;
  for (int m = 0; m < s.morphism_count(); ++m) {
    d.arrows[u(m)] = s.is_identity(m) ? SSetMap::identity(d.values[u(s.src(m))]) : to_point(two);
    if (!s.is_identity(m)) d.arrows[u(m)].target = pt;
  }
  return d;
}

Line c4_circle() {
  auto t = Clock::now();
  Diagram d = span_fixture();
  Hocolim h = hocolim(d, 3);
  HomologyProfile p = homology(h.set, 2);
  Coend c = coend_oracle(d, 3);
  const bool iso = is_isomorphism(coend_comparison(h, c)) && find_isomorphism(h.set, c.set).has_value();
  const bool z = p.groups.size() == 3 && p.groups[0].betti == 1 && p.groups[0].torsion.empty() &&
                 p.groups[1].betti == 1 && p.groups[1].torsion.empty() && p.groups[2].betti == 0 &&
                 p.groups[2].torsion.empty();
  const double s = since(t);
  std::ostringstream o;
  o << p.to_string() << (h.exact ? " (exact)" : " (truncated)") << ", coend " << (iso ? "isomorphic" : "NOT isomorphic")
    << ", " << s << " s";
  return {"C4", z && iso && h.exact && s < 10, "circle regression", o.str()};
}

// Fills composite arrows from the given generating ones.
Diagram make_diagram(const FinCategory& shape, std::vector<SSet> values, std::map<std::string, SSetMap> given) {
  Diagram d{shape, std::move(values), std::vector<SSetMap>(u(shape.morphism_count()))};
  std::vector<bool> set(u(shape.morphism_count()), false);
  for (int m = 0; m < shape.morphism_count(); ++m) {
    if (shape.is_identity(m)) {
      d.arrows[u(m)] = SSetMap::identity(d.values[u(shape.src(m))]);
      set[u(m)] = true;
    } else if (auto it = given.find(shape.morphisms[u(m)].id); it != given.end()) {
      d.arrows[u(m)] = it->second;
      set[u(m)] = true;
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int g = 0; g < shape.morphism_count(); ++g)
      for (int f = 0; f < shape.morphism_count(); ++f) {
        const int gf = shape.compose(g, f);
        if (gf >= 0 && !set[u(gf)] && set[u(g)] && set[u(f)]) {
          d.arrows[u(gf)] = compose(d.arrows[u(g)], d.arrows[u(f)]);
          set[u(gf)] = grew = true;
        }
      }
  }
  return d;
}

std::vector<Diagram> coend_corpus() {
  std::vector<Diagram> out;
  std::vector<SSet> sets = small_ssets();
  std::vector<FinCategory> shapes{terminal_category(), discrete_category({"x", "y"}), discrete_category({"x", "y", "z"}),
                                  arrow_category(), span_category(), cospan_category(),
                                  poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}),
                                  cyclic_group_category(2), idempotent_category()};
  for (const FinCategory& s : shapes)
    for (const SSet& x : sets) out.push_back(constant_diagram(s, x));
  std::mt19937_64 rng(505);
  std::vector<SSet> lows(sets.begin(), sets.begin() + 5);
  auto pick = [&](const SSet& from, const SSet& to) {
    std::vector<SSetMap> all = all_maps(from, to);
    return all.empty() ? std::optional<SSetMap>() : std::optional<SSetMap>(all[rng() % all.size()]);
  };
  for (int i = 0; i < 12; ++i) {
    const SSet &a = lows[rng() % lows.size()], &b = lows[rng() % lows.size()], &c = lows[rng() % lows.size()];
    if (auto f = pick(a, b)) out.push_back(make_diagram(arrow_category(), {a, b}, {{"f", *f}}));
    auto l = pick(c, a), r = pick(c, b);
    if (l && r) out.push_back(make_diagram(span_category(), {a, b, c}, {{"l", *l}, {"r", *r}}));
    auto l2 = pick(a, c), r2 = pick(b, c);
    if (l2 && r2) out.push_back(make_diagram(cospan_category(), {a, b, c}, {{"l", *l2}, {"r", *r2}}));
    auto f01 = pick(a, b), f12 = pick(b, c);
    if (f01 && f12)
      out.push_back(make_diagram(poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}), {a, b, c},
                                 {{"0<1", *f01}, {"1<2", *f12}}));
  }
  // Nontrivial actions on two points.
  SSet two = discrete(2);
  SSetMap swap{two, two, {Simplex::generator(1, 0), Simplex::generator(0, 0)}};
  SSetMap squash{two, two, {Simplex::generator(0, 0), Simplex::generator(0, 0)}};
  out.push_back(make_diagram(cyclic_group_category(2), {two}, {{"g1", swap}}));
  out.push_back(make_diagram(idempotent_category(), {two}, {{"e", squash}}));
  return out;
}

Line c5_coend() {
  auto t = Clock::now();
  std::size_t total = 0, iso = 0, invalid = 0;
  std::string first_bad;
  for (const Diagram& d : coend_corpus()) {
    if (!validate_diagram(d).ok) {
      ++invalid;
      continue;
    }
    ++total;
    Hocolim h = hocolim(d, 3);
    Coend c = coend_oracle(d, 3);
    if (coend_agrees(h, coend_comparison(h, c))) {
      ++iso;
    } else if (first_bad.empty()) {
      std::ostringstream b;
      b << "; first mismatch on a shape with " << d.shape.object_count() << " objects and " << d.shape.morphism_count()
        << " morphisms, sizes " << h.set.size() << " vs " << c.set.size();
      first_bad = b.str();
    }
  }
  std::ostringstream o;
  o << iso << "/" << total << " diagrams agree with the coend through the truncation, " << invalid << " invalid, " << since(t) << " s" << first_bad;
  return {"C5", iso == total && invalid == 0 && total > 0, "diagonal formula equals the coend", o.str()};
}

Line c6_cofibrancy() {
  auto t = Clock::now();
  std::mt19937_64 rng(606);
  int disagree = 0, inconclusive = 0, cof = 0, certs = 0;
  for (int i = 0; i < 50; ++i) {
    SimpObject x = random_simp_object(rng);
    CofibrancyResult a = is_cofibrant(x);
    RlpCofibrancy b = is_cofibrant_rlp(x);
    cof += a.cofibrant;
    inconclusive += !b.conclusive;
    disagree += b.conclusive && a.cofibrant != b.cofibrant;
    certs += a.cofibrant && verify_cofibrancy(x, a);
  }
  std::ostringstream o;
  o << "50 objects (" << cof << " cofibrant, " << certs << " certificates re-checked): " << disagree << " disagreements, "
    << inconclusive << " inconclusive, " << since(t) << " s";
  return {"C6", disagree == 0 && inconclusive == 0 && certs == cof, "cofibrancy deciders agree", o.str()};
}

// Re-checks a Reedy result from its serialized form, the way `verify` does.
bool reedy_round_trip(const SimpMorphism& f, const ReedyResult& r) {
  SimpObject z = sobj_from_json(json::parse(to_json(r.middle).dump()));
  auto leg = [](const SimpObject& s, const SimpObject& t, const SimpMorphism& g) {
    SimpMorphism m{s, t, map_from_json(s.total(), t.total(), json::parse(assign_to_json(g.total).dump())),
                   map_from_json(s.index(), t.index(), json::parse(assign_to_json(g.index).dump()))};
    m.validate();
    return m;
  };
  SimpMorphism l = leg(f.source, z, r.left), rt = leg(z, f.target, r.right);
  SimpMorphism c = compose(rt, l);
  if (!(c.total == f.total) || !(c.index == f.index)) return false;
  return verify_reedy(ReedyResult{z, l, rt, r.cells, r.trunc}).ok();
}

Line c7_reedy() {
  auto t = Clock::now();
  std::mt19937_64 rng(707);
  int ok = 0, left = 0, right = 0;
  for (int i = 0; i < 20; ++i) {
    SimpMorphism f = random_simp_morphism(rng);
    ReedyResult r = reedy_factorize(f, 3);
    ReedyCheck c = verify_reedy(r);
    left += c.left_ok;
    right += c.right_ok;
    ok += c.ok() && reedy_round_trip(f, r);
  }
  std::ostringstream o;
  o << "20 morphisms: left legs injective " << left << ", right corners split epi " << right
    << ", certificates re-checked " << ok << ", " << since(t) << " s";
  return {"C7", ok == 20, "Reedy factorization contract", o.str()};
}

std::vector<Family> projectives(const std::vector<SimpObject>& xs) { return default_projectives(xs); }

// Seeded fibrations: Reedy right legs, maps between constant objects, and
// random morphisms that pass the fibration check.
// Reedy right legs are kept small so that checking them stays cheap.
SimpMorphism small_right_leg(std::mt19937_64& rng) {
  for (;;) {
    ReedyResult r = reedy_factorize(random_simp_morphism(rng), 3);
    if (r.middle.total().size() <= 150) return r.right;
  }
}

SimpMorphism seeded_fibration(std::mt19937_64& rng, int i, int& tries) {
  if (i % 3 == 0) return small_right_leg(rng);
  if (i % 3 == 1) {
    for (;;) {
      auto fam = [&] {
        std::vector<int> s;
        for (std::size_t k = 0, n = 1 + rng() % 2; k < n; ++k) s.push_back(static_cast<int>(rng() % 3));
        return make_family<int>(s);
      };
      if (auto m = random_morphism(constant(fam()), constant(fam()), rng)) return *m;
    }
  }
  for (int k = 0; k < 40; ++k) {
    ++tries;
    SimpMorphism g = random_simp_morphism(rng);
    if (is_fibration(g, projectives({g.source, g.target}), 3).verdict == Verdict::pass) return g;
  }
  return small_right_leg(rng);
}

// Seeded weak equivalence into y: a random morphism passing the check, else a
// Reedy right leg (a trivial fibration).
SimpMorphism seeded_weq(std::mt19937_64& rng, const SimpObject& y) {
  for (int k = 0; k < 8; ++k) {
    SimpObject x = random_simp_object(rng);
    auto m = random_morphism(x, y, rng);
    if (m && is_weq(*m, projectives({x, y}), 3).verdict == Verdict::pass) return *m;
  }
  return reedy_factorize(initial_map(y), 3).right;
}

Line c8_right_proper() {
  auto t = Clock::now();
  std::mt19937_64 rng(808);
  int failures = 0, inconclusive = 0, tries = 0, bad_inputs = 0;
  for (int i = 0; i < 20; ++i) {
    SimpMorphism p = seeded_fibration(rng, i, tries);
    SimpMorphism w = seeded_weq(rng, p.target);
    bad_inputs += is_fibration(p, projectives({p.source, p.target}), 3).verdict != Verdict::pass;
    bad_inputs += is_weq(w, projectives({w.source, w.target}), 3).verdict != Verdict::pass;
    SimpPullback pb = pullback(w, p);
    ClassVerdict v = is_weq(pb.second, projectives({pb.object, p.source}), 3);
    failures += v.verdict == Verdict::fail;
    inconclusive += v.verdict == Verdict::inconclusive;
  }
  std::ostringstream o;
  o << "20 cospans: " << failures << " failures, " << inconclusive << " inconclusive, " << bad_inputs
    << " inputs not certified, " << since(t) << " s";
  return {"C8", failures == 0 && inconclusive == 0 && bad_inputs == 0, "right properness instance", o.str()};
}

Line c9_collapse() {
  auto t = Clock::now();
  std::mt19937_64 rng(909);
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    SimpObject y = random_simp_object(rng);
    SimpMorphism w = seeded_weq(rng, y);
    ClassVerdict v = is_weq(w, projectives({w.source, w.target}), 3);
    failures += v.verdict != Verdict::pass || weq_oracle(collapse_levelwise(w), v.trunc).verdict != Verdict::pass;
  }
  std::ostringstream o;
  o << "20 weak equivalences: " << failures << " failures, " << since(t) << " s";
  return {"C9", failures == 0, "levelwise collapse preserves weak equivalences", o.str()};
}

Line c10_extensive() {
  ExtensivityReport s = verify_extensive(FinSetCategory(3), true);
  ExtensivityReport p = verify_extensive(FinCategoryBase(pointed_sets_category()), true);
  const AxiomVerdict* dis = p.find("disjointness");
  const bool ok = s.passes() && dis && !dis->pass && !dis->witness.empty();
  std::ostringstream o;
  o << "FinSet " << (s.passes() ? "passes" : "FAILS") << "; pointed sets disjointness "
    << (dis && !dis->pass ? "fails: " + dis->witness : std::string("passes"));
  return {"C10", ok, "extensivity verifier", o.str()};
}

Diagram loop_fixture() {
  FinCategory c = cospan_category();
  SSet kg = nerve(cyclic_group_category(2), 3).set, pt = point();
  SSetMap v{pt, kg, {Simplex::generator(kg.nd_of_dim(0)[0], 0)}};
  return make_diagram(c, {pt, pt, kg}, {{"l", v}, {"r", v}});
}

Diagram discrete_fixture() {
  return make_diagram(discrete_category({"x", "y"}), {circle(), delta(1)}, {});
}

Line c11_kan() {
  auto t = Clock::now();
  int ok = 0, total = 0;
  for (const Diagram& d : {span_fixture(), loop_fixture(), discrete_fixture()}) {
    FinFunctor to_pt = to_terminal(d.shape);
    total += 2;
    Diagram l = hokan_left(to_pt, d, 3);
    ok += find_isomorphism(l.values[0], hocolim(d, 3).set).has_value();
    Diagram r = hokan_right(to_pt, d, 3);
    ok += find_isomorphism(r.values[0], holim(d, 3).set).has_value();
  }
  std::ostringstream o;
  o << ok << "/" << total << " isomorphisms (span, loop cospan, discrete), " << since(t) << " s";
  return {"C11", ok == total, "Kan extension to a point", o.str()};
}

// Each job: arguments after the binary, relative to the fixture directory.
const std::vector<std::vector<std::string>> kJobs = {
    {"nerve", "cyclic2.json"},
    {"lift", "trivial_square.json"},
    {"lift", "swap_square.json"},
    {"classify", "fold.json", "--class", "split_epi"},
    {"classify", "set_inclusion.json", "--class", "mono"},
    {"factor", "circle_to_point.json"},
    {"factor", "delta2_from_empty.json", "--mode", "soa", "--stages", "1"},
    {"factor", "delta2_from_empty.json", "--mode", "soa", "--stages", "3"},
    {"boxcheck", "boundary1_inclusion.json", "horn21_inclusion.json", "boundary1_to_point.json"},
    {"boxcheck", "set_inclusion.json", "horn21_inclusion.json", "boundary1_to_point.json", "--bifunctor", "tensor"},
    {"extensive", "finset3.json"},
    {"extensive", "pointed_sets.json"},
    {"cofibrant", "constant2.json"},
    {"cofibrant", "collapsed_edge.json"},
    {"cofibrant", "tensor12_delta1.json"},
    {"reedy", "squash.json"},
    {"reedy", "initial_to_constant2.json"},
    {"fib", "squash.json"},
    {"weq", "squash.json"},
    {"weq", "circle_to_point.json"},
    {"hocolim", "span.json"},
    {"hocolim", "discrete.json"},
    {"holim", "loop_cospan.json"},
    {"kan", "span.json", "--functor", "span_to_point.json"},
    {"kan", "loop_cospan.json", "--functor", "cospan_to_point.json", "--side", "right"},
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Line c12_determinism(const std::string& cli, const fs::path& fixtures, const fs::path& work) {
  auto t = Clock::now();
  int same = 0, verified = 0;
  for (std::size_t j = 0; j < kJobs.size(); ++j) {
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
      fs::path out = work / ("job" + std::to_string(j) + "_" + std::to_string(run) + ".json");
      std::string cmd = "'" + cli + "'";
      for (const std::string& a : kJobs[j])
        cmd += " '" + (a.size() > 5 && a.substr(a.size() - 5) == ".json" ? (fixtures / a).string() : a) + "'";
      cmd += " --out '" + out.string() + "' 2>/dev/null";
      if (std::system(cmd.c_str()) == -1) break;
      reports[run] = slurp(out);
      if (run == 0) {
        const int rc = std::system(("'" + cli + "' verify '" + out.string() + "' 2>/dev/null").c_str());
        const json r = json::parse(reports[0]);
        const int expect = r.at("exit").get<int>() == 2 ? 2 : 0;
        verified += WIFEXITED(rc) && WEXITSTATUS(rc) == expect;
      }
    }
    same += !reports[0].empty() && reports[0] == reports[1];
  }
  std::ostringstream o;
  o << same << "/" << kJobs.size() << " reports byte-identical across two runs, " << verified << " verified, " << since(t)
    << " s";
  const int n = static_cast<int>(kJobs.size());
  return {"C12", same == n && verified == n, "deterministic reports", o.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <wfskit> <fixtures> <workdir>\n";
    return 2;
  }
  const fs::path work = argv[3];
  fs::create_directories(work);
  // C3 clause (a) claims delta(n) -> delta(0) is a trivial fibration; that is
  // false for n >= 1, so it is expected to stay red.
  const std::set<std::string> known_red{"C3"};

  std::vector<std::function<Line()>> criteria{
      c1_lifting, c2_adjunction, c3_fibrations, c4_circle, c5_coend, c6_cofibrancy, c7_reedy,
      c8_right_proper, c9_collapse, c10_extensive, c11_kan,
      [&] { return c12_determinism(argv[1], argv[2], work); }};
  // WFSKIT_ONLY=C5 runs a single criterion while iterating.
  const char* only = std::getenv("WFSKIT_ONLY");
  int passed = 0, unexpected = 0, index = 0;
  for (const auto& c : criteria) {
    const std::string id = "C" + std::to_string(++index);
    if (only && id != only) continue;
    Line l;
    try {
      l = c();
    } catch (const std::exception& e) {
      l = {id, false, "error", e.what()};
    }
    std::cout << (l.pass ? "PASS " : "FAIL ") << l.id << " " << l.what << ": " << l.detail << std::endl;
    passed += l.pass;
    if (!l.pass && !known_red.count(l.id)) ++unexpected;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  if (passed + static_cast<int>(known_red.size()) == static_cast<int>(criteria.size()) && unexpected == 0)
    std::cout << " (C3 red as expected: its clause (a) is false)";
  std::cout << "\n";
  return unexpected == 0 ? 0 : 1;
}
