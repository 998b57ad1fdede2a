// wfskit: batch front-end. One job per invocation, JSON report on stdout or --out.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wfskit/coprod.hpp"
#include "wfskit/fincat.hpp"
#include "wfskit/holim.hpp"
#include "wfskit/homology.hpp"
#include "wfskit/io.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/search.hpp"
#include "wfskit/sobj.hpp"
#include "wfskit/wfs.hpp"

using namespace wfskit;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

struct Input {
  std::string path;
  std::string role;
  json content;
};

struct Params {
  int trunc = 3;
  int stages = 5;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 20240917;
  int gen_dim = 2;
  std::string cls = "mono";
  std::string mode = "projective";
  std::string generators = "boundaries";
  std::string bifunctor = "product";
  std::string side = "left";
};

struct Job {
  std::string command;
  std::vector<Input> inputs;
  Params params;

  const json& input(const std::string& role) const {
    for (const Input& i : inputs)
      if (i.role == role) return i.content;
    throw InputError("missing input '" + role + "'");
  }
  bool has(const std::string& role) const {
    return std::any_of(inputs.begin(), inputs.end(), [&](const Input& i) { return i.role == role; });
  }
};

struct Outcome {
  std::string verdict;
  int exit = kPositive;
  json result = json::object();
  json certificate = json::object();
};

json params_json(const Params& p) {
  return json{{"trunc", p.trunc},         {"stages", p.stages},     {"budget", p.budget},
              {"seed", p.seed},           {"gen_dim", p.gen_dim},   {"class", p.cls},
              {"mode", p.mode},           {"generators", p.generators}, {"bifunctor", p.bifunctor},
              {"side", p.side}};
}

Params params_from_json(const json& j) {
  Params p;
  p.trunc = j.at("trunc").get<int>();
  p.stages = j.at("stages").get<int>();
  p.budget = j.at("budget").get<std::uint64_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.gen_dim = j.at("gen_dim").get<int>();
  p.cls = j.at("class").get<std::string>();
  p.mode = j.at("mode").get<std::string>();
  p.generators = j.at("generators").get<std::string>();
  p.bifunctor = j.at("bifunctor").get<std::string>();
  p.side = j.at("side").get<std::string>();
  return p;
}

// Homology in the degrees the presentation determines.
int homology_degree(const SSet& x, int trunc) {
  if (auto t = x.truncated_at()) return std::min(trunc, *t - 1);
  return trunc;
}

json homology_json(const SSet& x, int trunc) {
  const int d = homology_degree(x, trunc);
  if (d < 0) return json{{"truncation", d}, {"groups", json::array()}};
  HomologyProfile p = homology(x, d);
  return json{{"truncation", d}, {"groups", to_json(p)}, {"text", p.to_string()}};
}

std::string kind_of(const json& j) {
  if (j.is_array()) return "list";
  if (!j.is_object()) return "unknown";
  if (j.contains("finset")) return "finset";
  if (j.contains("lambda")) return "square";
  if (j.contains("shape")) return "diagram";
  if (j.contains("p") && j.contains("total")) return "sobj";
  if (j.contains("total") && j.contains("source")) return "smorphism";
  if (j.contains("values") && j.contains("source")) return "setmap";
  if (j.contains("assign")) return "map";
  if (j.contains("objects") && j.contains("source")) return "functor";
  if (j.contains("objects")) return "category";
  if (j.contains("nd")) return "sset";
  if (j.contains("family")) return "family";
  return "unknown";
}

std::vector<SSetMap> generators_for(const Params& p) {
  if (p.generators == "horns") return horn_generators(p.gen_dim);
  if (p.generators == "boundaries") return boundary_generators(p.gen_dim);
  throw InputError("--generators is horns or boundaries");
}

std::vector<Family> sobj_projectives(const Job& job, const std::vector<SimpObject>& inputs) {
  if (!job.has("projectives")) return default_projectives(inputs);
  std::vector<Family> out;
  for (const json& f : job.input("projectives")) out.push_back(family_from_json(f));
  return out;
}


int exit_of(Verdict v) { return v == Verdict::pass ? kPositive : v == Verdict::fail ? kNegative : kInconclusive; }

// Commands ---------------------------------------------------------------------------

Outcome cmd_validate(const Job& job) {
  const json& j = job.input("input");
  const std::string kind = kind_of(j);
  Outcome o{"valid", kPositive, {{"kind", kind}}, {}};
  if (kind == "category") {
    FinCategory c = category_from_json(j);
    o.result["objects"] = c.object_count();
    o.result["morphisms"] = c.morphism_count();
  } else if (kind == "functor") {
    functor_from_json(j);
  } else if (kind == "sset") {
    SSet x = sset_from_json(j);
    o.result["generators"] = x.size();
    o.result["dim"] = x.top_dim();
  } else if (kind == "map") {
    map_from_json(j);
  } else if (kind == "setmap") {
    setmap_from_json(j);
  } else if (kind == "square") {
    square_from_json(j);
  } else if (kind == "sobj") {
    sobj_from_json(j);
  } else if (kind == "smorphism") {
    smorphism_from_json(j);
  } else if (kind == "diagram") {
    if (is_sobj_diagram(j))
      sobj_diagram_from_json(j);
    else
      diagram_from_json(j);
  } else if (kind == "family") {
    family_from_json(j);
  } else if (kind == "list") {
    json kinds = json::array();
    for (const json& e : j) {
      Job one{job.command, {{"", "input", e}}, job.params};
      kinds.push_back(cmd_validate(one).result.at("kind"));
    }
    o.result["elements"] = kinds;
  } else if (kind == "finset") {
    if (j.at("finset").get<int>() < 0) throw InputError("finset size is nonnegative");
  } else {
    throw InputError("unrecognized document");
  }
  return o;
}

Outcome cmd_nerve(const Job& job) {
  FinCategory c = category_from_json(job.input("input"));
  Nerve n = nerve(c, job.params.trunc + 1);
  FinitenessReport f = is_homotopically_finite(c);
  Outcome o{"computed", kPositive, {}, {}};
  o.result["homotopically_finite"] = f.finite;
  if (f.finite) o.result["max_chain"] = f.max_chain;
  o.result["homology"] = homology_json(n.set, job.params.trunc);
  o.certificate["nerve"] = to_json(n.set);
  return o;
}

Outcome cmd_lift(const Job& job) {
  LiftingSquare sq = square_from_json(job.input("input"));
  LiftResult r = solve_lifting(sq, job.params.budget);
  Outcome o{to_string(r.status), kPositive, {{"nodes", r.nodes}}, {}};
  if (r.status == LiftStatus::lifted) {
    o.certificate["lift"] = assign_to_json(*r.lift);
  } else if (r.status == LiftStatus::no_lift) {
    o.exit = kNegative;
    o.certificate["exhausted"] = true;
  } else {
    o.exit = kInconclusive;
  }
  return o;
}

Outcome cmd_classify(const Job& job) {
  const json& j = job.input("input");
  MorphismClass c;
  try {
    c = parse_class(job.params.cls);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Outcome o{"member", kPositive, {{"class", job.params.cls}}, {}};
  if (kind_of(j) == "setmap") {
    if (!classify(setmap_from_json(j), c)) o = Outcome{"not_member", kNegative, o.result, {}};
    return o;
  }
  SSetMap m = map_from_json(j);
  Classification r;
  try {
    r = classify(m, c, job.params.budget);
  } catch (const UnsupportedError& e) {
    throw InputError(e.what());
  }
  if (!r.detail.empty()) o.result["detail"] = r.detail;
  if (r.witness) o.certificate["witness"] = assign_to_json(*r.witness);
  if (!r.member) {
    o.verdict = r.detail == "budget exhausted" ? "budget" : "not_member";
    o.exit = r.detail == "budget exhausted" ? kInconclusive : kNegative;
  }
  return o;
}

json factorization_json(const Factorization& f) {
  json j{{"middle", to_json(f.left.target)}};
  j["left"] = assign_to_json(f.left);
  j["right"] = assign_to_json(f.right);
  return j;
}

Outcome cmd_factor(const Job& job) {
  SSetMap m = map_from_json(job.input("input"));
  Outcome o{"computed", kPositive, {{"mode", job.params.mode}}, {}};
  if (job.params.mode == "projective") {
    std::vector<SSet> ps;
    if (job.has("projectives"))
      for (const json& p : job.input("projectives")) ps.push_back(sset_from_json(p));
    else
      ps.push_back(point());
    o.certificate = factorization_json(factor_projective_type(m, ps));
    o.result["projectives"] = ps.size();
    return o;
  }
  if (job.params.mode != "soa") throw InputError("--mode is projective or soa");
  SoaResult r = small_object_factorize(m, generators_for(job.params), job.params.stages, job.params.gen_dim,
                                       job.params.budget);
  o.certificate = factorization_json(r.legs);
  json log = json::array();
  for (const StageLog& s : r.log) log.push_back({{"stage", s.stage}, {"cells", s.cells}});
  o.result["log"] = log;
  o.result["stages_used"] = r.log.size();
  o.result["dim"] = r.dim;
  o.result["partial"] = r.partial;
  if (r.partial) {
    o.verdict = "partial";
    o.exit = kInconclusive;
    o.result["residual"] = {{"status", to_string(r.residual.status)}, {"generator", r.residual.generator}};
  }
  return o;
}

Outcome cmd_boxcheck(const Job& job) {
  SSetMap g = map_from_json(job.input("g")), h = map_from_json(job.input("h"));
  AdjunctionCheck r;
  if (job.params.bifunctor == "product")
    r = check_adjunction_product(map_from_json(job.input("f")), g, h, job.params.budget);
  else if (job.params.bifunctor == "tensor")
    r = check_adjunction_tensor(setmap_from_json(job.input("f")), g, h, job.params.budget);
  else
    throw InputError("--bifunctor is product or tensor");
  Outcome o{"agree", kPositive, {{"bifunctor", job.params.bifunctor}}, {}};
  o.result["verdicts"] = r.verdicts;
  if (!r.conclusive) {
    o.verdict = "inconclusive";
    o.exit = kInconclusive;
  } else if (!r.agree) {
    o.verdict = "disagree";
    o.exit = kNegative;
  }
  return o;
}

Outcome cmd_extensive(const Job& job) {
  const json& j = job.input("input");
  ExtensivityReport r = kind_of(j) == "finset"
                            ? verify_extensive(FinSetCategory(j.at("finset").get<int>()), true, job.params.budget)
                            : verify_extensive(FinCategoryBase(category_from_json(j)), true, job.params.budget);
  Outcome o{"extensive", kPositive, {}, {}};
  json axioms = json::array();
  for (const AxiomVerdict& a : r.axioms) {
    json v{{"axiom", a.axiom}, {"pass", a.pass}, {"instances", a.instances}};
    if (!a.pass) v["witness"] = a.witness;
    axioms.push_back(v);
  }
  o.result["axioms"] = axioms;
  o.result["complete"] = r.complete;
  o.result["skipped"] = r.skipped;
  if (!r.complete) {
    o.verdict = "budget";
    o.exit = kInconclusive;
  } else if (!r.passes()) {
    o.verdict = "not_extensive";
    o.exit = kNegative;
  }
  return o;
}

json cofibrancy_certificate(const CofibrancyResult& r) {
  json levels = json::array();
  for (const LevelCertificate& l : r.certificate) {
    json deg = json::array();
    for (const DegenerateSummand& d : l.degenerate) deg.push_back({{"element", d.element}, {"word", d.word}, {"base", d.base}});
    levels.push_back({{"level", l.level}, {"nondegenerate", l.nondegenerate}, {"degenerate", deg}});
  }
  return levels;
}

CofibrancyResult cofibrancy_from_json(const json& j, int trunc) {
  CofibrancyResult r;
  r.cofibrant = true;
  r.trunc = trunc;
  for (const json& l : j) {
    LevelCertificate c;
    c.level = l.at("level").get<int>();
    c.nondegenerate = l.at("nondegenerate").get<std::vector<int>>();
    for (const json& d : l.at("degenerate"))
      c.degenerate.push_back({d.at("element").get<int>(), d.at("word").get<std::string>(), d.at("base").get<int>()});
    r.certificate.push_back(std::move(c));
  }
  return r;
}

Outcome cmd_cofibrant(const Job& job) {
  SimpObject x = sobj_from_json(job.input("input"));
  x.trunc = job.params.trunc;
  CofibrancyResult d = is_cofibrant(x);
  RlpCofibrancy r = is_cofibrant_rlp(x, job.params.budget);
  Outcome o{d.cofibrant ? "cofibrant" : "not_cofibrant", d.cofibrant ? kPositive : kNegative, {}, {}};
  o.result["trunc"] = d.trunc;
  o.result["rlp"] = r.conclusive ? json(r.cofibrant) : json("inconclusive");
  if (d.cofibrant) {
    o.certificate["levels"] = cofibrancy_certificate(d);
  } else {
    o.result["failed_level"] = d.failed_level;
    o.result["detail"] = d.detail;
  }
  if (r.conclusive && r.cofibrant != d.cofibrant) {
    o.verdict = "deciders_disagree";
    o.exit = kInconclusive;
  }
  return o;
}

Outcome cmd_reedy(const Job& job) {
  SimpMorphism f = smorphism_from_json(job.input("input"));
  ReedyResult r = reedy_factorize(f, job.params.trunc);
  ReedyCheck c = verify_reedy(r);
  Outcome o{c.ok() ? "factored" : "check_failed", c.ok() ? kPositive : kNegative, {}, {}};
  o.result["cells"] = r.cells;
  o.result["trunc"] = r.trunc;
  if (!c.ok()) o.result["detail"] = c.detail;
  o.certificate["middle"] = to_json(r.middle);
  o.certificate["left"] = {{"total", assign_to_json(r.left.total)["assign"]}, {"index", assign_to_json(r.left.index)["assign"]}};
  o.certificate["right"] = {{"total", assign_to_json(r.right.total)["assign"]}, {"index", assign_to_json(r.right.index)["assign"]}};
  return o;
}

json class_verdict_json(const ClassVerdict& v) {
  json per = json::array();
  for (const ProjectiveVerdict& p : v.per_projective)
    per.push_back({{"projective", p.projective.family}, {"verdict", to_string(p.verdict)}, {"reason", p.reason}});
  return json{{"trunc", v.trunc}, {"per_projective", per}};
}

Outcome cmd_fib(const Job& job) {
  SimpMorphism f = smorphism_from_json(job.input("input"));
  ClassVerdict v = is_fibration(f, sobj_projectives(job, {f.source, f.target}), job.params.trunc, job.params.budget);
  return Outcome{to_string(v.verdict), exit_of(v.verdict), class_verdict_json(v), {}};
}

Outcome cmd_weq(const Job& job) {
  const json& j = job.input("input");
  if (kind_of(j) == "smorphism") {
    SimpMorphism f = smorphism_from_json(j);
    ClassVerdict v = is_weq(f, sobj_projectives(job, {f.source, f.target}), job.params.trunc);
    return Outcome{to_string(v.verdict), exit_of(v.verdict), class_verdict_json(v), {}};
  }
  SSetMap f = map_from_json(j);
  WeqReport r = weq_oracle(f, job.params.trunc);
  Outcome o{to_string(r.verdict), exit_of(r.verdict), {{"truncation", r.truncation}}, {}};
  if (!r.reason.empty()) o.result["reason"] = r.reason;
  o.certificate["source"] = homology_json(f.source, r.truncation);
  o.certificate["target"] = homology_json(f.target, r.truncation);
  return o;
}

Outcome sobj_colimit_outcome(const SobjColimit& c, int trunc) {
  Outcome o{"computed", kPositive, {}, {}};
  o.result["warnings"] = c.warnings;
  o.result["total_homology"] = homology_json(c.object.total(), trunc);
  o.certificate["object"] = to_json(c.object);
  return o;
}

Outcome cmd_hocolim(const Job& job) {
  const json& j = job.input("input");
  const int t = job.params.trunc;
  if (is_sobj_diagram(j)) return sobj_colimit_outcome(hocolim(sobj_diagram_from_json(j), t), t);
  Diagram d = diagram_from_json(j);
  Hocolim h = hocolim(d, t);
  Coend c = coend_oracle(d, t);
  SSetMap cmp = coend_comparison(h, c);
  Outcome o{"computed", kPositive, {}, {}};
  o.result["exact"] = h.exact;
  o.result["homology"] = homology_json(h.set, t);
  o.result["coend_agrees"] = coend_agrees(h, cmp);
  o.certificate["set"] = to_json(h.set);
  o.certificate["coend"] = to_json(c.set);
  o.certificate["comparison"] = assign_to_json(cmp);
  return o;
}

Outcome cmd_holim(const Job& job) {
  const json& j = job.input("input");
  const int t = job.params.trunc;
  try {
    if (is_sobj_diagram(j)) return sobj_colimit_outcome(holim(sobj_diagram_from_json(j), t), t);
    Diagram d = diagram_from_json(j);
    Holim h = holim(d, t);
    Outcome o{"computed", kPositive, {}, {}};
    o.result["dimension"] = h.trunc;
    o.result["warnings"] = h.warnings;
    o.result["pi0"] = pi0(h.set).count;
    o.result["homology"] = homology_json(h.set, t);
    o.certificate["set"] = to_json(h.set);
    return o;
  } catch (const CategoryError& e) {
    return Outcome{"not_homotopically_finite", kNegative, {{"detail", e.what()}}, {}};
  }
}

Outcome cmd_kan(const Job& job) {
  FinFunctor alpha = functor_from_json(job.input("functor"));
  Diagram d = diagram_from_json(job.input("input"));
  if (d.shape.objects != alpha.source.objects) throw InputError("diagram shape is not the source of the functor");
  d.shape = alpha.source;  // same objects and ids; share one instance
  Diagram k;
  try {
    if (job.params.side == "left")
      k = hokan_left(alpha, d, job.params.trunc);
    else if (job.params.side == "right")
      k = hokan_right(alpha, d, job.params.trunc);
    else
      throw InputError("--side is left or right");
  } catch (const CategoryError& e) {
    return Outcome{"not_homotopically_finite", kNegative, {{"detail", e.what()}}, {}};
  }
  Outcome o{"computed", kPositive, {{"side", job.params.side}}, {}};
  json homs = json::object();
  for (int i = 0; i < k.shape.object_count(); ++i)
    homs[k.shape.objects[static_cast<std::size_t>(i)]] = homology_json(k.values[static_cast<std::size_t>(i)], job.params.trunc);
  o.result["homology"] = homs;
  o.certificate["diagram"] = to_json(k);
  return o;
}

Outcome dispatch(const Job& job) {
  const std::string& c = job.command;
  if (c == "validate") return cmd_validate(job);
  if (c == "nerve") return cmd_nerve(job);
  if (c == "lift") return cmd_lift(job);
  if (c == "classify") return cmd_classify(job);
  if (c == "factor") return cmd_factor(job);
  if (c == "boxcheck") return cmd_boxcheck(job);
  if (c == "extensive") return cmd_extensive(job);
  if (c == "cofibrant") return cmd_cofibrant(job);
  if (c == "reedy") return cmd_reedy(job);
  if (c == "fib") return cmd_fib(job);
  if (c == "weq") return cmd_weq(job);
  if (c == "hocolim") return cmd_hocolim(job);
  if (c == "holim") return cmd_holim(job);
  if (c == "kan") return cmd_kan(job);
  throw InputError("unknown command '" + c + "'");
}

// Runs a job, mapping every input problem to exit 3.
Outcome run_guarded(const Job& job) {
  try {
    return dispatch(job);
  } catch (const InputError& e) {
    return Outcome{"input_error", kInputError, {{"error", e.what()}}, {}};
  } catch (const SSetError& e) {
    return Outcome{"input_error", kInputError, {{"error", e.what()}}, {}};
  } catch (const CategoryError& e) {
    return Outcome{"input_error", kInputError, {{"error", e.what()}}, {}};
  } catch (const json::exception& e) {
    return Outcome{"input_error", kInputError, {{"error", e.what()}}, {}};
  }
}

// Key order does not matter to the readers, so hash the sorted form.
std::string content_hash(const json& content) { return hex64(fnv1a(nlohmann::json::parse(content.dump()).dump())); }

json make_report(const Job& job, const Outcome& o) {
  json inputs = json::array();
  for (const Input& i : job.inputs)
    inputs.push_back({{"path", i.path}, {"role", i.role}, {"fnv1a", content_hash(i.content)}, {"content", i.content}});
  return json{{"schema", kSchema}, {"command", job.command}, {"inputs", inputs},  {"params", params_json(job.params)},
              {"verdict", o.verdict},  {"exit", o.exit},        {"result", o.result}, {"certificate", o.certificate}};
}

// Certificate checks -------------------------------------------------------------------
// These use only map validation, composition and homology, never the searches.

bool same(const json& a, const json& b) { return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump()); }

struct Failure {
  std::string location;
};

std::optional<Failure> check_homology(const json& cert_set, const json& claimed, int trunc, const std::string& where) {
  SSet x = sset_from_json(cert_set);
  if (!same(homology_json(x, trunc), claimed)) return Failure{where};
  return std::nullopt;
}

SSetMap assign_map(const SSet& s, const SSet& t, const json& assign) { return map_from_json(s, t, json{{"assign", assign}}); }

std::optional<Failure> check_certificate(const Job& job, const json& report) {
  const json& cert = report.at("certificate");
  const json& res = report.at("result");
  const std::string& c = job.command;
  const int t = job.params.trunc;
  if (c == "lift" && cert.contains("lift")) {
    LiftingSquare sq = square_from_json(job.input("input"));
    SSetMap l = map_from_json(sq.lambda.target, sq.rho.source, cert.at("lift"));
    if (!verify_lift(sq, l)) return Failure{"certificate.lift"};
  } else if (c == "classify" && cert.contains("witness")) {
    SSetMap m = map_from_json(job.input("input"));
    SSetMap w = map_from_json(m.target, m.source, cert.at("witness"));
    const bool ok = job.params.cls == "split_mono" ? compose(w, m) == SSetMap::identity(m.source)
                                                    : compose(m, w) == SSetMap::identity(m.target);
    if (!ok) return Failure{"certificate.witness"};
  } else if (c == "factor") {
    SSetMap m = map_from_json(job.input("input"));
    SSet z = sset_from_json(cert.at("middle"));
    SSetMap l = map_from_json(m.source, z, cert.at("left")), r = map_from_json(z, m.target, cert.at("right"));
    if (!(compose(r, l) == m)) return Failure{"certificate.left/right"};
  } else if (c == "cofibrant" && cert.contains("levels")) {
    SimpObject x = sobj_from_json(job.input("input"));
    x.trunc = t;
    if (!verify_cofibrancy(x, cofibrancy_from_json(cert.at("levels"), t))) return Failure{"certificate.levels"};
  } else if (c == "reedy") {
    SimpMorphism f = smorphism_from_json(job.input("input"));
    SimpObject z = sobj_from_json(cert.at("middle"));
    SimpMorphism l{f.source, z, assign_map(f.source.total(), z.total(), cert.at("left").at("total")),
                   assign_map(f.source.index(), z.index(), cert.at("left").at("index"))};
    SimpMorphism r{z, f.target, assign_map(z.total(), f.target.total(), cert.at("right").at("total")),
                   assign_map(z.index(), f.target.index(), cert.at("right").at("index"))};
    l.validate();
    r.validate();
    SimpMorphism rl = compose(r, l);
    if (!(rl.total == f.total) || !(rl.index == f.index)) return Failure{"certificate.left/right"};
    ReedyResult rr{z, l, r, res.at("cells").get<std::vector<int>>(), res.at("trunc").get<int>()};
    if (!verify_reedy(rr).ok()) return Failure{"certificate.middle"};
  } else if (c == "weq" && cert.contains("source")) {
    SSetMap f = map_from_json(job.input("input"));
    const int d = res.at("truncation").get<int>();
    if (!same(homology_json(f.source, d), cert.at("source"))) return Failure{"certificate.source"};
    if (!same(homology_json(f.target, d), cert.at("target"))) return Failure{"certificate.target"};
  } else if (c == "nerve") {
    return check_homology(cert.at("nerve"), res.at("homology"), t, "result.homology");
  } else if ((c == "hocolim" || c == "holim") && cert.contains("set")) {
    if (auto f = check_homology(cert.at("set"), res.at("homology"), t, "result.homology")) return f;
    if (cert.contains("comparison")) {
      SSet h = sset_from_json(cert.at("set")), q = sset_from_json(cert.at("coend"));
      SSetMap cmp = map_from_json(h, q, cert.at("comparison"));
      Hocolim stamp;
      stamp.exact = res.at("exact").get<bool>();
      stamp.trunc = t;
      if (coend_agrees(stamp, cmp) != res.at("coend_agrees").get<bool>()) return Failure{"certificate.comparison"};
    }
  }
  return std::nullopt;
}

// Returns the verify exit code; diagnostics go to stderr.
int verify_report(const std::string& path) {
  json report;
  Job job;
  try {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    report = json::parse(in);
    if (report.at("schema") != kSchema) throw InputError("unknown schema");
    job.command = report.at("command").get<std::string>();
    job.params = params_from_json(report.at("params"));
    for (const json& i : report.at("inputs")) job.inputs.push_back({i.at("path"), i.at("role"), i.at("content")});
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kInputError;
  }
  for (std::size_t k = 0; k < job.inputs.size(); ++k)
    if (content_hash(job.inputs[k].content) != report["inputs"][k]["fnv1a"]) {
      std::cerr << "verify: input hash mismatch at inputs[" << k << "]\n";
      return kNegative;
    }
  const int claimed = report.at("exit").get<int>();
  if (claimed != kInputError) {
    try {
      if (auto f = check_certificate(job, report)) {
        std::cerr << "verify: certificate rejected at " << f->location << "\n";
        return kNegative;
      }
    } catch (const std::exception& e) {
      std::cerr << "verify: certificate rejected: " << e.what() << "\n";
      return kNegative;
    }
  }
  // Everything not covered by a certificate is re-derived.
  const json again = make_report(job, run_guarded(job));
  for (const char* key : {"verdict", "exit", "result", "certificate"})
    if (!same(again.at(key), report.at(key))) {
      std::cerr << "verify: " << key << " does not match a rerun\n";
      return kNegative;
    }
  std::cerr << "verify: ok (" << job.command << ", " << report.at("verdict").get<std::string>() << ")\n";
  return claimed == kInconclusive ? kInconclusive : kPositive;
}

void write_atomically(const std::string& out, const std::string& text) {
  const std::string tmp = out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, out);
}

Input read_input(const std::string& path, const std::string& role) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Input{path, role, json::parse(in)};
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wfskit: weak factorization systems and homotopy limits on finite simplicial data"};
  app.require_subcommand(1);
  Params p;
  std::string out, projectives;
  app.add_option("--trunc", p.trunc, "truncation dimension")->capture_default_str();
  app.add_option("--stages", p.stages, "small object argument stages")->capture_default_str();
  app.add_option("--budget", p.budget, "search node budget")->capture_default_str();
  app.add_option("--seed", p.seed, "seed recorded in the report")->capture_default_str();
  app.add_option("--projectives", projectives, "JSON array of projectives");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.fallthrough();

  std::vector<std::string> files;
  std::string functor_file, report_file;
  auto one = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("input", files, "input JSON")->required()->expected(1);
    return s;
  };
  one("validate", "parse and check any input document");
  one("nerve", "nerve of a finite category with homology");
  one("lift", "solve a lifting square");
  one("classify", "decide a morphism class")->add_option("--class", p.cls)->capture_default_str();
  CLI::App* factor = one("factor", "projective-type or small object factorization");
  factor->add_option("--mode", p.mode)->check(CLI::IsMember({"projective", "soa"}))->capture_default_str();
  factor->add_option("--generators", p.generators)->check(CLI::IsMember({"horns", "boundaries"}))->capture_default_str();
  factor->add_option("--gen-dim", p.gen_dim, "largest generator codomain dimension")->capture_default_str();
  CLI::App* box = app.add_subcommand("boxcheck", "two-variable adjunction lifting correspondence");
  box->add_option("maps", files, "f, g and h")->required()->expected(3);
  box->add_option("--bifunctor", p.bifunctor)->check(CLI::IsMember({"product", "tensor"}))->capture_default_str();
  one("extensive", "verify extensivity of {\"finset\": N} or a finite category");
  one("cofibrant", "decide cofibrancy of a simplicial object");
  one("reedy", "Reedy factorization of a morphism of simplicial objects");
  one("fib", "fibration check via the projectives");
  one("weq", "weak equivalence check");
  one("hocolim", "homotopy colimit of a diagram");
  one("holim", "homotopy limit of a diagram");
  CLI::App* kan = one("kan", "homotopy Kan extension");
  kan->add_option("--side", p.side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  kan->add_option("--functor", functor_file)->required();
  CLI::App* verify = app.add_subcommand("verify", "re-check a report");
  verify->add_option("report", report_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub == verify) return verify_report(report_file);

  Job job{sub->get_name(), {}, p};
  Outcome o;
  try {
    if (job.command == "boxcheck") {
      job.inputs = {read_input(files[0], "f"), read_input(files[1], "g"), read_input(files[2], "h")};
    } else {
      job.inputs.push_back(read_input(files[0], "input"));
      if (job.command == "kan") job.inputs.push_back(read_input(functor_file, "functor"));
    }
    if (!projectives.empty()) job.inputs.push_back(read_input(projectives, "projectives"));
    o = run_guarded(job);
  } catch (const InputError& e) {
    o = Outcome{"input_error", kInputError, {{"error", e.what()}}, {}};
  }

  const std::string text = make_report(job, o).dump(2) + "\n";
  try {
    if (out.empty())
      std::cout << text;
    else
      write_atomically(out, text);
  } catch (const std::exception& e) {
    std::cerr << "wfskit: " << e.what() << "\n";
    return kInputError;
  }
  std::cerr << job.command << ": " << o.verdict;
  if (o.result.contains("homology") && o.result["homology"].contains("text"))
    std::cerr << "  " << o.result["homology"]["text"].get<std::string>();
  if (o.result.contains("error")) std::cerr << "  " << o.result["error"].get<std::string>();
  std::cerr << "\n";
  return o.exit;
}
