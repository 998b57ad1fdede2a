#include "wfskit/io.hpp"

#include <cstdio>

namespace wfskit {

namespace {

std::size_t u(int x) { return static_cast<std::size_t>(x); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + what + "\" has the wrong type");
  }
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Categories and functors ---------------------------------------------------------

json to_json(const FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  j["morphisms"] = json::array();
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) j["morphisms"].push_back({{"id", c.morphisms[u(m)].id}, {"src", c.objects[u(c.src(m))]}, {"dst", c.objects[u(c.dst(m))]}});
  j["compose"] = json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int gf = c.compose(g, f);
      if (gf >= 0 && !c.is_identity(g) && !c.is_identity(f))
        j["compose"].push_back({c.morphisms[u(g)].id, c.morphisms[u(f)].id, c.morphisms[u(gf)].id});
    }
  j["identities"] = json::object();
  for (int o = 0; o < c.object_count(); ++o) j["identities"][c.objects[u(o)]] = c.morphisms[u(c.identity[u(o)])].id;
  return j;
}

FinCategory category_from_json(const json& j) {
  FinCategory::Builder b;
  for (const json& o : field(j, "objects")) b.object(get<std::string>(o, "objects"));
  if (j.contains("identities"))
    for (const auto& [obj, id] : j.at("identities").items()) b.identity(obj, get<std::string>(id, "identities"));
  if (j.contains("morphisms"))
    for (const json& m : j.at("morphisms"))
      b.morphism(get<std::string>(field(m, "id"), "id"), get<std::string>(field(m, "src"), "src"),
                 get<std::string>(field(m, "dst"), "dst"));
  if (j.contains("compose"))
    for (const json& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3) throw InputError("compose entries are [g, f, gf]");
      b.composite(get<std::string>(t[0], "compose"), get<std::string>(t[1], "compose"), get<std::string>(t[2], "compose"));
    }
  FinCategory c;
  try {
    c = b.build();
  } catch (const CategoryError& e) {
    throw InputError(std::string("category: ") + e.what());
  }
  CategoryReport r = validate_category(c);
  if (!r.ok) throw InputError("category: " + r.violations.front());
  return c;
}

json to_json(const FinFunctor& f) {
  json j{{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"objects", json::object()}, {"morphisms", json::object()}};
  for (int o = 0; o < f.source.object_count(); ++o)
    j["objects"][f.source.objects[u(o)]] = f.target.objects[u(f.obj_map[u(o)])];
  for (int m = 0; m < f.source.morphism_count(); ++m)
    if (!f.source.is_identity(m)) j["morphisms"][f.source.morphisms[u(m)].id] = f.target.morphisms[u(f.mor_map[u(m)])].id;
  return j;
}

FinFunctor functor_from_json(const json& j) {
  FinCategory s = category_from_json(field(j, "source")), t = category_from_json(field(j, "target"));
  std::vector<std::pair<std::string, std::string>> objs, mors;
  for (const auto& [k, v] : field(j, "objects").items()) objs.emplace_back(k, get<std::string>(v, "objects"));
  if (j.contains("morphisms"))
    for (const auto& [k, v] : j.at("morphisms").items()) mors.emplace_back(k, get<std::string>(v, "morphisms"));
  try {
    FinFunctor f = make_functor(s, t, objs, mors);
    CategoryReport r = validate_functor(f);
    if (!r.ok) throw InputError("functor: " + r.violations.front());
    return f;
  } catch (const CategoryError& e) {
    throw InputError(std::string("functor: ") + e.what());
  }
}

// Simplicial sets -------------------------------------------------------------------

json simplex_to_json(const SSet& x, const Simplex& s) { return json::array({degeneracy_word(s.sigma), x.nd(s.nd).name}); }

Simplex simplex_from_json(const SSet& x, const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("simplices are [word, generator]");
  const std::string name = get<std::string>(j[1], "simplex");
  auto id = x.find(name);
  if (!id) throw InputError("unknown generator '" + name + "'");
  try {
    return Simplex{*id, parse_degeneracy_word(get<std::string>(j[0], "simplex"), x.nd(*id).dim)};
  } catch (const std::exception& e) {
    throw InputError("bad degeneracy word for '" + name + "': " + e.what());
  }
}

json to_json(const SSet& x) {
  json j{{"dims", x.top_dim()}, {"nd", json::object()}, {"faces", json::object()}};
  for (int n = 0; n <= x.top_dim(); ++n) {
    json names = json::array();
    for (int id : x.nd_of_dim(n)) names.push_back(x.nd(id).name);
    j["nd"][std::to_string(n)] = names;
  }
  for (int id = 0; id < x.size(); ++id)
    if (x.nd(id).dim > 0) {
      json faces = json::array();
      for (const Simplex& f : x.nd(id).faces) faces.push_back(simplex_to_json(x, f));
      j["faces"][x.nd(id).name] = faces;
    }
  if (auto t = x.truncated_at()) j["truncated"] = *t;
  return j;
}

SSet sset_from_json(const json& j) {
  const json& nd = field(j, "nd");
  const int dims = j.contains("dims") ? get<int>(j.at("dims"), "dims") : -1;
  SSet::Builder b;
  int top = dims;
  for (const auto& [k, v] : nd.items()) {
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || k.size() > 3)
      throw InputError("nd keys are dimensions");
    top = std::max(top, std::stoi(k));
  }
  const json faces = j.contains("faces") ? j.at("faces") : json::object();
  std::vector<std::pair<std::string, int>> order;
  for (int n = 0; n <= top; ++n) {
    const std::string key = std::to_string(n);
    if (!nd.contains(key)) continue;
    for (const json& name : nd.at(key)) order.emplace_back(get<std::string>(name, "nd"), n);
  }
  // Names first, so faces can be parsed against a provisional set with the same ids.
  SSet::Builder names_only;
  SSet provisional;
  try {
    for (const auto& [name, n] : order) names_only.add(name, n);
    provisional = names_only.build_unchecked();
  } catch (const SSetError& e) {
    throw InputError(e.what());
  }
  for (const auto& [name, n] : order) {
    std::vector<Simplex> fs;
    if (n > 0) {
      if (!faces.contains(name)) throw InputError("generator '" + name + "' has no faces");
      for (const json& f : faces.at(name)) fs.push_back(simplex_from_json(provisional, f));
    }
    try {
      b.add(name, n, std::move(fs));
    } catch (const SSetError& e) {
      throw InputError(e.what());
    }
  }
  if (j.contains("truncated")) b.set_truncated_at(get<int>(j.at("truncated"), "truncated"));
  try {
    return b.build();
  } catch (const SSetError& e) {
    throw InputError(std::string("simplicial set: ") + e.what());
  }
}

json assign_to_json(const SSetMap& f) {
  json a = json::object();
  for (int id = 0; id < f.source.size(); ++id) a[f.source.nd(id).name] = simplex_to_json(f.target, f.assign[u(id)]);
  return json{{"assign", a}};
}

SSetMap map_from_json(const SSet& source, const SSet& target, const json& j) {
  const json& a = field(j, "assign");
  SSetMap f{source, target, {}};
  for (int id = 0; id < source.size(); ++id) {
    const std::string& name = source.nd(id).name;
    if (!a.contains(name)) throw InputError("map does not assign '" + name + "'");
    f.assign.push_back(simplex_from_json(target, a.at(name)));
  }
  try {
    f.validate();
  } catch (const SSetError& e) {
    throw InputError(std::string("map: ") + e.what());
  }
  return f;
}

json to_json(const SSetMap& f) {
  json j{{"source", to_json(f.source)}, {"target", to_json(f.target)}};
  j["assign"] = assign_to_json(f)["assign"];
  return j;
}

SSetMap map_from_json(const json& j) {
  return map_from_json(sset_from_json(field(j, "source")), sset_from_json(field(j, "target")), j);
}

json to_json(const SetMap& f) { return json{{"source", f.source}, {"target", f.target}, {"values", f.values}}; }

SetMap setmap_from_json(const json& j) {
  SetMap f{get<int>(field(j, "source"), "source"), get<int>(field(j, "target"), "target"),
           get<std::vector<int>>(field(j, "values"), "values")};
  if (static_cast<int>(f.values.size()) != f.source) throw InputError("set map needs one value per element");
  for (int v : f.values)
    if (v < 0 || v >= f.target) throw InputError("set map value out of range");
  return f;
}

json to_json(const LiftingSquare& sq) {
  json j{{"lambda", to_json(sq.lambda)}, {"rho", to_json(sq.rho)}};
  j["top"] = assign_to_json(sq.top);
  j["bottom"] = assign_to_json(sq.bottom);
  return j;
}

LiftingSquare square_from_json(const json& j) {
  SSetMap lambda = map_from_json(field(j, "lambda")), rho = map_from_json(field(j, "rho"));
  LiftingSquare sq{lambda, rho, map_from_json(lambda.source, rho.source, field(j, "top")),
                   map_from_json(lambda.target, rho.target, field(j, "bottom"))};
  if (!sq.commutes()) throw InputError("square does not commute");
  return sq;
}

// Families and simplicial objects ---------------------------------------------------

json to_json(const Family& a) {
  json j{{"index", a.index}, {"family", json::object()}};
  for (std::size_t i = 0; i < a.size(); ++i) j["family"][a.index[i]] = a.family[i];
  return j;
}

Family family_from_json(const json& j) {
  Family a;
  for (const json& x : field(j, "index")) {
    const std::string name = get<std::string>(x, "index");
    const json& fam = field(j, "family");
    if (!fam.contains(name)) throw InputError("family has no member '" + name + "'");
    const int s = get<int>(fam.at(name), "family");
    if (s < 0) throw InputError("member sizes are nonnegative");
    a.index.push_back(name);
    a.family.push_back(s);
  }
  return a;
}

json to_json(const SimpObject& x) {
  json j{{"trunc", x.trunc}, {"total", to_json(x.total())}, {"index", to_json(x.index())}};
  j["p"] = assign_to_json(x.p);
  return j;
}

SimpObject sobj_from_json(const json& j) {
  SSet e = sset_from_json(field(j, "total")), b = sset_from_json(field(j, "index"));
  const int trunc = j.contains("trunc") ? get<int>(j.at("trunc"), "trunc") : 3;
  return SimpObject{map_from_json(e, b, field(j, "p")), trunc};
}

json to_json(const SimpMorphism& f) {
  json j{{"source", to_json(f.source)}, {"target", to_json(f.target)}};
  j["total"] = assign_to_json(f.total);
  j["index"] = assign_to_json(f.index);
  return j;
}

SimpMorphism smorphism_from_json(const json& j) {
  SimpObject s = sobj_from_json(field(j, "source")), t = sobj_from_json(field(j, "target"));
  SimpMorphism f{s, t, map_from_json(s.total(), t.total(), field(j, "total")),
                 map_from_json(s.index(), t.index(), field(j, "index"))};
  try {
    f.validate();
  } catch (const SSetError& e) {
    throw InputError(e.what());
  }
  return f;
}

// Diagrams --------------------------------------------------------------------------

json to_json(const Diagram& d) {
  json j{{"shape", to_json(d.shape)}, {"values", json::object()}, {"arrows", json::object()}};
  for (int o = 0; o < d.shape.object_count(); ++o) j["values"][d.shape.objects[u(o)]] = to_json(d.values[u(o)]);
  for (int m = 0; m < d.shape.morphism_count(); ++m)
    if (!d.shape.is_identity(m)) j["arrows"][d.shape.morphisms[u(m)].id] = assign_to_json(d.arrows[u(m)]);
  return j;
}

namespace {
const json& value_of(const json& j, const FinCategory& shape, int o) {
  const json& values = field(j, "values");
  const std::string& name = shape.objects[u(o)];
  if (!values.contains(name)) throw InputError("diagram has no value at '" + name + "'");
  return values.at(name);
}

const json* arrow_of(const json& j, const FinCategory& shape, int m) {
  if (shape.is_identity(m)) return nullptr;
  const std::string& id = shape.morphisms[u(m)].id;
  if (!j.contains("arrows") || !j.at("arrows").contains(id)) throw InputError("diagram has no map for '" + id + "'");
  return &j.at("arrows").at(id);
}
}  // namespace

bool is_sobj_diagram(const json& j) {
  const json& values = field(j, "values");
  return !values.empty() && values.begin()->contains("total");
}

Diagram diagram_from_json(const json& j) {
  Diagram d{category_from_json(field(j, "shape")), {}, {}};
  for (int o = 0; o < d.shape.object_count(); ++o) d.values.push_back(sset_from_json(value_of(j, d.shape, o)));
  for (int m = 0; m < d.shape.morphism_count(); ++m) {
    const SSet& s = d.values[u(d.shape.src(m))];
    const json* a = arrow_of(j, d.shape, m);
    d.arrows.push_back(a ? map_from_json(s, d.values[u(d.shape.dst(m))], *a) : SSetMap::identity(s));
  }
  CategoryReport r = validate_diagram(d);
  if (!r.ok) throw InputError("diagram: " + r.violations.front());
  return d;
}

SobjDiagram sobj_diagram_from_json(const json& j) {
  SobjDiagram d{category_from_json(field(j, "shape")), {}, {}};
  for (int o = 0; o < d.shape.object_count(); ++o) d.values.push_back(sobj_from_json(value_of(j, d.shape, o)));
  for (int m = 0; m < d.shape.morphism_count(); ++m) {
    const SimpObject& s = d.values[u(d.shape.src(m))];
    const SimpObject& t = d.values[u(d.shape.dst(m))];
    const json* a = arrow_of(j, d.shape, m);
    d.arrows.push_back(a ? SimpMorphism{s, t, map_from_json(s.total(), t.total(), field(*a, "total")),
                                        map_from_json(s.index(), t.index(), field(*a, "index"))}
                         : identity(s));
    try {
      d.arrows.back().validate();
    } catch (const SSetError& e) {
      throw InputError(e.what());
    }
  }
  for (const Diagram& part : {totals(d), indices(d)}) {
    CategoryReport r = validate_diagram(part);
    if (!r.ok) throw InputError("diagram: " + r.violations.front());
  }
  return d;
}

json to_json(const HomologyProfile& p) {
  json j = json::array();
  for (const HomologyGroup& g : p.groups) j.push_back({{"betti", g.betti}, {"torsion", g.torsion}, {"text", g.to_string()}});
  return j;
}

}  // namespace wfskit
