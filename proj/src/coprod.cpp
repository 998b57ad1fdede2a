#include "wfskit/coprod.hpp"

#include <map>

namespace wfskit {

std::vector<int> FinSetCategory::objects() const {
  std::vector<int> out;
  for (int n = 0; n <= max_size_; ++n) out.push_back(n);
  return out;
}

std::optional<CoproductCone<int, SetMap>> FinSetCategory::coproduct(const std::vector<int>& family) const {
  CoproductCone<int, SetMap> cone{0, {}};
  for (int a : family) cone.apex += a;
  int offset = 0;
  for (int a : family) {
    SetMap j{a, cone.apex, {}};
    for (int x = 0; x < a; ++x) j.values.push_back(offset + x);
    cone.injections.push_back(std::move(j));
    offset += a;
  }
  return cone;
}

std::optional<PullbackCone<int, SetMap>> FinSetCategory::pullback(const SetMap& f, const SetMap& g) const {
  PullbackCone<int, SetMap> cone{0, {0, f.source, {}}, {0, g.source, {}}};
  for (int x = 0; x < f.source; ++x)
    for (int y = 0; y < g.source; ++y)
      if (f(x) == g(y)) {
        cone.first.values.push_back(x);
        cone.second.values.push_back(y);
      }
  cone.apex = static_cast<int>(cone.first.values.size());
  cone.first.source = cone.second.source = cone.apex;
  return cone;
}

std::vector<int> FinCategoryBase::objects() const {
  std::vector<int> out;
  for (int o = 0; o < c_.object_count(); ++o) out.push_back(o);
  return out;
}

FinCategory pointed_sets_category() {
  // Size -1 stands for the empty object E.
  const std::vector<int> sizes{-1, 1, 2, 3};
  auto obj = [](int k) { return k < 0 ? std::string("E") : "P" + std::to_string(k); };
  auto label = [&](int a, int b, const SetMap& m) {
    if (a == b && (a < 0 || m == SetMap::identity(a))) return "id_" + obj(a);
    if (a < 0) return "!" + obj(b);
    std::string s = obj(a) + ">" + obj(b) + ":";
    for (int v : m.values) s += std::to_string(v);
    return s;
  };
  auto maps = [](int a, int b) {
    std::vector<SetMap> out;
    if (a < 0) return std::vector<SetMap>{SetMap{0, std::max(b, 0), {}}};
    if (b < 0) return out;
    for (const SetMap& m : all_set_maps(a, b))
      if (m(0) == 0) out.push_back(m);
    return out;
  };
  FinCategory::Builder builder;
  for (int k : sizes) builder.object(obj(k));
  std::vector<std::tuple<int, int, SetMap>> all;
  for (int a : sizes)
    for (int b : sizes)
      for (const SetMap& m : maps(a, b)) {
        all.emplace_back(a, b, m);
        std::string id = label(a, b, m);
        if (id.rfind("id_", 0) != 0) builder.morphism(id, obj(a), obj(b));
      }
  for (const auto& [a, b, f] : all)
    for (const auto& [b2, c, g] : all) {
      if (b2 != b) continue;
      const std::string fid = label(a, b, f), gid = label(b, c, g);
      if (fid.rfind("id_", 0) == 0 || gid.rfind("id_", 0) == 0) continue;
      SetMap gf = a < 0 ? SetMap{0, std::max(c, 0), {}} : compose(g, f);
      builder.composite(gid, fid, label(a, c, gf));
    }
  return builder.build();
}

}  // namespace wfskit
