#include "wfskit/lifting.hpp"

#include <algorithm>
#include <map>

namespace wfskit {

bool LiftingSquare::commutes() const {
  auto fits = [](const SSet& a, const SSet& b) { return a.same_data(b) || a.size() == b.size(); };
  if (!fits(lambda.source, top.source) || !fits(lambda.target, bottom.source) || !fits(top.target, rho.source) ||
      !fits(rho.target, bottom.target))
    return false;
  return compose(rho, top) == compose(bottom, lambda);
}

std::string to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::lifted: return "lifted";
    case LiftStatus::no_lift: return "no_lift";
    case LiftStatus::budget: return "budget";
  }
  return "?";
}

namespace {

struct Tabs {
  Tabulation x;  // rho.source
  Tabulation y;  // rho.target
};

// Maps out of both ends of lambda are searched; lambda need not be injective.
int square_depth(const SSetMap& lambda) { return std::max(search_depth(lambda.source), search_depth(lambda.target)); }

Tabs tabs_for(const SSetMap& rho, int depth) {
  return {tabulate(rho.source, depth), tabulate(rho.target, depth)};
}

LiftResult lift_with(const LiftingSquare& sq, const Tabs& t, std::uint64_t budget) {
  MapSearch search(sq.lambda.target, t.x);
  search.over(sq.rho, sq.bottom, t.y).budget(budget);
  for (int a = 0; a < sq.lambda.source.size(); ++a) {
    const Simplex& img = sq.lambda(a);
    search.pin(img.nd, img.sigma, sq.top(a));
  }
  LiftResult r;
  r.lift = search.first();
  r.nodes = search.nodes();
  if (r.lift) r.status = LiftStatus::lifted;
  else r.status = search.status() == SearchStatus::budget ? LiftStatus::budget : LiftStatus::no_lift;
  return r;
}

}  // namespace

LiftResult solve_lifting(const LiftingSquare& sq, std::uint64_t budget) {
  if (!sq.commutes()) throw SSetError("lifting square does not commute");
  Tabs t = tabs_for(sq.rho, square_depth(sq.lambda));
  return lift_with(sq, t, budget);
}

bool verify_lift(const LiftingSquare& sq, const SSetMap& lift) {
  try {
    lift.validate();
  } catch (const SSetError&) {
    return false;
  }
  return compose(lift, sq.lambda) == sq.top && compose(sq.rho, lift) == sq.bottom;
}

namespace {

/// Visits the commuting squares lambda -> rho; stops when visit returns false.
void for_each_square(const SSetMap& lambda, const SSetMap& rho, const Tabs& t,
                     const std::function<bool(const LiftingSquare&)>& visit) {
  MapSearch bottoms(lambda.target, t.y);
  bottoms.budget(UINT64_MAX);
  bottoms.run([&](const SSetMap& bottom) {
    SSetMap v = compose(bottom, lambda);
    MapSearch tops(lambda.source, t.x);
    tops.over(rho, v, t.y).budget(UINT64_MAX);
    bool go_on = true;
    tops.run([&](const SSetMap& top) {
      go_on = visit(LiftingSquare{lambda, rho, top, bottom});
      return go_on;
    });
    return go_on;
  });
}

}  // namespace

std::vector<LiftingSquare> all_squares(const SSetMap& lambda, const SSetMap& rho) {
  Tabs t = tabs_for(rho, square_depth(lambda));
  std::vector<LiftingSquare> out;
  for_each_square(lambda, rho, t, [&](const LiftingSquare& sq) {
    out.push_back(sq);
    return true;
  });
  return out;
}

RlpReport has_rlp(const SSetMap& f, const std::vector<SSetMap>& generators, int dim, std::uint64_t budget) {
  RlpReport rep;
  rep.dim = dim;
  std::map<int, Tabs> tabs;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const SSetMap& g = generators[gi];
    const int depth = square_depth(g);
    if (g.target.top_dim() > dim) continue;
    auto it = tabs.find(depth);
    if (it == tabs.end()) it = tabs.emplace(depth, tabs_for(f, depth)).first;
    bool stop = false;
    for_each_square(g, f, it->second, [&](const LiftingSquare& sq) {
      ++rep.squares;
      LiftResult r = lift_with(sq, it->second, budget);
      rep.nodes += r.nodes;
      if (r.status == LiftStatus::lifted) return true;
      // A refutation outranks a budget verdict; keep looking after a budget hit.
      if (r.status == LiftStatus::no_lift || rep.status == LiftStatus::lifted) {
        rep.status = r.status;
        rep.witness = sq;
        rep.generator = gi;
      }
      stop = r.status == LiftStatus::no_lift;
      return !stop;
    });
    if (stop) break;
  }
  return rep;
}

std::vector<SSetMap> horn_generators(int dim) {
  std::vector<SSetMap> out;
  for (int n = 1; n <= dim; ++n)
    for (int k = 0; k <= n; ++k) out.push_back(horn_inclusion(n, k));
  return out;
}

std::vector<SSetMap> boundary_generators(int dim) {
  std::vector<SSetMap> out;
  for (int n = 0; n <= dim; ++n) out.push_back(boundary_inclusion(n));
  return out;
}

RlpReport is_kan_fibration(const SSetMap& f, int dim, std::uint64_t budget) {
  return has_rlp(f, horn_generators(dim), dim, budget);
}

RlpReport is_trivial_fibration(const SSetMap& f, int dim, std::uint64_t budget) {
  return has_rlp(f, boundary_generators(dim), dim, budget);
}

namespace {

SSetMap pair_into(const SSet& set, const SSetMap& first, const SSetMap& second, const SSetMap& f, const SSetMap& g) {
  const SSet& z = f.source;
  const int depth = std::max(0, z.top_dim());
  Tabulation tp = tabulate(set, depth);
  Tabulation tx = tabulate(first.target, depth);
  Tabulation ty = tabulate(second.target, depth);
  auto l1 = level_map(first, tp, tx);
  auto l2 = level_map(second, tp, ty);
  SSetMap out{z, set, {}};
  std::vector<std::map<std::pair<int, int>, int>> lookup(static_cast<std::size_t>(depth + 1));
  for (int n = 0; n <= depth; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t e = 0; e < l1[un].size(); ++e) lookup[un].emplace(std::pair{l1[un][e], l2[un][e]}, static_cast<int>(e));
  }
  for (int id = 0; id < z.size(); ++id) {
    const auto n = static_cast<std::size_t>(z.nd(id).dim);
    auto it = lookup[n].find({tx.index_of(f(id)), ty.index_of(g(id))});
    if (it == lookup[n].end()) throw SSetError("pairing: maps do not factor through the limit");
    out.assign.push_back(tp.simplices[n][static_cast<std::size_t>(it->second)]);
  }
  return out;
}

}  // namespace

SSetMap pairing(const Product& p, const SSetMap& f, const SSetMap& g) { return pair_into(p.set, p.first, p.second, f, g); }

SSetMap pairing(const Pullback& p, const SSetMap& f, const SSetMap& g) { return pair_into(p.set, p.first, p.second, f, g); }

SSetMap product_map(const Product& source, const Product& target, const SSetMap& f, const SSetMap& g) {
  return pairing(target, compose(f, source.first), compose(g, source.second));
}

SSetMap copairing(const Pushout& p, const SSetMap& f, const SSetMap& g) {
  const SSet& z = f.target;
  SSetMap out{p.set, z, std::vector<Simplex>(static_cast<std::size_t>(p.set.size()))};
  std::vector<bool> done(static_cast<std::size_t>(p.set.size()), false);
  auto take = [&](const SSetMap& leg, const SSetMap& value) {
    for (int id = 0; id < leg.source.size(); ++id) {
      const Simplex& s = leg(id);
      if (!s.nondegenerate() || done[static_cast<std::size_t>(s.nd)]) continue;
      done[static_cast<std::size_t>(s.nd)] = true;
      out.assign[static_cast<std::size_t>(s.nd)] = value(id);
    }
  };
  take(p.first, f);
  take(p.second, g);
  if (std::find(done.begin(), done.end(), false) != done.end())
    throw SSetError("copairing: pushout generator not covered by either leg");
  return out;
}

}  // namespace wfskit
