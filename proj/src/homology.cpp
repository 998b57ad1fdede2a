#include "wfskit/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wfskit {

namespace {

std::vector<int> positions(const SSet& x) {
  std::vector<int> pos(static_cast<std::size_t>(x.size()), -1);
  for (int n = 0; n <= x.top_dim(); ++n) {
    const auto& ids = x.nd_of_dim(n);
    for (std::size_t i = 0; i < ids.size(); ++i) pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  }
  return pos;
}

Eigen::Index chain_rank(const SSet& x, int n) {
  return static_cast<Eigen::Index>(x.nd_of_dim(n).size());
}

/// Chain map matrix C_n(X) -> C_n(Y) of the normalized complexes.
IntMatrix<Coeff> chain_map(const SSetMap& f, int n) {
  const auto& src = f.source.nd_of_dim(n);
  IntMatrix<Coeff> m = IntMatrix<Coeff>::Zero(chain_rank(f.target, n), static_cast<Eigen::Index>(src.size()));
  if (n < 0) return m;
  std::vector<int> pos = positions(f.target);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Simplex& img = f(src[c]);
    if (img.nondegenerate()) m(pos[static_cast<std::size_t>(img.nd)], static_cast<Eigen::Index>(c)) += 1;
  }
  return m;
}

std::optional<int> reliable_degree(const SSet& x) {
  if (auto d = x.truncated_at()) return *d - 1;
  return std::nullopt;
}

/// Boundary of the mapping cone, cone_k -> cone_{k-1}, cone_k = C_{k-1}X + C_k Y.
IntMatrix<Coeff> cone_boundary(const SSetMap& f, int k) {
  const SSet& x = f.source;
  const SSet& y = f.target;
  const Eigen::Index xs = chain_rank(x, k - 1), ys = chain_rank(y, k);
  const Eigen::Index xt = chain_rank(x, k - 2), yt = chain_rank(y, k - 1);
  IntMatrix<Coeff> m = IntMatrix<Coeff>::Zero(xt + yt, xs + ys);
  if (k - 1 >= 0) {
    if (k - 1 >= 1) m.block(0, 0, xt, xs) = -boundary_matrix(x, k - 1);
    m.block(xt, 0, yt, xs) = chain_map(f, k - 1);
  }
  m.block(xt, xs, yt, ys) = boundary_matrix(y, k);
  return m;
}

}  // namespace

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (Coeff t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t n = 0; n < groups.size(); ++n) os << (n ? ", " : "") << "H" << n << "=" << groups[n].to_string();
  return os.str();
}

IntMatrix<Coeff> boundary_matrix(const SSet& x, int n) {
  const Eigen::Index rows = n >= 1 ? chain_rank(x, n - 1) : 0;
  const auto& cols = x.nd_of_dim(n);
  IntMatrix<Coeff> m = IntMatrix<Coeff>::Zero(rows, static_cast<Eigen::Index>(cols.size()));
  if (n < 1) return m;
  std::vector<int> pos = positions(x);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& faces = x.nd(cols[c]).faces;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].nondegenerate())
        m(pos[static_cast<std::size_t>(faces[i].nd)], static_cast<Eigen::Index>(c)) += (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

HomologyProfile homology(const SSet& x, int truncation) {
  if (auto r = reliable_degree(x); r && *r < truncation)
    throw SSetError("presentation truncated at " + std::to_string(*x.truncated_at()) +
                    " cannot determine H_" + std::to_string(truncation));
  HomologyProfile hp;
  hp.truncation = truncation;
  std::vector<SmithForm<Coeff>> forms;
  for (int n = 0; n <= truncation + 1; ++n) forms.push_back(smith_normal_form(boundary_matrix(x, n)));
  for (int n = 0; n <= truncation; ++n) {
    HomologyGroup g;
    g.betti = static_cast<int>(chain_rank(x, n) - forms[static_cast<std::size_t>(n)].rank -
                               forms[static_cast<std::size_t>(n + 1)].rank);
    for (Coeff d : forms[static_cast<std::size_t>(n + 1)].invariant_factors())
      if (d > 1) g.torsion.push_back(d);
    hp.groups.push_back(std::move(g));
  }
  return hp;
}

Components pi0(const SSet& x) {
  const auto& verts = x.nd_of_dim(0);
  std::vector<int> pos = positions(x);
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  for (int e : x.nd_of_dim(1)) {
    int a = find(pos[static_cast<std::size_t>(x.nd(e).faces[0].nd)]);
    int b = find(pos[static_cast<std::size_t>(x.nd(e).faces[1].nd)]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  Components c;
  std::map<int, int> label;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    auto [it, inserted] = label.emplace(find(static_cast<int>(v)), c.count);
    if (inserted) ++c.count;
    c.of_vertex.push_back(it->second);
  }
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

WeqReport weq_oracle(const SSetMap& f, int truncation, bool pi1_sensitive) {
  WeqReport rep;
  rep.truncation = truncation;
  int limit = truncation;
  for (const SSet* s : {&f.source, &f.target})
    if (auto r = reliable_degree(*s)) limit = std::min(limit, *r);

  // pi0 bijection.
  Components cx = pi0(f.source), cy = pi0(f.target);
  std::vector<int> ypos = positions(f.target);
  std::vector<int> image(static_cast<std::size_t>(cx.count), -1);
  const auto& xv = f.source.nd_of_dim(0);
  for (std::size_t v = 0; v < xv.size(); ++v) {
    int target_vertex = f(xv[v]).nd;
    image[static_cast<std::size_t>(cx.of_vertex[v])] = cy.of_vertex[static_cast<std::size_t>(ypos[static_cast<std::size_t>(target_vertex)])];
  }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (cx.count != cy.count || !injective) {
    rep.verdict = Verdict::fail;
    rep.reason = "pi0: " + std::to_string(cx.count) + " -> " + std::to_string(cy.count) + " components, not a bijection";
    return rep;
  }

  // The cone is acyclic in degrees 1..limit iff H_k f is onto for k <= limit
  // and one-to-one for k < limit.
  std::vector<SmithForm<Coeff>> cone;
  for (int k = 0; k <= limit + 1; ++k) cone.push_back(smith_normal_form(cone_boundary(f, k)));
  for (int k = 1; k <= limit; ++k) {
    const Eigen::Index dim = chain_rank(f.source, k - 1) + chain_rank(f.target, k);
    const Eigen::Index betti = dim - cone[static_cast<std::size_t>(k)].rank - cone[static_cast<std::size_t>(k + 1)].rank;
    bool torsion = false;
    for (Coeff d : cone[static_cast<std::size_t>(k + 1)].invariant_factors()) torsion |= d > 1;
    if (betti != 0 || torsion) {
      rep.verdict = Verdict::fail;
      rep.reason = "mapping cone has homology in degree " + std::to_string(k) + " (H" + std::to_string(k - 1) +
                   " not injective or H" + std::to_string(k) + " not surjective)";
      return rep;
    }
  }
  // Injectivity in the top degree: cone cycles must have boundary X-part.
  if (limit >= 1) {
    IntMatrix<Coeff> z = kernel_basis(cone[static_cast<std::size_t>(limit + 1)]);
    const Eigen::Index xs = chain_rank(f.source, limit);
    SmithForm<Coeff> bx = smith_normal_form(boundary_matrix(f.source, limit + 1));
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
      IntVector<Coeff> xpart = z.col(c).head(xs);
      if (!solve_integer(bx, xpart)) {
        rep.verdict = Verdict::fail;
        rep.reason = "H" + std::to_string(limit) + " not injective";
        return rep;
      }
    }
  }
  if (limit < truncation) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "presentation truncated; homology agrees only through degree " + std::to_string(limit);
    return rep;
  }
  if (pi1_sensitive) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "homology agrees but the input is flagged pi1-sensitive";
    return rep;
  }
  rep.verdict = Verdict::pass;
  return rep;
}

}  // namespace wfskit
