#include "wfskit/monotone.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfskit {

bool Monotone::is_identity() const {
  if (domain() != codomain) return false;
  for (int k = 0; k <= codomain; ++k)
    if (values[static_cast<std::size_t>(k)] != k) return false;
  return true;
}

bool Monotone::is_injective() const {
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] == values[k - 1]) return false;
  return true;
}

bool Monotone::is_surjective() const {
  if (values.empty()) return codomain < 0;
  if (values.front() != 0 || values.back() != codomain) return false;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] - values[k - 1] > 1) return false;
  return true;
}

Monotone Monotone::identity(int n) {
  Monotone m;
  m.codomain = n;
  m.values.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) m.values[static_cast<std::size_t>(k)] = k;
  return m;
}

Monotone Monotone::coface(int n, int i) {
  Monotone m;
  m.codomain = n;
  for (int k = 0; k < n; ++k) m.values.push_back(k < i ? k : k + 1);
  return m;
}

Monotone Monotone::codegeneracy(int n, int j) {
  Monotone m;
  m.codomain = n;
  for (int k = 0; k <= n + 1; ++k) m.values.push_back(k <= j ? k : k - 1);
  return m;
}

Monotone Monotone::constant(int m, int value, int codomain) {
  Monotone out;
  out.codomain = codomain;
  out.values.assign(static_cast<std::size_t>(m + 1), value);
  return out;
}

Monotone compose(const Monotone& g, const Monotone& f) {
  Monotone out;
  out.codomain = g.codomain;
  out.values.reserve(f.values.size());
  for (int v : f.values) out.values.push_back(g(v));
  return out;
}

EpiMono epi_mono(const Monotone& theta) {
  EpiMono out;
  out.mono.codomain = theta.codomain;
  int k = -1;
  for (std::size_t i = 0; i < theta.values.size(); ++i) {
    if (i == 0 || theta.values[i] != theta.values[i - 1]) {
      ++k;
      out.mono.values.push_back(theta.values[i]);
    }
    out.epi.values.push_back(k);
  }
  out.epi.codomain = k;
  return out;
}

namespace {

void monotone_rec(int pos, int m, int n, int lo, std::vector<int>& cur,
                  std::vector<Monotone>& out) {
  if (pos > m) {
    out.push_back(Monotone{cur, n});
    return;
  }
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    monotone_rec(pos + 1, m, n, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monotone> all_monotone(int m, int n) {
  std::vector<Monotone> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> cur;
  monotone_rec(0, m, n, 0, cur, out);
  return out;
}

std::vector<Monotone> all_surjections(int m, int k) {
  std::vector<Monotone> out;
  for (auto& t : all_monotone(m, k))
    if (t.is_surjective()) out.push_back(std::move(t));
  return out;
}

std::vector<Monotone> all_injections(int k, int n) {
  std::vector<Monotone> out;
  for (auto& t : all_monotone(k, n))
    if (t.is_injective()) out.push_back(std::move(t));
  return out;
}

std::string degeneracy_word(const Monotone& surjection) {
  std::string word;
  for (int j = surjection.domain() - 1; j >= 0; --j)
    if (surjection(j) == surjection(j + 1)) word += "s" + std::to_string(j);
  return word;
}

Monotone parse_degeneracy_word(const std::string& word, int base_dim) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] != 's') throw std::invalid_argument("bad degeneracy word '" + word + "'");
    std::size_t end = pos + 1;
    while (end < word.size() && word[end] >= '0' && word[end] <= '9') ++end;
    if (end == pos + 1) throw std::invalid_argument("bad degeneracy word '" + word + "'");
    indices.push_back(std::stoi(word.substr(pos + 1, end - pos - 1)));
    pos = end;
  }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] >= indices[i - 1])
      throw std::invalid_argument("degeneracy word '" + word + "' is not strictly decreasing");
  const int dim = base_dim + static_cast<int>(indices.size());
  // s_{j1} ... s_{jr} y with j1 > ... > jr repeats exactly at the positions in the word.
  Monotone sigma;
  sigma.codomain = base_dim;
  int value = 0;
  for (int k = 0; k <= dim; ++k) {
    sigma.values.push_back(value);
    const bool repeat = std::find(indices.begin(), indices.end(), k) != indices.end();
    if (!repeat) ++value;
  }
  if (!indices.empty() && indices.front() >= dim)
    throw std::invalid_argument("degeneracy index out of range in '" + word + "'");
  if (!sigma.is_surjective()) throw std::invalid_argument("degeneracy word out of range '" + word + "'");
  return sigma;
}

}  // namespace wfskit
