#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wfskit {

/// A monotone map [m] -> [n] between finite ordinals, stored by its values.
struct Monotone {
  std::vector<int> values;  // values[k] in [0, codomain]
  int codomain = 0;

  int domain() const { return static_cast<int>(values.size()) - 1; }
  int operator()(int k) const { return values[static_cast<std::size_t>(k)]; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  auto operator<=>(const Monotone&) const = default;
  bool operator==(const Monotone&) const = default;

  static Monotone identity(int n);
  /// delta^i : [n-1] -> [n], skipping i.
  static Monotone coface(int n, int i);
  /// sigma^j : [n+1] -> [n], hitting j twice.
  static Monotone codegeneracy(int n, int j);
  static Monotone constant(int m, int value, int codomain);
};

/// g o f.
Monotone compose(const Monotone& g, const Monotone& f);

/// theta = mono o epi with epi : [m] ->> [k] and mono : [k] >-> [n].
struct EpiMono {
  Monotone epi;
  Monotone mono;
};
EpiMono epi_mono(const Monotone& theta);

/// All monotone maps [m] -> [n] in lexicographic order of value sequences.
std::vector<Monotone> all_monotone(int m, int n);
/// All surjections [m] ->> [k] in lexicographic order.
std::vector<Monotone> all_surjections(int m, int k);
/// All injections [k] >-> [n] in lexicographic order.
std::vector<Monotone> all_injections(int k, int n);

/// Degeneracy word "s3s1" (strictly decreasing indices) of a surjection.
std::string degeneracy_word(const Monotone& surjection);
/// Parses a degeneracy word for a simplex of dimension `base_dim`.
/// Throws std::invalid_argument unless indices are strictly decreasing and in range.
Monotone parse_degeneracy_word(const std::string& word, int base_dim);

}  // namespace wfskit
