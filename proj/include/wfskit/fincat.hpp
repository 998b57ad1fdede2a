#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfskit/sset.hpp"

namespace wfskit {

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite category with objects and morphisms in lexicographic id order.
/// comp[g][f] is g o f, or -1 when f and g are not composable.
struct FinCategory {
  struct Morphism {
    std::string id;
    int src = 0;
    int dst = 0;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;
  std::vector<std::vector<int>> comp;

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int src(int f) const { return morphisms[static_cast<std::size_t>(f)].src; }
  int dst(int f) const { return morphisms[static_cast<std::size_t>(f)].dst; }
  int compose(int g, int f) const { return comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; }
  bool is_identity(int f) const { return identity[static_cast<std::size_t>(src(f))] == f; }
  std::vector<int> hom(int a, int b) const;
  int object(const std::string& id) const;
  int morphism(const std::string& id) const;

  class Builder;
};

/// Collects objects, morphisms and composites; identities are created as
/// "id_<object>" unless given. Only composites of non-identities are listed.
class FinCategory::Builder {
 public:
  Builder& object(std::string id);
  Builder& morphism(std::string id, std::string src, std::string dst);
  Builder& identity(std::string object, std::string morphism);
  Builder& composite(std::string g, std::string f, std::string gf);
  /// Sorts ids; throws CategoryError on unknown references. Missing composites
  /// are left undefined for validate_category to report.
  FinCategory build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::array<std::string, 3>> morphisms_;
  std::vector<std::pair<std::string, std::string>> identities_;
  std::vector<std::array<std::string, 3>> composites_;
};

struct CategoryReport {
  bool ok = true;
  std::vector<std::string> violations;
};
CategoryReport validate_category(const FinCategory& c);

struct FinFunctor {
  FinCategory source;
  FinCategory target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;
};
CategoryReport validate_functor(const FinFunctor& f);
FinFunctor identity_functor(const FinCategory& c);
FinFunctor to_terminal(const FinCategory& c);
/// Functor given by object and non-identity morphism images (by id).
FinFunctor make_functor(const FinCategory& source, const FinCategory& target,
                        const std::vector<std::pair<std::string, std::string>>& objects,
                        const std::vector<std::pair<std::string, std::string>>& morphisms);

struct CommaCategory {
  FinCategory category;
  FinFunctor projection;               // to the source of alpha
  std::vector<int> object_of;          // comma object -> source object
  std::vector<int> arrow_of;           // comma object -> structure morphism in the target
};

/// alpha / j : objects (i, u : alpha(i) -> j).
CommaCategory comma_over(const FinFunctor& alpha, int j);
/// j \ alpha : objects (i, u : j -> alpha(i)).
CommaCategory comma_under(const FinFunctor& alpha, int j);
/// i / C : objects are morphisms i -> x.
CommaCategory under_category(const FinCategory& c, const std::string& i);
/// C / i : objects are morphisms x -> i.
CommaCategory over_category(const FinCategory& c, const std::string& i);

FinCategory opposite(const FinCategory& c);

/// A composable chain i_0 -> ... -> i_n; arrows[k] : i_k -> i_{k+1}.
struct Chain {
  int start = 0;
  std::vector<int> arrows;
  auto operator<=>(const Chain&) const = default;
};

struct Nerve {
  SSet set;
  std::vector<std::vector<Chain>> chains;  // table element per level
  std::vector<std::vector<Simplex>> ez;    // table element -> simplex of set
  int index_of(const Chain& c) const;
  Simplex simplex(const Chain& c) const;
};
/// Nerve up to dimension dim; stamped truncated unless every nondegenerate
/// chain fits.
Nerve nerve(const FinCategory& c, int dim);

struct FinitenessReport {
  bool finite = true;
  int max_chain = 0;             // longest nondegenerate chain when finite
  std::vector<int> loop;         // composable non-identity cycle otherwise
};
FinitenessReport is_homotopically_finite(const FinCategory& c);

// Standard shapes ---------------------------------------------------------------

FinCategory terminal_category();
FinCategory discrete_category(const std::vector<std::string>& objects);
/// Poset with morphisms "x<y" for x < y in the given relation (reflexive
/// closure implied; must be transitive).
FinCategory poset_category(const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& less);
FinCategory arrow_category();         // a -f-> b
FinCategory span_category();          // a <-l- c -r-> b
FinCategory cospan_category();        // a -l-> c <-r- b
FinCategory cyclic_group_category(int order);  // one object "*", morphisms g0..g{n-1}
FinCategory idempotent_category();    // one object with e o e = e

}  // namespace wfskit
