#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bracoid/report.hpp"

namespace bracoid {

/// table[a][b] is the index of a * b.
using CayleyTable = std::vector<std::vector<std::size_t>>;
/// A map between finite sets given by the image of each index.
using IndexMap = std::vector<std::size_t>;

/// Group axioms on a raw table, with witnesses. Throws ShapeError if the table
/// is not square or has out-of-range entries.
Report validate_group(const CayleyTable& table, std::size_t unit);

/// A finite group given by its Cayley table. Always valid: the constructor
/// throws PreconditionError naming the first failed axiom otherwise.
class FiniteGroup {
 public:
  FiniteGroup(CayleyTable table, std::size_t unit, std::string name = {});

  [[nodiscard]] std::size_t order() const { return table_.size(); }
  [[nodiscard]] std::size_t unit() const { return unit_; }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  [[nodiscard]] std::size_t inv(std::size_t a) const { return inverses_[a]; }
  [[nodiscard]] const CayleyTable& table() const { return table_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool is_abelian() const;

  /// Same elements with a * b := b * a.
  [[nodiscard]] FiniteGroup opposite() const;

  /// Structural equality; the name is metadata and is ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  CayleyTable table_;
  std::size_t unit_;
  std::vector<std::size_t> inverses_;
  std::string name_;
};

/// A greedy generating set, largest element orders first.
std::vector<std::size_t> generators(const FiniteGroup& g);
std::size_t element_order(const FiniteGroup& g, std::size_t x);
std::vector<IndexMap> homomorphisms(const FiniteGroup& source, const FiniteGroup& target);
std::vector<IndexMap> automorphisms(const FiniteGroup& g);
Report check_group_homomorphism(const IndexMap& f, const FiniteGroup& source, const FiniteGroup& target,
                                const std::string& label);

FiniteGroup cyclic_group(std::size_t n);
/// Elements (a, b) are indexed a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Permutations of {0..n-1} in lexicographic order, (s t)(x) = s(t(x)).
FiniteGroup symmetric_group(std::size_t n);
/// Order 2n; r^k s^e is indexed k + n e.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
/// Every group of order at most max_order (up to isomorphism) for
/// max_order <= 8, in a fixed order.
std::vector<FiniteGroup> small_groups(std::size_t max_order);

/// table[g][n] is the index of g acting on n.
struct ActionTable {
  std::size_t g_order = 0;
  std::size_t n_order = 0;
  CayleyTable table;

  friend bool operator==(const ActionTable&, const ActionTable&) = default;
};

/// Two groups and an action satisfying
/// g.(n m) = (g.n) (g.e)^-1 (g.m). Transitivity is not required.
struct GeneralizedSkewBracoid {
  FiniteGroup acting;
  FiniteGroup carrier;
  ActionTable action;

  friend bool operator==(const GeneralizedSkewBracoid&, const GeneralizedSkewBracoid&) = default;
};

Report check_gskb(const GeneralizedSkewBracoid& b);
/// True iff the orbit of the carrier's unit is the whole carrier.
bool is_transitive(const GeneralizedSkewBracoid& b);

/// A pair of group maps (f on the acting groups, g on the carriers).
struct GskbMorphism {
  IndexMap acting_map;
  IndexMap carrier_map;

  friend bool operator==(const GskbMorphism&, const GskbMorphism&) = default;
};

Report check_gskb_morphism(const GeneralizedSkewBracoid& source, const GeneralizedSkewBracoid& target,
                           const GskbMorphism& m);

/// (G, N^op, same action); a skew bracoid again.
GeneralizedSkewBracoid opposite_gskb(const GeneralizedSkewBracoid& b);

struct EnumerationOptions {
  std::size_t max_order = 8;
  unsigned jobs = 1;
};

/// Every action of G on N satisfying the skew bracoid law, sorted by table.
/// Throws BoundExceeded when either order is above options.max_order.
std::vector<GeneralizedSkewBracoid> enumerate_gskb(const FiniteGroup& acting, const FiniteGroup& carrier,
                                                   const EnumerationOptions& options = {});

/// Class index (in order of first appearance) of each bracoid under the
/// action of Aut(G) x Aut(N). All inputs must share the same groups.
std::vector<std::size_t> iso_classes(const std::vector<GeneralizedSkewBracoid>& list);

}  // namespace bracoid
