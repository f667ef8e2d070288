#ifndef TRIGONAL_THOMAE_HPP
#define TRIGONAL_THOMAE_HPP

// Trigonal partitions of {1..3m} and the branch-point polynomials attached to
// them: the block Vandermonde product p, the cross products between blocks,
// the discriminant and the polynomial part of the sixth-power Thomae formula.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigonal/poly.hpp"
#include "trigonal/young.hpp"

namespace trigonal {

/// Three disjoint ascending blocks of size m covering {1..3m}, ordered by
/// their minimum (so the first block contains 1).
class TrigonalPartition {
 public:
  using Blocks = std::array<std::vector<int>, 3>;

  /// Accepts the blocks in any order and with unsorted entries.
  explicit TrigonalPartition(Blocks blocks);

  /// Columns of the m x 3 rectangle are the blocks.
  static TrigonalPartition from_tableau(const Tableau& t);

  int m() const noexcept { return static_cast<int>(blocks_[0].size()); }
  int n() const noexcept { return 3 * m(); }
  const Blocks& blocks() const noexcept { return blocks_; }
  /// 1-based block access.
  const std::vector<int>& block(int i) const { return blocks_.at(i - 1); }

  Tableau to_tableau() const;
  std::string to_string() const;

  friend bool operator==(const TrigonalPartition&, const TrigonalPartition&) = default;

 private:
  Blocks blocks_;
};

/// Parses "1,2|3,6|4,5". Throws InputError when malformed.
TrigonalPartition parse_partition(std::string_view text);

/// All (3m)! / (m!^3 3!) partitions, lexicographic in (first block, second block).
std::vector<TrigonalPartition> enumerate_partitions(int m, int limit = kDefaultEnumerationLimit);

/// Product of the Vandermonde factors of the tableau's columns.
SparsePoly tableau_poly(const Tableau& t);
Rational tableau_value(const Tableau& t, std::span<const Rational> point);

SparsePoly p_poly(const TrigonalPartition& part);
Rational p_value(const TrigonalPartition& part, std::span<const Rational> point);

/// prod over a in block i, b in block j of (l_a - l_b); blocks are 1-based.
SparsePoly cross_poly(const TrigonalPartition& part, int i, int j);

/// prod_{k<l} (l_k - l_l) over l1..ln.
SparsePoly discriminant(int n, std::size_t max_terms = kDefaultTermLimit);

/// p^3 (12)(23)(13): the Thomae right-hand side without the constant and the
/// period determinant.
SparsePoly thomae_rhs(const TrigonalPartition& part, std::size_t max_terms = kDefaultTermLimit);
Rational thomae_rhs_value(const TrigonalPartition& part, std::span<const Rational> point);

/// Sign s with p * (12)(23)(13) = s * discriminant: the parity of the
/// cross-block pairs (a, b) with a > b.
int discriminant_sign(const TrigonalPartition& part);

}  // namespace trigonal

#endif  // TRIGONAL_THOMAE_HPP
