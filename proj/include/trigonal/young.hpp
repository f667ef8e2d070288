#ifndef TRIGONAL_YOUNG_HPP
#define TRIGONAL_YOUNG_HPP

// Young diagrams, column-strict tableaux, standardness, hook lengths, the
// straightening order and Garnir coset representatives.
//
// A tableau is stored by its columns. Every column is strictly increasing
// from top to bottom, so the polynomial attached to a tableau (the product of
// the Vandermonde factors of its columns) is determined by which entries share
// a column. A tableau is standard when its rows also increase.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace trigonal {

using BigInt = mpz_class;

inline constexpr int kDefaultEnumerationLimit = 16;

class YoungShape {
 public:
  /// Row lengths, weakly decreasing and positive.
  explicit YoungShape(std::vector<int> rows);

  /// `rows` rows of length `cols`.
  static YoungShape rectangle(int rows, int cols);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int size() const noexcept { return size_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int num_columns() const noexcept { return rows_.empty() ? 0 : rows_.front(); }

  /// Column lengths, i.e. the row lengths of the conjugate shape.
  std::vector<int> column_lengths() const;
  YoungShape conjugate() const;

  std::string to_string() const;

  friend bool operator==(const YoungShape&, const YoungShape&) = default;

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// Parses "3,3" or "2,2,2".
YoungShape parse_shape(std::string_view text);

class Tableau {
 public:
  /// Builds a tableau from its columns. Each column is sorted on entry; the
  /// column lengths must be weakly decreasing and the entries must be a
  /// permutation of 1..n.
  explicit Tableau(std::vector<std::vector<int>> columns);

  const YoungShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& columns() const noexcept { return columns_; }
  int size() const noexcept { return shape_.size(); }

  /// Column index (0-based) holding `entry`.
  int column_of(int entry) const;

  /// Runs of equal-length columns sorted by their minimum entry. Does not
  /// change the attached polynomial.
  Tableau canonical() const;
  bool is_canonical() const;

  /// Text form "1,2|3,6|4,5": columns separated by '|', entries by ','.
  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.columns_ == b.columns_; }

 private:
  YoungShape shape_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> column_of_;  // indexed by entry, slot 0 unused
};

/// Inverse of Tableau::to_string.
Tableau parse_tableau(std::string_view text);

bool is_standard(const Tableau& t);

/// Straightening order. Scanning entries from n downwards, the first entry
/// whose column differs decides: the tableau holding it further to the right
/// is the smaller one. Garnir rewrites strictly decrease in this order.
/// Throws InputError on shape mismatch.
std::strong_ordering compare_tableaux(const Tableau& a, const Tableau& b);

struct TableauLess {
  bool operator()(const Tableau& a, const Tableau& b) const { return compare_tableaux(a, b) < 0; }
};

/// Garnir set: the bottom `x_count` cells of column `column` together with the
/// top `y_count` cells of column `column + 1`.
struct GarnirChoice {
  int column = 0;
  int x_count = 0;
  int y_count = 0;

  friend bool operator==(const GarnirChoice&, const GarnirChoice&) = default;
};

/// Throws InputError unless the choice is well formed for `t` and satisfies
/// |X| + |Y| > length of the column.
void validate_garnir_choice(const Tableau& t, const GarnirChoice& g);

/// Cells (row, column) with t[row][column] > t[row][column + 1].
struct Descent {
  int row = 0;
  int column = 0;
};

std::vector<Descent> descents(const Tableau& t);

/// Topmost, then leftmost, descent. Empty iff `t` is standard.
std::optional<Descent> first_descent(const Tableau& t);

/// The Garnir set around a descent: X runs from the descent row to the bottom
/// of the left column, Y from the top of the right column to the descent row.
GarnirChoice garnir_choice_at(const Tableau& t, const Descent& d);

struct SignedTableau {
  int sign = 1;
  Tableau tableau;
};

/// One representative per coset of S_X x S_Y in S_{X u Y}: every way to
/// redistribute X u Y into the X cells and Y cells, each in ascending order.
/// The sign is the parity of the shuffle times the parity of re-sorting the
/// two affected columns. The unshuffled input comes first with sign +1.
std::vector<SignedTableau> garnir_cosets(const Tableau& t, const GarnirChoice& g);

/// Number of standard tableaux, n! / prod(hook lengths).
BigInt hook_count(const YoungShape& shape);

/// Hook length of every cell, row by row.
std::vector<std::vector<int>> hook_lengths(const YoungShape& shape);

/// Every standard tableau of `shape`, ascending under compare_tableaux.
/// Throws SizeError when the shape has more than `limit` cells.
std::vector<Tableau> enumerate_standard(const YoungShape& shape,
                                        int limit = kDefaultEnumerationLimit);

/// Number of column-strict fillings: n! / prod(column length!).
BigInt count_column_strict(const YoungShape& shape);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace trigonal

#endif  // TRIGONAL_YOUNG_HPP
