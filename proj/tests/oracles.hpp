#ifndef TRIGONAL_TESTS_ORACLES_HPP
#define TRIGONAL_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <vector>

#include "trigonal/poly.hpp"

namespace oracle {

/// Standard fillings of a shape (row lengths) by trying every permutation.
inline long count_standard_brute_force(const std::vector<int>& rows) {
  const int n = std::accumulate(rows.begin(), rows.end(), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    std::vector<std::vector<int>> grid;
    int k = 0;
    for (int len : rows) {
      grid.emplace_back(perm.begin() + k, perm.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < grid.size() && ok; ++r) {
      for (std::size_t c = 0; c < grid[r].size() && ok; ++c) {
        if (c > 0 && grid[r][c] < grid[r][c - 1]) ok = false;
        if (r > 0 && grid[r][c] < grid[r - 1][c]) ok = false;
      }
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Every column-strict filling, given column lengths, by trying every permutation.
inline std::vector<std::vector<std::vector<int>>> all_column_strict(const std::vector<int>& column_lengths) {
  const int n = std::accumulate(column_lengths.begin(), column_lengths.end(), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> cols;
    int k = 0;
    bool ok = true;
    for (int len : column_lengths) {
      cols.emplace_back(perm.begin() + k, perm.begin() + k + len);
      ok = ok && std::is_sorted(cols.back().begin(), cols.back().end());
      k += len;
    }
    if (ok) out.push_back(cols);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Sign of a permutation given as a sequence, by counting inversions.
inline int permutation_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// prod over columns of prod_{k<l} (x_{col[k]} - x_{col[l]}) in the given
/// (possibly unsorted) positional order, built factor by factor.
inline trigonal::SparsePoly positional_poly(const std::vector<std::vector<int>>& cols, int n) {
  using trigonal::Monomial;
  trigonal::SparsePoly out = trigonal::SparsePoly::constant(n, 1);
  for (const auto& col : cols) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      for (std::size_t l = k + 1; l < col.size(); ++l) {
        trigonal::SparsePoly f(n);
        f.add_term(Monomial::variable(col[k]), 1);
        f.add_term(Monomial::variable(col[l]), -1);
        out = out * f;
      }
    }
  }
  return out;
}

/// Genus-one theta constant by direct summation over |l| <= bound.
inline std::complex<double> theta_g1(double eps, double epsp, std::complex<double> tau, int bound = 10) {
  const double pi = std::numbers::pi;
  std::complex<double> sum = 0;
  for (int l = -bound; l <= bound; ++l) {
    const double x = l + eps / 2;
    sum += std::exp(2.0 * pi * std::complex<double>(0, 1) * (0.5 * x * tau * x + x * epsp / 2));
  }
  return sum;
}

}  // namespace oracle

#endif  // TRIGONAL_TESTS_ORACLES_HPP
