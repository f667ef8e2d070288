#ifndef TRIGONAL_POLY_HPP
#define TRIGONAL_POLY_HPP

// Exact sparse multivariate polynomials over the integers in variables
// l1..ln (the branch points), with exact rational evaluation.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trigonal {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kDefaultTermLimit = 10'000'000;

/// Product of variables with positive exponents, stored as (index, exponent)
/// pairs sorted by 1-based variable index.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> factors);

  static Monomial variable(int index) { return Monomial({{index, 1}}); }

  const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> factors_;
  int degree_ = 0;
};

/// Graded lexicographic order, highest term first: larger total degree, then
/// larger exponent on the lowest-indexed variable where the two differ.
struct GradedLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexFirst>;

  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, const BigInt& c);
  static SparsePoly variable(int nvars, int index);

  int nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const BigInt& c);

  SparsePoly& operator+=(const SparsePoly& q);
  SparsePoly& operator-=(const SparsePoly& q);
  SparsePoly& operator*=(const SparsePoly& q);

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator-(SparsePoly p);
  friend bool operator==(const SparsePoly& p, const SparsePoly& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
  }

 private:
  void require_same_ring(const SparsePoly& q) const;

  int nvars_;
  TermMap terms_;
};

/// Product with an explicit term-count guard; throws SizeError when the
/// result (or a partial result) exceeds `max_terms`.
SparsePoly multiply(const SparsePoly& p, const SparsePoly& q, std::size_t max_terms = kDefaultTermLimit);
SparsePoly scale(SparsePoly p, const BigInt& c);
SparsePoly power(const SparsePoly& p, int exponent, std::size_t max_terms = kDefaultTermLimit);

/// prod_{k<l} (l_{i_k} - l_{i_l}) for strictly ascending indices; 1 when fewer than two.
SparsePoly diff_product(std::span<const int> indices, int nvars);

Rational evaluate(const SparsePoly& p, std::span<const Rational> point);

/// Canonical text form, e.g. "+1*l1^2 -1*l2^2"; the zero polynomial is "0".
std::string to_string(const SparsePoly& p);
SparsePoly parse_poly(std::string_view text, int nvars);

}  // namespace trigonal

#endif  // TRIGONAL_POLY_HPP
