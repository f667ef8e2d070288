#ifndef TRIGONAL_STRAIGHTEN_HPP
#define TRIGONAL_STRAIGHTEN_HPP

// Straightening: rewriting the polynomial of an arbitrary column-strict
// tableau as an integer combination of standard-tableau polynomials by
// repeated Garnir relations, plus the identity ledger for trigonal
// partitions and its verification.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "trigonal/poly.hpp"
#include "trigonal/thomae.hpp"
#include "trigonal/young.hpp"

namespace trigonal {

using Coefficient = std::int64_t;

struct StraightenedExpr {
  Tableau source;
  /// Standard tableaux with nonzero coefficients, ascending under compare_tableaux.
  std::map<Tableau, Coefficient, TableauLess> terms;
  /// Garnir rewrites performed.
  std::size_t steps = 0;
};

enum class RewriteStrategy {
  kFirstDescent,  // topmost, then leftmost descent
  kLastDescent,   // bottommost, then rightmost descent
};

struct StraightenOptions {
  RewriteStrategy strategy = RewriteStrategy::kFirstDescent;
  /// Defaults to 10 x the number of column-strict fillings of the shape.
  std::optional<std::size_t> iteration_cap;
};

/// Signed terms of the Garnir relation sum sign * p(tableau) = 0; the input
/// tableau appears exactly once, first, with sign +1.
std::vector<SignedTableau> garnir_relation(const Tableau& t, const GarnirChoice& g);

/// sum sign * p(tableau), expanded.
SparsePoly relation_poly(std::span<const SignedTableau> relation);

/// Always rewrites the largest non-standard tableau of the working combination.
/// Throws AlgorithmError when the iteration cap is exceeded or a coefficient
/// overflows.
StraightenedExpr straighten(const Tableau& t, const StraightenOptions& options = {});

/// One straightened expression per non-standard partition, in partition order.
std::vector<StraightenedExpr> identity_ledger(int m, int limit = kDefaultEnumerationLimit,
                                              const StraightenOptions& options = {});

struct CoefficientReport {
  std::size_t identities = 0;
  std::size_t coefficients = 0;
  std::optional<Coefficient> min;
  std::optional<Coefficient> max;
  /// |coefficient| -> occurrences.
  std::map<Coefficient, std::size_t> histogram;
  bool all_unit = true;
};

CoefficientReport coefficient_report(std::span<const StraightenedExpr> ledger);

/// Expands both sides completely and compares the exact polynomials.
bool verify_exact(const StraightenedExpr& expr);

/// Compares both sides at each point with exact rational arithmetic.
bool verify_at_points(const StraightenedExpr& expr, std::span<const std::vector<Rational>> points);

/// `count` points with integer coordinates uniform in [-bound, bound].
std::vector<std::vector<Rational>> random_points(int nvars, int count, std::uint64_t seed,
                                                 long bound = 1'000'000);

/// Rank of the matrix [p(tableau_r)(point_c)].
std::size_t evaluation_rank(std::span<const Tableau> tableaux, std::span<const std::vector<Rational>> points);

/// Evaluates the standard-tableau polynomials at as many random points as
/// there are tableaux and checks the matrix is nonsingular. Retries once with
/// fresh points; throws AlgorithmError if both attempts are singular.
bool standard_basis_independent(const YoungShape& shape, std::uint64_t seed,
                                int limit = kDefaultEnumerationLimit);

}  // namespace trigonal

#endif  // TRIGONAL_STRAIGHTEN_HPP
