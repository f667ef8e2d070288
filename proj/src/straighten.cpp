#include "trigonal/straighten.hpp"

#include <random>

#include "trigonal/errors.hpp"

namespace trigonal {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw AlgorithmError("straightening coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw AlgorithmError("straightening coefficient overflow");
  return out;
}

using Combination = std::map<Tableau, Coefficient, TableauLess>;

void accumulate(Combination& into, const Tableau& t, Coefficient c) {
  auto [it, inserted] = into.try_emplace(t, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

std::vector<SignedTableau> garnir_relation(const Tableau& t, const GarnirChoice& g) {
  return garnir_cosets(t, g);
}

SparsePoly relation_poly(std::span<const SignedTableau> relation) {
  if (relation.empty()) throw InputError("empty relation");
  SparsePoly sum(relation.front().tableau.size());
  for (const auto& term : relation) sum += scale(tableau_poly(term.tableau), term.sign);
  return sum;
}

StraightenedExpr straighten(const Tableau& t, const StraightenOptions& options) {
  const std::size_t cap = options.iteration_cap.value_or(
      10 * static_cast<std::size_t>(count_column_strict(t.shape()).get_ui()));

  StraightenedExpr out{t, {}, 0};
  Combination pending;
  if (is_standard(t)) {
    out.terms.emplace(t, 1);
    return out;
  }
  pending.emplace(t, 1);

  while (!pending.empty()) {
    if (++out.steps > cap) {
      throw AlgorithmError("straightening of " + t.to_string() + " exceeded " + std::to_string(cap) + " rewrites");
    }
    const auto largest = std::prev(pending.end());
    const Tableau current = largest->first;
    const Coefficient coeff = largest->second;
    pending.erase(largest);

    const auto all = descents(current);
    const Descent d = options.strategy == RewriteStrategy::kFirstDescent ? all.front() : all.back();
    const auto relation = garnir_relation(current, garnir_choice_at(current, d));

    // current = -sum_{other terms} sign * term
    for (std::size_t k = 1; k < relation.size(); ++k) {
      const auto& [sign, tableau] = relation[k];
      const Coefficient c = checked_mul(-coeff, sign);
      accumulate(is_standard(tableau) ? out.terms : pending, tableau, c);
    }
  }
  return out;
}

std::vector<StraightenedExpr> identity_ledger(int m, int limit, const StraightenOptions& options) {
  std::vector<StraightenedExpr> ledger;
  for (const auto& part : enumerate_partitions(m, limit)) {
    const Tableau t = part.to_tableau();
    if (is_standard(t)) continue;
    ledger.push_back(straighten(t, options));
  }
  return ledger;
}

CoefficientReport coefficient_report(std::span<const StraightenedExpr> ledger) {
  CoefficientReport report;
  report.identities = ledger.size();
  for (const auto& expr : ledger) {
    for (const auto& [t, c] : expr.terms) {
      ++report.coefficients;
      report.min = report.min ? std::min(*report.min, c) : c;
      report.max = report.max ? std::max(*report.max, c) : c;
      ++report.histogram[c < 0 ? -c : c];
      if (c != 1 && c != -1) report.all_unit = false;
    }
  }
  return report;
}

bool verify_exact(const StraightenedExpr& expr) {
  SparsePoly rhs(expr.source.size());
  for (const auto& [t, c] : expr.terms) rhs += scale(tableau_poly(t), c);
  return tableau_poly(expr.source) == rhs;
}

bool verify_at_points(const StraightenedExpr& expr, std::span<const std::vector<Rational>> points) {
  for (const auto& point : points) {
    Rational rhs = 0;
    for (const auto& [t, c] : expr.terms) rhs += tableau_value(t, point) * Rational(BigInt(static_cast<long>(c)));
    if (tableau_value(expr.source, point) != rhs) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> random_points(int nvars, int count, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::vector<std::vector<Rational>> points(count);
  for (auto& p : points) {
    p.reserve(nvars);
    for (int k = 0; k < nvars; ++k) p.emplace_back(coord(rng));
  }
  return points;
}

std::size_t evaluation_rank(std::span<const Tableau> tableaux, std::span<const std::vector<Rational>> points) {
  const std::size_t rows = tableaux.size();
  const std::size_t cols = points.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = tableau_value(tableaux[r], points[c]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool standard_basis_independent(const YoungShape& shape, std::uint64_t seed, int limit) {
  const auto basis = enumerate_standard(shape, limit);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto points = random_points(shape.size(), static_cast<int>(basis.size()), seed + attempt);
    if (evaluation_rank(basis, points) == basis.size()) return true;
  }
  throw AlgorithmError("standard tableau polynomials evaluated singular at two independent point sets");
}

}  // namespace trigonal
