#include "trigonal/thomae.hpp"

#include <algorithm>
#include <numeric>

#include "text_util.hpp"
#include "trigonal/errors.hpp"

namespace trigonal {

namespace {

constexpr std::array<std::pair<int, int>, 3> kCrossPairs{{{1, 2}, {2, 3}, {1, 3}}};

void require_point(std::span<const Rational> point, int n) {
  if (static_cast<int>(point.size()) != n) {
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(n));
  }
}

Rational vandermonde_value(const std::vector<int>& indices, std::span<const Rational> point) {
  Rational out = 1;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (std::size_t l = k + 1; l < indices.size(); ++l) {
      out *= point[indices[k] - 1] - point[indices[l] - 1];
    }
  }
  return out;
}

bool next_combination(std::vector<int>& idx, int universe) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == universe - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Every ascending m-subset of `pool` containing pool.front(), in lexicographic order.
std::vector<std::vector<int>> blocks_with_min(const std::vector<int>& pool, int m) {
  std::vector<std::vector<int>> out;
  const std::vector<int> rest(pool.begin() + 1, pool.end());
  std::vector<int> idx(m - 1);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> block{pool.front()};
    for (int i : idx) block.push_back(rest[i]);
    out.push_back(std::move(block));
  } while (m > 1 && next_combination(idx, static_cast<int>(rest.size())));
  return out;
}

std::vector<int> without(const std::vector<int>& pool, const std::vector<int>& removed) {
  std::vector<int> out;
  std::set_difference(pool.begin(), pool.end(), removed.begin(), removed.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TrigonalPartition::TrigonalPartition(Blocks blocks) : blocks_(std::move(blocks)) {
  const std::size_t m = blocks_[0].size();
  if (m == 0) throw InputError("partition blocks must be nonempty");
  std::vector<int> seen;
  for (auto& b : blocks_) {
    if (b.size() != m) throw InputError("partition blocks must all have size m");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] != static_cast<int>(k) + 1) {
      throw InputError("partition blocks must cover 1.." + std::to_string(3 * m) + " exactly once");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

TrigonalPartition TrigonalPartition::from_tableau(const Tableau& t) {
  const auto& cols = t.columns();
  if (cols.size() != 3 || cols[0].size() != cols[2].size()) {
    throw InputError("a trigonal partition needs an m x 3 rectangular tableau");
  }
  return TrigonalPartition({cols[0], cols[1], cols[2]});
}

Tableau TrigonalPartition::to_tableau() const {
  return Tableau({blocks_[0], blocks_[1], blocks_[2]});
}

std::string TrigonalPartition::to_string() const {
  return detail::join_ints(blocks_[0], ',') + '|' + detail::join_ints(blocks_[1], ',') + '|' +
         detail::join_ints(blocks_[2], ',');
}

TrigonalPartition parse_partition(std::string_view text) {
  const auto parts = detail::split(text, '|');
  if (parts.size() != 3) throw InputError("a partition has exactly three '|'-separated blocks: '" + std::string(text) + "'");
  TrigonalPartition::Blocks blocks;
  for (int i = 0; i < 3; ++i) {
    blocks[i] = detail::parse_int_list(parts[i], "partition entry");
    if (!std::is_sorted(blocks[i].begin(), blocks[i].end())) {
      throw InputError("partition block entries must ascend: '" + std::string(parts[i]) + "'");
    }
  }
  return TrigonalPartition(std::move(blocks));
}

std::vector<TrigonalPartition> enumerate_partitions(int m, int limit) {
  if (m < 1) throw InputError("m must be positive");
  if (3 * m > limit) {
    throw SizeError("3m = " + std::to_string(3 * m) + " exceeds the enumeration limit " + std::to_string(limit));
  }
  std::vector<int> all(3 * m);
  std::iota(all.begin(), all.end(), 1);
  std::vector<TrigonalPartition> out;
  for (auto& first : blocks_with_min(all, m)) {
    const auto rest = without(all, first);
    for (auto& second : blocks_with_min(rest, m)) {
      out.emplace_back(TrigonalPartition::Blocks{first, second, without(rest, second)});
    }
  }
  return out;
}

SparsePoly tableau_poly(const Tableau& t) {
  SparsePoly out = SparsePoly::constant(t.size(), 1);
  for (const auto& col : t.columns()) out = multiply(out, diff_product(col, t.size()));
  return out;
}

Rational tableau_value(const Tableau& t, std::span<const Rational> point) {
  require_point(point, t.size());
  Rational out = 1;
  for (const auto& col : t.columns()) out *= vandermonde_value(col, point);
  return out;
}

SparsePoly p_poly(const TrigonalPartition& part) {
  SparsePoly out = SparsePoly::constant(part.n(), 1);
  for (const auto& b : part.blocks()) out = multiply(out, diff_product(b, part.n()));
  return out;
}

Rational p_value(const TrigonalPartition& part, std::span<const Rational> point) {
  require_point(point, part.n());
  Rational out = 1;
  for (const auto& b : part.blocks()) out *= vandermonde_value(b, point);
  return out;
}

SparsePoly cross_poly(const TrigonalPartition& part, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw InputError("block indices are 1, 2 or 3");
  if (i == j) throw InputError("cross_poly needs two distinct blocks; use p_poly for a block with itself");
  const int n = part.n();
  SparsePoly out = SparsePoly::constant(n, 1);
  for (int a : part.block(i)) {
    for (int b : part.block(j)) {
      SparsePoly factor(n);
      factor.add_term(Monomial::variable(a), 1);
      factor.add_term(Monomial::variable(b), -1);
      out = multiply(out, factor);
    }
  }
  return out;
}

SparsePoly discriminant(int n, std::size_t max_terms) {
  if (n < 1) throw InputError("discriminant needs at least one variable");
  SparsePoly out = SparsePoly::constant(n, 1);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      SparsePoly factor(n);
      factor.add_term(Monomial::variable(k), 1);
      factor.add_term(Monomial::variable(l), -1);
      out = multiply(out, factor, max_terms);
    }
  }
  return out;
}

SparsePoly thomae_rhs(const TrigonalPartition& part, std::size_t max_terms) {
  SparsePoly out = power(p_poly(part), 3, max_terms);
  for (const auto& [i, j] : kCrossPairs) out = multiply(out, cross_poly(part, i, j), max_terms);
  return out;
}

Rational thomae_rhs_value(const TrigonalPartition& part, std::span<const Rational> point) {
  const Rational p = p_value(part, point);
  Rational out = p * p * p;
  for (const auto& [i, j] : kCrossPairs) {
    for (int a : part.block(i)) {
      for (int b : part.block(j)) out *= point[a - 1] - point[b - 1];
    }
  }
  return out;
}

int discriminant_sign(const TrigonalPartition& part) {
  int inversions = 0;
  for (const auto& [i, j] : kCrossPairs) {
    for (int a : part.block(i)) {
      for (int b : part.block(j)) inversions += a > b ? 1 : 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace trigonal
