#include "trigonal/young.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "text_util.hpp"
#include "trigonal/errors.hpp"

namespace trigonal {

namespace {

// Parity of the permutation that sorts `v`, via inversion count.
int sort_sign(std::vector<int>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end());
  return inversions % 2 == 0 ? 1 : -1;
}

// Parity of the permutation sending from[k] to to[k], both listing the same values.
int shuffle_sign(const std::vector<int>& from, const std::vector<int>& to) {
  const int size = static_cast<int>(from.size());
  std::vector<int> target(size);
  for (int k = 0; k < size; ++k) {
    target[k] = static_cast<int>(std::find(from.begin(), from.end(), to[k]) - from.begin());
  }
  std::vector<bool> seen(size, false);
  int transpositions = 0;
  for (int start = 0; start < size; ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int k = start; !seen[k]; k = target[k]) {
      seen[k] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
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

void fill_standard(const YoungShape& shape, std::vector<std::vector<int>>& rows, int next,
                   std::vector<Tableau>& out) {
  if (next > shape.size()) {
    std::vector<std::vector<int>> columns(shape.num_columns());
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
    }
    out.emplace_back(std::move(columns));
    return;
  }
  for (int r = 0; r < shape.num_rows(); ++r) {
    const int filled = static_cast<int>(rows[r].size());
    if (filled == shape.rows()[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= filled) continue;
    rows[r].push_back(next);
    fill_standard(shape, rows, next + 1, out);
    rows[r].pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// YoungShape

YoungShape::YoungShape(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InputError("a Young shape needs at least one row");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] < 1) throw InputError("row lengths must be positive");
    if (r > 0 && rows_[r] > rows_[r - 1]) throw InputError("row lengths must be weakly decreasing");
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungShape YoungShape::rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("rectangle dimensions must be positive");
  return YoungShape(std::vector<int>(rows, cols));
}

std::vector<int> YoungShape::column_lengths() const {
  std::vector<int> lengths(num_columns(), 0);
  for (int len : rows_) {
    for (int c = 0; c < len; ++c) ++lengths[c];
  }
  return lengths;
}

YoungShape YoungShape::conjugate() const { return YoungShape(column_lengths()); }

std::string YoungShape::to_string() const { return detail::join_ints(rows_, ','); }

YoungShape parse_shape(std::string_view text) {
  return YoungShape(detail::parse_int_list(text, "shape"));
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<int>> columns)
    : shape_(YoungShape::rectangle(1, 1)), columns_(std::move(columns)) {
  if (columns_.empty()) throw InputError("a tableau needs at least one column");
  std::vector<int> lengths;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].empty()) throw InputError("tableau columns must be nonempty");
    if (c > 0 && columns_[c].size() > columns_[c - 1].size()) {
      throw InputError("tableau column lengths must be weakly decreasing");
    }
    lengths.push_back(static_cast<int>(columns_[c].size()));
    std::sort(columns_[c].begin(), columns_[c].end());
  }
  shape_ = YoungShape(lengths).conjugate();
  const int n = shape_.size();
  column_of_.assign(n + 1, -1);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (int entry : columns_[c]) {
      if (entry < 1 || entry > n || column_of_[entry] != -1) {
        throw InputError("tableau entries must be a permutation of 1.." + std::to_string(n));
      }
      column_of_[entry] = static_cast<int>(c);
    }
  }
}

int Tableau::column_of(int entry) const {
  if (entry < 1 || entry > size()) throw InputError("entry out of range");
  return column_of_[entry];
}

Tableau Tableau::canonical() const {
  auto columns = columns_;
  std::size_t begin = 0;
  while (begin < columns.size()) {
    std::size_t end = begin;
    while (end < columns.size() && columns[end].size() == columns[begin].size()) ++end;
    std::sort(columns.begin() + begin, columns.begin() + end,
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    begin = end;
  }
  return Tableau(std::move(columns));
}

bool Tableau::is_canonical() const {
  for (std::size_t c = 1; c < columns_.size(); ++c) {
    if (columns_[c].size() == columns_[c - 1].size() && columns_[c].front() < columns_[c - 1].front()) {
      return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += '|';
    out += detail::join_ints(columns_[c], ',');
  }
  return out;
}

Tableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> columns;
  for (std::string_view block : detail::split(text, '|')) {
    columns.push_back(detail::parse_int_list(block, "tableau entry"));
  }
  return Tableau(std::move(columns));
}

// ---------------------------------------------------------------------------
// Standardness and order

bool is_standard(const Tableau& t) { return descents(t).empty(); }

std::strong_ordering compare_tableaux(const Tableau& a, const Tableau& b) {
  if (!(a.shape() == b.shape())) throw InputError("cannot compare tableaux of different shapes");
  // Same column for every entry means identical tableaux, since columns are sorted.
  for (int entry = a.size(); entry >= 1; --entry) {
    const int ca = a.column_of(entry);
    const int cb = b.column_of(entry);
    if (ca != cb) return ca > cb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<Descent> descents(const Tableau& t) {
  std::vector<Descent> found;
  const auto& cols = t.columns();
  for (int row = 0; row < t.shape().num_rows(); ++row) {
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
      if (row < static_cast<int>(cols[c + 1].size()) && cols[c][row] > cols[c + 1][row]) {
        found.push_back({row, static_cast<int>(c)});
      }
    }
  }
  return found;
}

std::optional<Descent> first_descent(const Tableau& t) {
  const auto& cols = t.columns();
  for (int row = 0; row < t.shape().num_rows(); ++row) {
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
      if (row < static_cast<int>(cols[c + 1].size()) && cols[c][row] > cols[c + 1][row]) {
        return Descent{row, static_cast<int>(c)};
      }
    }
  }
  return std::nullopt;
}

GarnirChoice garnir_choice_at(const Tableau& t, const Descent& d) {
  const int left = static_cast<int>(t.columns().at(d.column).size());
  return GarnirChoice{d.column, left - d.row, d.row + 1};
}

// ---------------------------------------------------------------------------
// Garnir cosets

void validate_garnir_choice(const Tableau& t, const GarnirChoice& g) {
  const auto& cols = t.columns();
  if (g.column < 0 || g.column + 1 >= static_cast<int>(cols.size())) {
    throw InputError("Garnir column must have a right neighbour");
  }
  const int left = static_cast<int>(cols[g.column].size());
  const int right = static_cast<int>(cols[g.column + 1].size());
  if (g.x_count < 1 || g.x_count > left || g.y_count < 1 || g.y_count > right) {
    throw InputError("Garnir sets must be nonempty segments of their columns");
  }
  if (g.x_count + g.y_count <= left) {
    throw InputError("Garnir hypothesis violated: |X u Y| must exceed the column length");
  }
}

std::vector<SignedTableau> garnir_cosets(const Tableau& t, const GarnirChoice& g) {
  validate_garnir_choice(t, g);
  const auto& left = t.columns()[g.column];
  const auto& right = t.columns()[g.column + 1];
  const int keep_left = static_cast<int>(left.size()) - g.x_count;

  // Old contents of the X cells followed by the Y cells.
  std::vector<int> old_seq(left.begin() + keep_left, left.end());
  old_seq.insert(old_seq.end(), right.begin(), right.begin() + g.y_count);
  std::vector<int> pool = old_seq;
  std::sort(pool.begin(), pool.end());
  const int total = static_cast<int>(pool.size());

  auto build = [&](const std::vector<int>& new_x) -> SignedTableau {
    std::vector<int> new_seq = new_x;
    for (int v : pool) {
      if (!std::binary_search(new_x.begin(), new_x.end(), v)) new_seq.push_back(v);
    }
    int sign = shuffle_sign(old_seq, new_seq);

    auto columns = t.columns();
    auto& lcol = columns[g.column];
    auto& rcol = columns[g.column + 1];
    std::copy(new_seq.begin(), new_seq.begin() + g.x_count, lcol.begin() + keep_left);
    std::copy(new_seq.begin() + g.x_count, new_seq.end(), rcol.begin());
    sign *= sort_sign(lcol);
    sign *= sort_sign(rcol);
    return SignedTableau{sign, Tableau(std::move(columns))};
  };

  std::vector<int> old_x(old_seq.begin(), old_seq.begin() + g.x_count);
  std::sort(old_x.begin(), old_x.end());

  std::vector<SignedTableau> out;
  out.push_back(SignedTableau{1, t});
  std::vector<int> idx(g.x_count);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> new_x(g.x_count);
    for (int k = 0; k < g.x_count; ++k) new_x[k] = pool[idx[k]];
    if (new_x == old_x) continue;
    out.push_back(build(new_x));
  } while (next_combination(idx, total));
  return out;
}

// ---------------------------------------------------------------------------
// Counting and enumeration

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  BigInt out;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<std::vector<int>> hook_lengths(const YoungShape& shape) {
  const auto cols = shape.column_lengths();
  std::vector<std::vector<int>> hooks(shape.num_rows());
  for (int r = 0; r < shape.num_rows(); ++r) {
    for (int c = 0; c < shape.rows()[r]; ++c) {
      const int arm = shape.rows()[r] - c - 1;
      const int leg = cols[c] - r - 1;
      hooks[r].push_back(arm + leg + 1);
    }
  }
  return hooks;
}

BigInt hook_count(const YoungShape& shape) {
  BigInt denominator = 1;
  for (const auto& row : hook_lengths(shape)) {
    for (int h : row) denominator *= h;
  }
  const BigInt numerator = factorial(shape.size());
  if (numerator % denominator != 0) throw AlgorithmError("hook product does not divide n!");
  return numerator / denominator;
}

BigInt count_column_strict(const YoungShape& shape) {
  BigInt out = factorial(shape.size());
  for (int len : shape.column_lengths()) out /= factorial(len);
  return out;
}

std::vector<Tableau> enumerate_standard(const YoungShape& shape, int limit) {
  if (shape.size() > limit) {
    throw SizeError("shape has " + std::to_string(shape.size()) + " cells, above the enumeration limit " +
                    std::to_string(limit));
  }
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(shape.num_rows());
  fill_standard(shape, rows, 1, out);
  std::sort(out.begin(), out.end(), TableauLess{});
  return out;
}

}  // namespace trigonal
