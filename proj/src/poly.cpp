#include "trigonal/poly.hpp"

#include <algorithm>

#include "text_util.hpp"
#include "trigonal/errors.hpp"

namespace trigonal {

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<std::pair<int, int>> merged;
  for (const auto& [var, exp] : factors_) {
    if (var < 1) throw InputError("variable indices start at 1");
    if (exp < 0) throw InputError("negative exponent");
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += exp;
    } else {
      merged.emplace_back(var, exp);
    }
  }
  std::erase_if(merged, [](const auto& f) { return f.second == 0; });
  factors_ = std::move(merged);
  degree_ = 0;
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      f.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool GradedLexFirst::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i >= fb.size();
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw InputError("negative variable count");
}

SparsePoly SparsePoly::constant(int nvars, const BigInt& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 1 || index > nvars) throw InputError("variable index out of range");
  SparsePoly p(nvars);
  p.add_term(Monomial::variable(index), 1);
  return p;
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void SparsePoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  if (!m.factors().empty() && m.factors().back().first > nvars_) {
    throw InputError("monomial uses a variable outside l1..l" + std::to_string(nvars_));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::require_same_ring(const SparsePoly& q) const {
  if (nvars_ != q.nvars_) {
    throw InputError("polynomials over different variable counts: " + std::to_string(nvars_) + " vs " +
                     std::to_string(q.nvars_));
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
  require_same_ring(q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
  require_same_ring(q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& q) { return *this = multiply(*this, q); }

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) { return multiply(p, q); }

SparsePoly operator-(SparsePoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SparsePoly multiply(const SparsePoly& p, const SparsePoly& q, std::size_t max_terms) {
  if (p.nvars() != q.nvars()) {
    throw InputError("polynomials over different variable counts");
  }
  SparsePoly out(p.nvars());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      out.add_term(mp * mq, cp * cq);
      if (out.num_terms() > max_terms) {
        throw SizeError("polynomial product exceeds the term limit of " + std::to_string(max_terms) +
                        "; use randomized verification instead");
      }
    }
  }
  return out;
}

SparsePoly scale(SparsePoly p, const BigInt& c) {
  if (c == 0) return SparsePoly(p.nvars());
  SparsePoly out(p.nvars());
  for (const auto& [m, coeff] : p.terms()) out.add_term(m, coeff * c);
  return out;
}

SparsePoly power(const SparsePoly& p, int exponent, std::size_t max_terms) {
  if (exponent < 0) throw InputError("negative polynomial power");
  SparsePoly out = SparsePoly::constant(p.nvars(), 1);
  for (int k = 0; k < exponent; ++k) out = multiply(out, p, max_terms);
  return out;
}

SparsePoly diff_product(std::span<const int> indices, int nvars) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1 || indices[k] > nvars) throw InputError("variable index out of range");
    if (k > 0 && indices[k] <= indices[k - 1]) {
      throw InputError(indices[k] == indices[k - 1] ? "repeated index in difference product"
                                                    : "difference product indices must ascend");
    }
  }
  SparsePoly out = SparsePoly::constant(nvars, 1);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (std::size_t l = k + 1; l < indices.size(); ++l) {
      SparsePoly factor(nvars);
      factor.add_term(Monomial::variable(indices[k]), 1);
      factor.add_term(Monomial::variable(indices[l]), -1);
      out = multiply(out, factor);
    }
  }
  return out;
}

Rational evaluate(const SparsePoly& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(p.nvars()));
  }
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [var, exp] : m.factors()) {
      for (int e = 0; e < exp; ++e) term *= point[var - 1];
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += c > 0 ? '+' : '-';
    out += BigInt(abs(c)).get_str();
    for (const auto& [var, exp] : m.factors()) {
      out += "*l" + std::to_string(var) + '^' + std::to_string(exp);
    }
  }
  return out;
}

SparsePoly parse_poly(std::string_view text, int nvars) {
  SparsePoly p(nvars);
  text = detail::trim(text);
  if (text == "0") return p;
  if (text.empty()) throw InputError("empty polynomial text");
  for (std::string_view term : detail::split(text, ' ')) {
    if (term.empty()) continue;
    if (term.front() != '+' && term.front() != '-') throw InputError("term must start with a sign: " + std::string(term));
    const bool negative = term.front() == '-';
    term.remove_prefix(1);
    auto factors = detail::split(term, '*');
    BigInt coeff;
    if (factors.front().empty() || coeff.set_str(std::string(factors.front()), 10) != 0 || coeff <= 0) {
      throw InputError("malformed coefficient in term: " + std::string(term));
    }
    std::vector<std::pair<int, int>> powers;
    for (std::size_t k = 1; k < factors.size(); ++k) {
      std::string_view f = factors[k];
      if (f.size() < 2 || f.front() != 'l') throw InputError("malformed factor: " + std::string(f));
      f.remove_prefix(1);
      auto parts = detail::split(f, '^');
      if (parts.size() != 2) throw InputError("factor needs an exponent: " + std::string(factors[k]));
      const int var = detail::parse_int(parts[0], "variable index");
      const int exp = detail::parse_int(parts[1], "exponent");
      if (exp < 1) throw InputError("exponents must be positive");
      powers.emplace_back(var, exp);
    }
    p.add_term(Monomial(std::move(powers)), negative ? BigInt(-coeff) : coeff);
  }
  return p;
}

}  // namespace trigonal
