#include "trigonal/theta.hpp"

#include "text_util.hpp"

namespace trigonal {

RationalCharacteristic::RationalCharacteristic(std::vector<Rational> eps_, std::vector<Rational> epsp_)
    : eps(std::move(eps_)), epsp(std::move(epsp_)) {
  if (eps.empty() || eps.size() != epsp.size()) {
    throw InputError("characteristic halves must be nonempty and of equal length");
  }
  for (auto& q : eps) q.canonicalize();
  for (auto& q : epsp) q.canonicalize();
}

bool RationalCharacteristic::is_integral() const {
  for (const auto& q : eps) {
    if (q.get_den() != 1) return false;
  }
  for (const auto& q : epsp) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

bool is_odd_integral(const RationalCharacteristic& ch) {
  if (!ch.is_integral()) return false;
  mpz_class dot = 0;
  for (int i = 0; i < ch.genus(); ++i) dot += ch.eps[i].get_num() * ch.epsp[i].get_num();
  return mpz_odd_p(dot.get_mpz_t()) != 0;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (std::string_view part : detail::split(text, ',')) {
    part = detail::trim(part);
    Rational q;
    const bool sane = !part.empty() && part.find_first_not_of("+-0123456789/") == std::string_view::npos;
    if (!sane || q.set_str(std::string(part), 10) != 0 || q.get_den() == 0) {
      throw InputError("malformed rational: '" + std::string(part) + "'");
    }
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::vector<RationalCharacteristic> odd_integral_characteristics(int g) {
  if (g < 1 || g > 16) throw InputError("genus out of range");
  std::vector<RationalCharacteristic> out;
  for (unsigned bits = 0; bits < (1u << (2 * g)); ++bits) {
    std::vector<Rational> eps(g), epsp(g);
    for (int i = 0; i < g; ++i) {
      eps[i] = (bits >> i) & 1u;
      epsp[i] = (bits >> (g + i)) & 1u;
    }
    RationalCharacteristic ch(std::move(eps), std::move(epsp));
    if (is_odd_integral(ch)) out.push_back(std::move(ch));
  }
  return out;
}

}  // namespace trigonal
