#ifndef TRIGONAL_THETA_HPP
#define TRIGONAL_THETA_HPP

// Theta constants with rational characteristics on the Siegel upper
// half-space, evaluated by a truncated lattice sum
//
//   theta[eps; eps'](tau) = sum_{l in Z^g} exp 2 pi i { 1/2 x^T tau x + x^T eps'/2 },
//   x = l + eps/2,
//
// and the alternating cubic sum over order-3 shifts of an odd integral
// characteristic, which vanishes for every tau.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <gmpxx.h>

#include "trigonal/errors.hpp"

namespace trigonal {

using Rational = mpq_class;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetric complex g x g matrix with positive-definite imaginary part.
template <typename Scalar = double>
class SiegelMatrix {
 public:
  using Complex = std::complex<Scalar>;

  explicit SiegelMatrix(ComplexMatrix<Scalar> tau) : tau_(std::move(tau)) {
    if (tau_.rows() == 0 || tau_.rows() != tau_.cols()) throw InputError("tau must be a nonempty square matrix");
    for (Eigen::Index i = 0; i < tau_.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < tau_.cols(); ++j) {
        if (tau_(i, j) != tau_(j, i)) throw InputError("tau must be symmetric");
      }
    }
    if (!tau_.allFinite()) throw InputError("tau has non-finite entries");
    const RealMatrix<Scalar> im = imag();
    Eigen::LLT<RealMatrix<Scalar>> llt(im);
    if (llt.info() != Eigen::Success) throw InputError("Im(tau) must be positive definite");
    Eigen::SelfAdjointEigenSolver<RealMatrix<Scalar>> eig(im, Eigen::EigenvaluesOnly);
    min_eigenvalue_ = eig.eigenvalues().minCoeff();
    if (!(min_eigenvalue_ > 0)) throw InputError("Im(tau) must be positive definite");
  }

  static SiegelMatrix from_parts(const RealMatrix<Scalar>& re, const RealMatrix<Scalar>& im) {
    if (re.rows() != im.rows() || re.cols() != im.cols()) throw InputError("real and imaginary parts differ in size");
    ComplexMatrix<Scalar> tau(re.rows(), re.cols());
    for (Eigen::Index i = 0; i < re.rows(); ++i) {
      for (Eigen::Index j = 0; j < re.cols(); ++j) tau(i, j) = Complex(re(i, j), im(i, j));
    }
    return SiegelMatrix(std::move(tau));
  }

  Eigen::Index genus() const noexcept { return tau_.rows(); }
  const ComplexMatrix<Scalar>& matrix() const noexcept { return tau_; }
  RealMatrix<Scalar> real() const { return tau_.real(); }
  RealMatrix<Scalar> imag() const { return tau_.imag(); }
  /// Smallest eigenvalue of Im(tau); drives the truncation radius.
  Scalar min_imag_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  ComplexMatrix<Scalar> tau_;
  Scalar min_eigenvalue_{};
};

/// Deterministic test point: Re(tau) symmetric with entries in [-1/2, 1/2],
/// Im(tau) = M^T M + im_floor * I with M uniform in [-1, 1].
template <typename Scalar = double>
SiegelMatrix<Scalar> random_siegel(Eigen::Index g, std::uint64_t seed, Scalar im_floor = 1) {
  if (g < 1) throw InputError("genus must be positive");
  if (!(im_floor > 0)) throw InputError("im_floor must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  RealMatrix<Scalar> re(g, g);
  RealMatrix<Scalar> m(g, g);
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = i; j < g; ++j) re(i, j) = re(j, i) = Scalar(0.5 * unit(rng));
  }
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) m(i, j) = Scalar(unit(rng));
  }
  RealMatrix<Scalar> im = m.transpose() * m;
  im = (im + im.transpose().eval()) / Scalar(2);
  im.diagonal().array() += im_floor;
  return SiegelMatrix<Scalar>::from_parts(re, im);
}

/// A characteristic [eps; eps'] with exact rational entries.
struct RationalCharacteristic {
  std::vector<Rational> eps;
  std::vector<Rational> epsp;

  RationalCharacteristic(std::vector<Rational> eps_, std::vector<Rational> epsp_);

  int genus() const noexcept { return static_cast<int>(eps.size()); }
  bool is_integral() const;
};

/// Integer entries with sum eps_i eps'_i odd.
bool is_odd_integral(const RationalCharacteristic& ch);

/// Parses "1,0" or "1/3,-2/3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Every characteristic with entries in {0, 1} of odd parity, in binary order.
std::vector<RationalCharacteristic> odd_integral_characteristics(int g);

template <typename Scalar>
Scalar to_scalar(const Rational& q) {
  return Scalar(q.get_num().get_d()) / Scalar(q.get_den().get_d());
}

struct ThetaOptions {
  /// Upper bound on the lattice box at the doubled radius.
  std::size_t max_terms = 20'000'000;
  bool check_doubling = true;
};

template <typename Scalar>
struct ThetaResult {
  std::complex<Scalar> value;
  Scalar radius{};
  std::size_t terms = 0;
  /// |value(radius) - value(2 radius)|, NaN when not checked.
  Scalar doubling_delta = std::numeric_limits<Scalar>::quiet_NaN();
};

/// Upper bound for sum over |x| > radius of exp(-pi lambda |x|^2), x in a
/// shifted copy of Z^g. Points with k <= |x| < k + 1 number at most (2k + 3)^g.
template <typename Scalar>
Scalar tail_bound(Eigen::Index g, Scalar lambda, Scalar radius) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar total = 0;
  for (long k = static_cast<long>(std::floor(radius));; ++k) {
    const Scalar r = std::max(Scalar(k), radius);
    const Scalar term = std::pow(Scalar(2 * k + 3), Scalar(g)) * std::exp(-pi * lambda * r * r);
    total += term;
    if (Scalar(k) > radius + 1 && term < total * std::numeric_limits<Scalar>::epsilon()) break;
    if (k > 100000) break;
  }
  return total;
}

/// Smallest radius on a 1/8 grid whose tail bound is below tol.
template <typename Scalar>
Scalar truncation_radius(Eigen::Index g, Scalar lambda, Scalar tol) {
  Scalar radius = Scalar(0.5);
  while (tail_bound(g, lambda, radius) >= tol) {
    radius += Scalar(0.125);
    if (radius > Scalar(1e6)) throw ToleranceError("tolerance unreachable: Im(tau) too close to singular");
  }
  return radius;
}

namespace detail {

template <typename Scalar>
std::size_t box_size(const RealVector<Scalar>& shift, Scalar radius) {
  double count = 1;
  for (Eigen::Index j = 0; j < shift.size(); ++j) {
    count *= std::floor(radius - shift(j)) - std::ceil(-radius - shift(j)) + 1;
  }
  return count > 1e18 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(count);
}

/// Sum over x = l + shift with |x| <= radius, in order of |x|^2 then l.
template <typename Scalar>
std::complex<Scalar> lattice_sum(const RealVector<Scalar>& shift, const RealVector<Scalar>& half_epsp,
                                 const RealMatrix<Scalar>& re, const RealMatrix<Scalar>& im, Scalar radius,
                                 std::size_t& terms) {
  const Eigen::Index g = shift.size();
  std::vector<long> lo(g), hi(g);
  for (Eigen::Index j = 0; j < g; ++j) {
    lo[j] = static_cast<long>(std::ceil(-radius - shift(j)));
    hi[j] = static_cast<long>(std::floor(radius - shift(j)));
    if (hi[j] < lo[j]) return {};
  }

  struct Point {
    Scalar norm2;
    std::vector<long> l;
  };
  std::vector<Point> points;
  std::vector<long> l = lo;
  const Scalar r2 = radius * radius;
  while (true) {
    Scalar norm2 = 0;
    for (Eigen::Index j = 0; j < g; ++j) {
      const Scalar x = Scalar(l[j]) + shift(j);
      norm2 += x * x;
    }
    if (norm2 <= r2) points.push_back({norm2, l});
    Eigen::Index j = 0;
    while (j < g && l[j] == hi[j]) l[j] = lo[j], ++j;
    if (j == g) break;
    ++l[j];
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.norm2 != b.norm2 ? a.norm2 < b.norm2 : a.l < b.l;
  });

  const Scalar pi = std::numbers::pi_v<Scalar>;
  std::complex<Scalar> sum = 0;
  RealVector<Scalar> x(g);
  for (const auto& p : points) {
    for (Eigen::Index j = 0; j < g; ++j) x(j) = Scalar(p.l[j]) + shift(j);
    const Scalar decay = x.dot(im * x);
    // Phase in units of pi, reduced mod 2 before scaling.
    Scalar turns = x.dot(re * x) + Scalar(2) * x.dot(half_epsp);
    turns -= Scalar(2) * std::round(turns / Scalar(2));
    sum += std::exp(-pi * decay) * std::complex<Scalar>(std::cos(pi * turns), std::sin(pi * turns));
  }
  terms = points.size();
  return sum;
}

}  // namespace detail

/// Truncated theta constant with absolute tail error below `tol`.
/// Throws ToleranceError if the lattice box would exceed the term budget.
template <typename Scalar>
ThetaResult<Scalar> theta_const(const RationalCharacteristic& ch, const SiegelMatrix<Scalar>& tau, Scalar tol,
                                const ThetaOptions& options = {}) {
  const Eigen::Index g = tau.genus();
  if (ch.genus() != g) throw InputError("characteristic length does not match the genus of tau");
  if (!(tol > 0 && tol < 1)) throw InputError("tol must lie in (0, 1)");

  RealVector<Scalar> shift(g), half_epsp(g);
  for (Eigen::Index j = 0; j < g; ++j) {
    shift(j) = to_scalar<Scalar>(ch.eps[j] / 2);
    half_epsp(j) = to_scalar<Scalar>(ch.epsp[j] / 2);
  }

  ThetaResult<Scalar> out;
  out.radius = truncation_radius(g, tau.min_imag_eigenvalue(), tol);
  const Scalar widest = options.check_doubling ? 2 * out.radius : out.radius;
  if (detail::box_size(shift, widest) > options.max_terms) {
    throw ToleranceError("tolerance " + std::to_string(static_cast<double>(tol)) +
                         " needs more than " + std::to_string(options.max_terms) + " lattice terms");
  }
  const RealMatrix<Scalar> re = tau.real();
  const RealMatrix<Scalar> im = tau.imag();
  out.value = detail::lattice_sum(shift, half_epsp, re, im, out.radius, out.terms);
  if (options.check_doubling) {
    std::size_t wide_terms = 0;
    const auto wide = detail::lattice_sum(shift, half_epsp, re, im, widest, wide_terms);
    out.doubling_delta = std::abs(wide - out.value);
  }
  return out;
}

enum class NuRange { kZeroToTwo = 2, kZeroToThree = 3 };

template <typename Scalar>
struct KopeliovichResult {
  std::complex<Scalar> residual;
  std::size_t theta_evaluations = 0;
  Scalar max_term = 0;
  Scalar max_doubling_delta = 0;
};

/// sum over nu in {0..top}^g of (-1)^{mu . nu} theta[mu; mu' + 2 nu / 3](tau)^3
/// for an integral characteristic [mu; mu'].
template <typename Scalar>
KopeliovichResult<Scalar> kopeliovich_sum(const RationalCharacteristic& mu, const SiegelMatrix<Scalar>& tau,
                                          NuRange range, Scalar tol, const ThetaOptions& options = {}) {
  if (!mu.is_integral()) throw InputError("the cubic identity needs an integral characteristic");
  const int g = mu.genus();
  if (g != tau.genus()) throw InputError("characteristic length does not match the genus of tau");
  const int top = static_cast<int>(range);

  KopeliovichResult<Scalar> out;
  std::vector<int> nu(g, 0);
  while (true) {
    std::vector<Rational> shifted = mu.epsp;
    long parity = 0;
    for (int i = 0; i < g; ++i) {
      shifted[i] += Rational(2 * nu[i], 3);
      parity += mu.eps[i].get_num().get_si() * nu[i];
    }
    const auto theta = theta_const(RationalCharacteristic(mu.eps, shifted), tau, tol, options);
    const auto cube = theta.value * theta.value * theta.value;
    out.residual += ((parity % 2 + 2) % 2 == 0 ? Scalar(1) : Scalar(-1)) * cube;
    out.max_term = std::max(out.max_term, std::abs(cube));
    if (options.check_doubling) out.max_doubling_delta = std::max(out.max_doubling_delta, theta.doubling_delta);
    ++out.theta_evaluations;

    int i = 0;
    while (i < g && nu[i] == top) nu[i++] = 0;
    if (i == g) break;
    ++nu[i];
  }
  return out;
}

}  // namespace trigonal

#endif  // TRIGONAL_THETA_HPP
