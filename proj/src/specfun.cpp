#include "hyperhelm/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperhelm/errors.hpp"

namespace hyperhelm::specfun {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Largest x with finite Γ(x).
constexpr double kGammaMax = 171.6243769563027;

void check_argument(double z, bool allow_zero, const char* fn) {
  if (!std::isfinite(z) || z < 0.0 || (!allow_zero && z == 0.0)) {
    throw DomainError(std::string(fn) + (allow_zero ? ": argument must be finite and >= 0"
                                                    : ": argument must be finite and > 0 (singular at z = 0)"));
  }
}

}  // namespace

RadialOrder::RadialOrder(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw DomainError("RadialOrder: dimension must be >= 2, got " + std::to_string(d));
  if (n < 0) throw DomainError("RadialOrder: order must be >= 0, got " + std::to_string(n));
}

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("gamma: argument must be finite and > 0");
  if (x > kGammaMax) throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("log_gamma: argument must be finite and > 0");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double gegenbauer(int n, double lambda, double t) {
  if (n < 0) throw DomainError("gegenbauer: degree must be >= 0");
  if (!(lambda > -0.5) || lambda == 0.0 || !std::isfinite(lambda)) {
    throw DomainError("gegenbauer: parameter must satisfy lambda > -1/2, lambda != 0");
  }
  if (!std::isfinite(t)) throw DomainError("gegenbauer: argument must be finite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hyper_j(const RadialOrder& ord, double z) {
  check_argument(z, true, "hyper_j");
  const double nu = ord.nu();
  const double half_d = 0.5 * ord.d();
  if (z == 0.0) {
    return ord.n() == 0 ? 2.0 * std::pow(std::numbers::pi, half_d) / std::tgamma(half_d) : 0.0;
  }
  if (z * z <= nu + 1.0) {
    // (2π)^{d/2} z^n 2^{-ν} / Γ(ν+1) · Σ_j (-z²/4)^j / (j! (ν+1)_j); no z^{1-d/2} division.
    const double q = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < 200; ++j) {
      term *= -q / (j * (nu + j));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    double prefactor = 0.0;
    if (nu < 150.0) {
      prefactor = std::pow(kTwoPi, half_d) * std::pow(z, ord.n()) /
                  (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
    } else {
      prefactor = std::exp(half_d * std::log(kTwoPi) + ord.n() * std::log(z) -
                           nu * std::numbers::ln2 - log_gamma(nu + 1.0));
    }
    return prefactor * sum;
  }
  return std::pow(kTwoPi, half_d) * bessel_j(nu, z) / std::pow(z, half_d - 1.0);
}

double hyper_n(const RadialOrder& ord, double z) {
  check_argument(z, false, "hyper_n");
  const double half_d = 0.5 * ord.d();
  const double value = std::pow(kTwoPi, half_d) * (bessel_n(ord.nu(), z) / std::pow(z, half_d - 1.0));
  if (!std::isfinite(value)) throw OverflowError("hyper_n: result overflows double precision");
  return value;
}

std::complex<double> hyper_h1(const RadialOrder& ord, double z) {
  check_argument(z, false, "hyper_h1");
  return {hyper_j(ord, z), hyper_n(ord, z)};
}

std::complex<double> hyper_h2(const RadialOrder& ord, double z) {
  check_argument(z, false, "hyper_h2");
  return {hyper_j(ord, z), -hyper_n(ord, z)};
}

}  // namespace hyperhelm::specfun
