// Cylindrical Bessel functions of real order.
//
// J_ν: ascending series where it converges without cancellation
// (z^2 <= ν + 1), otherwise Miller's backward recurrence started well past
// the turning point. The unnormalized sequence is scaled by the closed-form
// J_{±1/2} for half-integer orders and by the Neumann sum
//   (z/2)^μ = Σ_k (μ + 2k) Γ(μ + k) / k! · J_{μ+2k}(z)
// for every other fractional part μ.
//
// N_ν: closed-form seeds and forward recurrence for half-integer orders;
// Temme's series (z < 2) or Steed's continued fractions (z >= 2) for the
// seeds N_μ, N_{μ+1} otherwise, followed by forward recurrence.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/specfun.hpp"

namespace hyperhelm::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr double kRescale = 1e250;

bool is_half_integer(double nu) {
  const double twice = 2.0 * nu;
  return twice == std::floor(twice) && std::fmod(twice, 2.0) == 1.0;
}

void check_order(double nu, const char* fn) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError(std::string(fn) + ": order must be finite and >= 0");
  }
}

// (z/2)^ν / Γ(ν + 1)
double series_prefactor(double nu, double z) {
  if (nu < 150.0) {
    return std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
  }
  return std::exp(nu * std::log(0.5 * z) - log_gamma(nu + 1.0));
}

// Σ_j (-z²/4)^j / (j! (ν+1)_j)
double ascending_sum(double nu, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < 500; ++j) {
    term *= -q / (j * (nu + j));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double j_miller(double nu, double z) {
  const double mu = nu - std::floor(nu);
  const int m = static_cast<int>(std::floor(nu));
  const double reach = std::max(nu, z);
  const int top = std::max(m, static_cast<int>(std::ceil(z))) + 15 +
                  static_cast<int>(std::ceil(13.0 * std::cbrt(reach)));

  const bool half = mu == 0.5;
  std::vector<double> weights;
  if (!half) {
    // w_0 = Γ(1+μ); w_k = (μ+2k) Γ(μ+k)/k!
    weights.resize(static_cast<std::size_t>(top / 2) + 1);
    const double g1 = std::tgamma(1.0 + mu);
    weights[0] = g1;
    double g = g1;
    for (std::size_t k = 1; k < weights.size(); ++k) {
      if (k > 1) g *= (mu + static_cast<double>(k) - 1.0) / static_cast<double>(k);
      weights[k] = (mu + 2.0 * static_cast<double>(k)) * g;
    }
  }

  double f_next = 0.0;  // order mu + j + 1
  double f = 1e-30;     // order mu + j
  double at_nu = 0.0;
  double sum = 0.0;
  for (int j = top; j >= 1; --j) {
    if (j == m) at_nu = f;
    if (!half && j % 2 == 0) sum += weights[static_cast<std::size_t>(j / 2)] * f;
    const double f_prev = 2.0 * (mu + j) / z * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > kRescale) {
      f /= kRescale;
      f_next /= kRescale;
      at_nu /= kRescale;
      sum /= kRescale;
    }
  }
  // f is now the unnormalized J_μ, f_next J_{μ+1}.
  if (m == 0) at_nu = f;

  if (half) {
    // J_{-1/2} from one more downward step; normalize against whichever of
    // sin z, cos z is larger.
    const double f_minus = 2.0 * mu / z * f - f_next;
    const double amp = std::sqrt(2.0 / (kPi * z));
    const double s = std::sin(z);
    const double c = std::cos(z);
    if (std::abs(s) >= std::abs(c)) return at_nu * (amp * s / f);
    return at_nu * (amp * c / f_minus);
  }
  sum += weights[0] * f;
  return at_nu * (std::pow(0.5 * z, mu) / sum);
}

double n_half_integer(double nu, double z) {
  const double amp = std::sqrt(2.0 / (kPi * z));
  const double s = std::sin(z);
  const double c = std::cos(z);
  double lower = -amp * c;              // N_{1/2}
  if (nu == 0.5) return lower;
  double upper = -amp * (c / z + s);    // N_{3/2}
  for (double order = 1.5; order < nu; order += 1.0) {
    const double next = 2.0 * order / z * upper - lower;
    lower = upper;
    upper = next;
  }
  return upper;
}

// 1/Γ(1±μ) and Temme's γ1, γ2 for |μ| <= 1/2.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;  // 1/Γ(1+μ)
  double gammi;  // 1/Γ(1-μ)
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  g.gampl = 1.0 / std::tgamma(1.0 + mu);
  g.gammi = 1.0 / std::tgamma(1.0 - mu);
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  if (std::abs(mu) > 1e-3) {
    g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
  } else {
    // Taylor coefficients of 1/Γ(1+x): 1 + γx + c3 x² + c4 x³ + ...
    constexpr double kC4 = -0.0420026350340952355;
    g.gam1 = -std::numbers::egamma - kC4 * mu * mu;
  }
  return g;
}

double n_temme_steed(double nu, double x) {
  const int nl = x < 2.0 ? static_cast<int>(nu + 0.5)
                         : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const int max_iter = std::max(10000, static_cast<int>(20.0 * x));

  double y_mu = 0.0;
  double y_mu1 = 0.0;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = 2.0 / kPi * fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    e = std::exp(e);
    double p = e / (g.gampl * kPi);
    double q = 1.0 / (e * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;
    double c = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    for (int i = 1; i <= max_iter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
      c *= d / i;
      p /= i - mu;
      q /= i + mu;
      const double del = c * (ff + r * q);
      sum += del;
      sum1 += c * p - i * del;
      if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
    }
    y_mu = -sum;
    y_mu1 = -sum1 * xi2;
  } else {
    // CF1: J'_ν/J_ν, then recur down to μ keeping track of the sign.
    int isign = 1;
    double h = std::max(nu * xi, kFpMin);
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int i = 1;
    for (; i <= max_iter; ++i) {
      b += xi2;
      d = b - d;
      if (std::abs(d) < kFpMin) d = kFpMin;
      c = b - 1.0 / c;
      if (std::abs(c) < kFpMin) c = kFpMin;
      d = 1.0 / d;
      const double del = c * d;
      h *= del;
      if (d < 0.0) isign = -isign;
      if (std::abs(del - 1.0) < kEps) break;
    }
    if (i > max_iter) throw DomainError("bessel_n: continued fraction did not converge");
    double rjl = isign * kFpMin;
    double rjpl = h * rjl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
      const double rjtemp = fact * rjl + rjpl;
      fact -= xi;
      rjpl = fact * rjtemp - rjl;
      rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;

    // CF2: p + iq by Steed's method.
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for (i = 2; i <= max_iter; ++i) {
      a += 2 * (i - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
    }
    if (i > max_iter) throw DomainError("bessel_n: continued fraction did not converge");
    const double w = xi2 / kPi;
    const double gam = (p - f) / q;
    double j_mu = std::sqrt(w / ((p - f) * gam + q));
    j_mu = std::copysign(j_mu, rjl);
    y_mu = j_mu * gam;
    const double y_mu_prime = y_mu * (p + q / gam);
    y_mu1 = mu * xi * y_mu - y_mu_prime;
  }

  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * y_mu1 - y_mu;
    y_mu = y_mu1;
    y_mu1 = next;
  }
  return y_mu;
}

}  // namespace

double bessel_j(double nu, double z) {
  check_order(nu, "bessel_j");
  if (!std::isfinite(z) || z < 0.0) throw DomainError("bessel_j: argument must be finite and >= 0");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (z * z <= nu + 1.0) return series_prefactor(nu, z) * ascending_sum(nu, z);
  return j_miller(nu, z);
}

double bessel_n(double nu, double z) {
  check_order(nu, "bessel_n");
  if (!std::isfinite(z) || z < 0.0) throw DomainError("bessel_n: argument must be finite and > 0");
  if (z == 0.0) throw DomainError("bessel_n: singular at z = 0");
  const double value = is_half_integer(nu) ? n_half_integer(nu, z) : n_temme_steed(nu, z);
  if (!std::isfinite(value)) throw OverflowError("bessel_n: result overflows double precision");
  return value;
}

}  // namespace hyperhelm::specfun
