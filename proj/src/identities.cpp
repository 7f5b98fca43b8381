#include "hyperhelm/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/simd.hpp"
#include "hyperhelm/specfun.hpp"

namespace hyperhelm::identities {
namespace {

using cd = std::complex<double>;

// i^n
cd i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_dims(const sphere::CartesianPoint& a, const sphere::CartesianPoint& b, const char* what) {
  if (a.dim() != b.dim()) throw DomainError(std::string(what) + ": points of different dimension");
  if (a.dim() < 2) throw DomainError(std::string(what) + ": d must be >= 2");
}

// Per-degree sums Σ_m Y_n^m(θa) Y_n^m(θb) for n <= N.
std::vector<double> degree_sums(int d, int max_order, std::span<const double> theta_a, std::span<const double> theta_b) {
  const sphere::HarmonicBasis basis(d, max_order);
  const auto ya = basis.evaluate(theta_a);
  const auto yb = basis.evaluate(theta_b);
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    const std::size_t begin = basis.offset(n);
    const std::size_t len = (n < max_order ? basis.offset(n + 1) : basis.size()) - begin;
    out[static_cast<std::size_t>(n)] =
        simd::dot(std::span(ya).subspan(begin, len), std::span(yb).subspan(begin, len));
  }
  return out;
}

double distance(const sphere::CartesianPoint& a, const sphere::CartesianPoint& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    const double diff = a.x[i] - b.x[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

}  // namespace

IdentityReport make_report(cd lhs, cd rhs, std::map<std::string, double> parameters) {
  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max(std::abs(lhs), 1e-300);
  r.parameters = std::move(parameters);
  return r;
}

int truncation_order(double k, double radius) {
  if (!(k > 0.0) || !(radius >= 0.0)) throw DomainError("truncation_order: need k > 0 and radius >= 0");
  return static_cast<int>(std::ceil(std::numbers::e * k * radius / 2.0)) + 10;
}

double derivative_step(double k) {
  if (!(k > 0.0)) throw DomainError("derivative_step: k must be > 0");
  return 1e-5 * std::max(1.0, 1.0 / k);
}

IdentityReport funk_hecke(const Profile& phi, const sphere::HarmonicIndex& idx, std::span<const double> dir,
                          const sphere::QuadratureRule& rule, int gl_nodes) {
  const int d = idx.dim();
  if (d == 2) throw DomainError("funk_hecke: unsupported for d=2");
  if (rule.d != d) throw DomainError("funk_hecke: quadrature rule dimension does not match the harmonic");
  if (static_cast<int>(dir.size()) != d - 1) throw DomainError("funk_hecke: direction needs d - 1 angles");
  if (gl_nodes < 1) throw DomainError("funk_hecke: gl_nodes must be >= 1");

  const sphere::CartesianPoint u =
      sphere::polar_to_cartesian(sphere::PolarPoint{1.0, std::vector<double>(dir.begin(), dir.end())});
  const std::size_t count = rule.nodes.size();
  std::vector<cd> values(count);
  const sphere::HarmonicFunction y(idx);
  for (std::size_t j = 0; j < count; ++j) {
    double t = 0.0;
    for (int i = 0; i < d; ++i) t += rule.directions[static_cast<std::size_t>(i) * count + j] * u.x[static_cast<std::size_t>(i)];
    t = std::clamp(t, -1.0, 1.0);
    values[j] = phi(t) * y(rule.nodes[j].theta);
  }
  const cd lhs = sphere::integrate_values(values, rule);

  const int n = idx.n;
  const double lambda = 0.5 * (d - 2);
  const sphere::GaussRule g = sphere::gauss_jacobi(gl_nodes, 0.5 * (d - 3));
  cd integral = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    integral += g.weights[i] * specfun::gegenbauer(n, lambda, g.nodes[i]) * phi(g.nodes[i]);
  }
  const double constant = std::exp(specfun::log_gamma(n + 1.0) + specfun::log_gamma(d - 2.0) -
                                   specfun::log_gamma(n + d - 2.0)) *
                          sphere::surface_measure(d - 1);
  const cd rhs = constant * sphere::eval_harmonic(idx, dir) * integral;
  return make_report(lhs, rhs,
                     {{"d", d},
                      {"n", n},
                      {"m", static_cast<double>(idx.m)},
                      {"gl_nodes", gl_nodes},
                      {"points", static_cast<double>(count)}});
}

IdentityReport gegenbauer_bessel(double nu, int n, double x, int gl_nodes) {
  if (!(nu > 0.0)) throw DomainError("gegenbauer_bessel: nu must be > 0");
  if (n < 0) throw DomainError("gegenbauer_bessel: n must be >= 0");
  if (!(x > 0.0)) throw DomainError("gegenbauer_bessel: x must be > 0");
  if (gl_nodes < x + n + 10) {
    throw DomainError("gegenbauer_bessel: gl_nodes must be >= x + n + 10 (got " + std::to_string(gl_nodes) + ")");
  }
  const sphere::GaussRule g = sphere::gauss_jacobi(gl_nodes, nu - 0.5);
  // C_n^ν is orthogonal to every polynomial of degree < n, so for small x the
  // Taylor polynomial of e^{ixt} up to degree n-1 is dropped to avoid
  // cancelling O(1) terms against an O(x^n) result.
  const bool use_tail = n >= 1 && x <= 2.0;
  cd integral = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double t = g.nodes[i];
    cd e;
    if (use_tail) {
      const cd ixt(0.0, x * t);
      cd term = 1.0;
      for (int j = 1; j <= n; ++j) term *= ixt / static_cast<double>(j);
      e = term;
      for (int j = n + 1; j < n + 60; ++j) {
        term *= ixt / static_cast<double>(j);
        e += term;
        if (std::abs(term) <= 1e-18 * std::abs(e)) break;
      }
    } else {
      e = {std::cos(x * t), std::sin(x * t)};
    }
    integral += g.weights[i] * specfun::gegenbauer(n, nu, t) * e;
  }
  const double constant = std::exp(specfun::log_gamma(2.0 * nu) + specfun::log_gamma(n + 1.0) -
                                   specfun::log_gamma(nu + 0.5) - specfun::log_gamma(2.0 * nu + n)) *
                          std::pow(0.5 * x, nu) / std::sqrt(std::numbers::pi);
  const cd rhs = i_pow(-n) * constant * integral;
  const cd lhs = specfun::bessel_j(nu + n, x);
  return make_report(lhs, rhs, {{"nu", nu}, {"n", n}, {"x", x}, {"gl_nodes", gl_nodes}});
}

cd plane_wave_truncated(const sphere::CartesianPoint& kvec, const sphere::CartesianPoint& r, int max_order) {
  check_dims(kvec, r, "plane_wave_truncated");
  if (max_order < 0) throw DomainError("plane_wave_truncated: N must be >= 0");
  const double k = kvec.norm();
  if (k == 0.0) throw DomainError("plane_wave_truncated: kvec must be nonzero");
  const int d = r.dim();
  const sphere::PolarPoint pk = sphere::cartesian_to_polar(kvec);
  const sphere::PolarPoint pr = sphere::cartesian_to_polar(r);
  const auto sums = degree_sums(d, max_order, pk.theta, pr.theta);
  cd total = 0.0;
  for (int n = max_order; n >= 0; --n) {
    total += i_pow(n) * (specfun::hyper_j(specfun::RadialOrder(d, n), k * pr.r) * sums[static_cast<std::size_t>(n)]);
  }
  return total;
}

IdentityReport addition_theorem(int d, double k, const sphere::CartesianPoint& r, const sphere::CartesianPoint& rp,
                                int max_order) {
  check_dims(r, rp, "addition_theorem");
  if (r.dim() != d) throw DomainError("addition_theorem: points must have dimension d");
  if (!(k > 0.0)) throw DomainError("addition_theorem: k must be > 0");
  if (max_order < 0) throw DomainError("addition_theorem: N must be >= 0");
  const sphere::PolarPoint a = sphere::cartesian_to_polar(r);
  const sphere::PolarPoint b = sphere::cartesian_to_polar(rp);
  const auto sums = degree_sums(d, max_order, a.theta, b.theta);
  double rhs = 0.0;
  for (int n = max_order; n >= 0; --n) {
    const specfun::RadialOrder ord(d, n);
    rhs += specfun::hyper_j(ord, k * a.r) * specfun::hyper_j(ord, k * b.r) * sums[static_cast<std::size_t>(n)];
  }
  const double lhs = specfun::hyper_j(specfun::RadialOrder(d, 0), k * distance(r, rp));
  return make_report(lhs, rhs, {{"d", d}, {"k", k}, {"N", max_order}, {"r", a.r}, {"rp", b.r}});
}

cd helmholtz_residual(const Field& field, double k, const sphere::CartesianPoint& x, double h) {
  if (!(h > 0.0)) throw DomainError("helmholtz_residual: h must be > 0");
  const cd f0 = field(x);
  cd lap = 0.0;
  sphere::CartesianPoint y = x;
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    y.x[i] = x.x[i] + h;
    const cd fp = field(y);
    y.x[i] = x.x[i] - h;
    const cd fm = field(y);
    y.x[i] = x.x[i];
    lap += (fp - 2.0 * f0 + fm) / (h * h);
  }
  return lap + k * k * f0;
}

cd radiation_remainder(int d, int n, double k, double r, HankelKind kind) {
  if (!(r > 0.0)) throw DomainError("radiation_remainder: r must be > 0");
  const specfun::RadialOrder ord(d, n);
  const auto hankel = [&](double radius) {
    return kind == HankelKind::kFirst ? specfun::hyper_h1(ord, k * radius) : specfun::hyper_h2(ord, k * radius);
  };
  const double h = std::min(derivative_step(k), 0.25 * r);
  const cd dh = (hankel(r + h) - hankel(r - h)) / (2.0 * h);
  return std::pow(r, 0.5 * (d - 1)) * (dh - cd(0.0, k) * hankel(r));
}

}  // namespace hyperhelm::identities
