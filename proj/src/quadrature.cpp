#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/simd.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"

namespace hyperhelm::sphere {
namespace {

// Off-diagonal of the Jacobi matrix for the weight (1 - t²)^alpha:
// β_k = k (k + 2α) / ((2k + 2α + 1)(2k + 2α - 1)).
double beta(int k, double alpha) {
  if (k == 1) return 1.0 / (2.0 * alpha + 3.0);
  const double s = 2.0 * k + 2.0 * alpha;
  return k * (k + 2.0 * alpha) / ((s + 1.0) * (s - 1.0));
}

}  // namespace

GaussRule gauss_jacobi(int count, double alpha) {
  if (count < 1) throw DomainError("gauss_jacobi: count must be >= 1");
  if (!(alpha > -1.0)) throw DomainError("gauss_jacobi: alpha must be > -1");
  const double mu0 =
      std::sqrt(std::numbers::pi) * std::exp(specfun::log_gamma(alpha + 1.0) - specfun::log_gamma(alpha + 1.5));
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> off(n, 0.0);  // off[k] = sqrt(β_k), k = 1..n-1
  for (int k = 1; k < count; ++k) off[static_cast<std::size_t>(k)] = std::sqrt(beta(k, alpha));

  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  if (count == 1) {
    rule.weights[0] = mu0;
    return rule;
  }

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub(count - 1);
  for (int k = 1; k < count; ++k) sub[k - 1] = off[static_cast<std::size_t>(k)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw SingularSystemError("gauss_jacobi: eigen-solver failed");

  // Orthonormal polynomials p_0..p_{count} at t; returns p_count and fills
  // sum = Σ_{k<count} p_k².
  const auto orthonormal = [&](double t, double& sum, double& deriv) {
    double prev = 0.0;
    double cur = 1.0 / std::sqrt(mu0);
    double dprev = 0.0;
    double dcur = 0.0;
    sum = 0.0;
    for (int k = 0; k < count; ++k) {
      sum += cur * cur;
      const double bk = k == 0 ? 0.0 : off[static_cast<std::size_t>(k)];
      const double bk1 = k + 1 < count ? off[static_cast<std::size_t>(k + 1)] : std::sqrt(beta(count, alpha));
      const double next = (t * cur - bk * prev) / bk1;
      const double dnext = (cur + t * dcur - bk * dprev) / bk1;
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
    }
    deriv = dcur;
    return cur;
  };

  for (int i = 0; i < count; ++i) {
    double t = solver.eigenvalues()[i];
    double sum = 0.0;
    double deriv = 0.0;
    for (int iter = 0; iter < 3; ++iter) {
      const double p = orthonormal(t, sum, deriv);
      if (deriv == 0.0) break;
      t -= p / deriv;
    }
    rule.nodes[static_cast<std::size_t>(i)] = t;
  }
  // The weight is even: make the rule exactly symmetric.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double t = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -t;
    rule.nodes[n - 1 - i] = t;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    double deriv = 0.0;
    orthonormal(rule.nodes[i], sum, deriv);
    rule.weights[i] = 1.0 / sum;
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double w = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule quadrature(int d, int order) {
  if (d < 2) throw DomainError("quadrature: d must be >= 2");
  if (order < 0) throw DomainError("quadrature: order must be >= 0");
  QuadratureRule rule;
  rule.d = d;
  rule.exact_degree = 2 * order + 1;

  const int m1 = 2 * order + 2;
  std::vector<GaussRule> polar;
  std::vector<std::vector<double>> angles;
  for (int i = 2; i <= d - 1; ++i) {
    polar.push_back(gauss_jacobi(order + 1, 0.5 * (i - 2)));
    std::vector<double> a;
    // Descending t so that the angles ascend.
    for (auto it = polar.back().nodes.rbegin(); it != polar.back().nodes.rend(); ++it) a.push_back(std::acos(*it));
    angles.push_back(std::move(a));
  }

  std::size_t total = static_cast<std::size_t>(m1);
  for (std::size_t i = 0; i < polar.size(); ++i) total *= static_cast<std::size_t>(order + 1);
  rule.nodes.reserve(total);
  rule.weights.reserve(total);

  // Odometer over (θ_{d-1}, ..., θ_2, θ_1), θ_1 fastest.
  std::vector<int> digit(polar.size(), 0);
  const double w1 = 2.0 * std::numbers::pi / m1;
  for (std::size_t outer = 0; outer < total / static_cast<std::size_t>(m1); ++outer) {
    PolarPoint p;
    p.r = 1.0;
    p.theta.assign(static_cast<std::size_t>(d - 1), 0.0);
    double w = w1;
    for (std::size_t level = 0; level < polar.size(); ++level) {
      const auto j = static_cast<std::size_t>(digit[level]);
      const std::size_t back = polar[level].nodes.size() - 1 - j;
      p.theta[level + 1] = angles[level][j];
      w *= polar[level].weights[back];
    }
    for (int j = 0; j < m1; ++j) {
      p.theta[0] = w1 * j;
      rule.nodes.push_back(p);
      rule.weights.push_back(w);
    }
    for (std::size_t level = 0; level < digit.size(); ++level) {
      if (++digit[level] <= order) break;
      digit[level] = 0;
    }
  }

  const std::size_t count = rule.nodes.size();
  rule.directions.assign(count * static_cast<std::size_t>(d), 0.0);
  for (std::size_t j = 0; j < count; ++j) {
    const CartesianPoint x = polar_to_cartesian(rule.nodes[j]);
    for (int i = 0; i < d; ++i) rule.directions[static_cast<std::size_t>(i) * count + j] = x.x[static_cast<std::size_t>(i)];
  }
  return rule;
}

std::complex<double> integrate_values(std::span<const std::complex<double>> values, const QuadratureRule& rule) {
  if (values.size() != rule.weights.size()) {
    throw DomainError("integrate_values: got " + std::to_string(values.size()) + " values for " +
                      std::to_string(rule.weights.size()) + " nodes");
  }
  return simd::dot_real_complex(rule.weights, values);
}

std::complex<double> integrate_sphere(const SphereFunction& f, const QuadratureRule& rule) {
  std::vector<std::complex<double>> values;
  values.reserve(rule.nodes.size());
  for (const PolarPoint& p : rule.nodes) values.push_back(f(p));
  return integrate_values(values, rule);
}

}  // namespace hyperhelm::sphere
