// Real hyperspherical harmonics by the chain construction
//
//   Y(θ) = Φ_{μ_1}(θ_1) · Π_{j=2}^{d-1} N_j(μ_j, μ_{j-1}) sin^{μ_{j-1}} θ_j
//                                    · C_{μ_j - μ_{j-1}}^{μ_{j-1} + (j-1)/2}(cos θ_j)
//
// with Φ_0 = 1/√(2π), Φ_μ = cos(μθ)/√π or sin(μθ)/√π. Each factor j is an
// orthonormal Gegenbauer function for the measure sin^{j-1} θ_j dθ_j, which
// makes the family orthonormal on S^{d-1}.

#include <cmath>
#include <numbers>
#include <string>

#include <utility>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"

namespace hyperhelm::sphere {
namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// 1/√h for h = ∫ (C_ℓ^λ)² (1-t²)^{λ-1/2} dt, ℓ = upper - lower,
// λ = lower + (level-1)/2.
double level_normalizer(int level, int upper, int lower) {
  const int ell = upper - lower;
  const double lambda = lower + 0.5 * (level - 1);
  const double log_h = std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::numbers::ln2 +
                       specfun::log_gamma(ell + 2.0 * lambda) - specfun::log_gamma(ell + 1.0) -
                       std::log(ell + lambda) - 2.0 * specfun::log_gamma(lambda);
  return std::exp(-0.5 * log_h);
}

void check_theta(int d, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != d - 1) {
    throw DomainError("harmonic evaluation: expected " + std::to_string(d - 1) + " angles, got " +
                      std::to_string(theta.size()));
  }
}

}  // namespace

HarmonicFunction::HarmonicFunction(HarmonicIndex idx) : idx_(std::move(idx)) {
  for (int j = idx_.dim() - 1; j >= 2; --j) {
    norms_.push_back(level_normalizer(j, idx_.chain[static_cast<std::size_t>(j - 1)],
                                      idx_.chain[static_cast<std::size_t>(j - 2)]));
  }
}

double HarmonicFunction::operator()(std::span<const double> theta) const {
  const int d = idx_.dim();
  check_theta(d, theta);
  double value = 1.0;
  for (int j = d - 1; j >= 2; --j) {
    const int upper = idx_.chain[static_cast<std::size_t>(j - 1)];
    const int lower = idx_.chain[static_cast<std::size_t>(j - 2)];
    const double t = theta[static_cast<std::size_t>(j - 1)];
    const double lambda = lower + 0.5 * (j - 1);
    value *= norms_[static_cast<std::size_t>(d - 1 - j)] * std::pow(std::sin(t), lower) *
             specfun::gegenbauer(upper - lower, lambda, std::cos(t));
  }
  const int mu1 = idx_.chain.front();
  if (mu1 == 0) return value * kInvSqrtTwoPi;
  const double arg = mu1 * theta[0];
  return value * (idx_.sign == Sign::kPlus ? std::cos(arg) : std::sin(arg)) * kInvSqrtPi;
}

double eval_harmonic(const HarmonicIndex& idx, std::span<const double> theta) {
  return HarmonicFunction(idx)(theta);
}

HarmonicBasis::HarmonicBasis(int d, int max_order) : d_(d), max_order_(max_order) {
  if (d < 2) throw DomainError("HarmonicBasis: d must be >= 2");
  if (max_order < 0) throw DomainError("HarmonicBasis: max_order must be >= 0");
  offsets_.resize(static_cast<std::size_t>(max_order) + 2, 0);
  for (int n = 0; n <= max_order; ++n) {
    offsets_[static_cast<std::size_t>(n) + 1] =
        offsets_[static_cast<std::size_t>(n)] + static_cast<std::size_t>(harmonic_dim(d, n));
  }
  const auto stride = static_cast<std::size_t>(max_order) + 1;
  norms_.resize(static_cast<std::size_t>(std::max(0, d - 2)));
  for (int j = 2; j <= d - 1; ++j) {
    auto& table = norms_[static_cast<std::size_t>(j - 2)];
    table.assign(stride * stride, 0.0);
    for (int a = 0; a <= max_order; ++a) {
      for (int b = 0; b <= a; ++b) {
        table[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(b)] = level_normalizer(j, a, b);
      }
    }
  }
}

std::vector<double> HarmonicBasis::evaluate(std::span<const double> theta) const {
  std::vector<double> out(size());
  evaluate(theta, out);
  return out;
}

void HarmonicBasis::evaluate(std::span<const double> theta, std::span<double> out) const {
  check_theta(d_, theta);
  if (out.size() != size()) throw DomainError("HarmonicBasis::evaluate: output size mismatch");
  const int top = max_order_;
  const auto stride = static_cast<std::size_t>(top) + 1;

  // factors[j-2][a * stride + b] = N_j(a, b) sin^b θ_j C_{a-b}^{b+(j-1)/2}(cos θ_j)
  std::vector<std::vector<double>> factors(norms_.size());
  std::vector<double> sin_pow(stride);
  for (int j = 2; j <= d_ - 1; ++j) {
    const double t = theta[static_cast<std::size_t>(j - 1)];
    const double s = std::sin(t);
    const double c = std::cos(t);
    sin_pow[0] = 1.0;
    for (std::size_t b = 1; b < stride; ++b) sin_pow[b] = sin_pow[b - 1] * s;
    const auto& norm = norms_[static_cast<std::size_t>(j - 2)];
    auto& f = factors[static_cast<std::size_t>(j - 2)];
    f.assign(stride * stride, 0.0);
    for (int b = 0; b <= top; ++b) {
      const double lambda = b + 0.5 * (j - 1);
      double prev = 0.0;
      double cur = 1.0;
      for (int ell = 0; b + ell <= top; ++ell) {
        if (ell == 1) {
          prev = cur;
          cur = 2.0 * lambda * c;
        } else if (ell >= 2) {
          const double next = (2.0 * (ell + lambda - 1.0) * c * cur - (ell + 2.0 * lambda - 2.0) * prev) / ell;
          prev = cur;
          cur = next;
        }
        const std::size_t at = static_cast<std::size_t>(b + ell) * stride + static_cast<std::size_t>(b);
        f[at] = norm[at] * sin_pow[static_cast<std::size_t>(b)] * cur;
      }
    }
  }

  std::vector<double> phi_plus(stride);
  std::vector<double> phi_minus(stride);
  phi_plus[0] = kInvSqrtTwoPi;
  for (int mu = 1; mu <= top; ++mu) {
    const double arg = mu * theta[0];
    phi_plus[static_cast<std::size_t>(mu)] = std::cos(arg) * kInvSqrtPi;
    phi_minus[static_cast<std::size_t>(mu)] = std::sin(arg) * kInvSqrtPi;
  }

  std::size_t pos = 0;
  // Walk the chain tree top-down; `level` is the index j whose upper value is
  // fixed to `upper`.
  auto walk = [&](auto&& self, int level, int upper, double product) -> void {
    if (level < 2) {
      if (upper == 0) {
        out[pos++] = product * phi_plus[0];
      } else {
        out[pos++] = product * phi_plus[static_cast<std::size_t>(upper)];
        out[pos++] = product * phi_minus[static_cast<std::size_t>(upper)];
      }
      return;
    }
    const auto& f = factors[static_cast<std::size_t>(level - 2)];
    for (int b = 0; b <= upper; ++b) {
      self(self, level - 1, b, product * f[static_cast<std::size_t>(upper) * stride + static_cast<std::size_t>(b)]);
    }
  };
  for (int n = 0; n <= top; ++n) walk(walk, d_ - 1, n, 1.0);
}

}  // namespace hyperhelm::sphere
