#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"

namespace hyperhelm::sphere {
namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("harmonic_dim: integer overflow");
  return r;
}

// C(n, k) exactly; each partial product is itself a binomial coefficient.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

double CartesianPoint::norm() const {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

bool in_domain(const PolarPoint& p) {
  if (!(p.r >= 0.0) || !std::isfinite(p.r)) return false;
  for (std::size_t i = 0; i < p.theta.size(); ++i) {
    const double t = p.theta[i];
    if (!(t >= 0.0)) return false;
    if (i == 0 ? !(t < 2.0 * kPi) : !(t <= kPi)) return false;
  }
  return true;
}

CartesianPoint polar_to_cartesian(const PolarPoint& p) {
  const int d = p.dim();
  if (d < 2) throw DomainError("polar_to_cartesian: need at least one angle (d >= 2)");
  CartesianPoint out;
  out.x.assign(static_cast<std::size_t>(d), 0.0);
  double s = p.r;
  for (int i = d - 1; i >= 2; --i) {
    const double t = p.theta[static_cast<std::size_t>(i - 1)];
    out.x[static_cast<std::size_t>(i)] = s * std::cos(t);
    s *= std::sin(t);
  }
  out.x[1] = s * std::cos(p.theta[0]);
  out.x[0] = s * std::sin(p.theta[0]);
  return out;
}

PolarPoint cartesian_to_polar(const CartesianPoint& x) {
  const int d = x.dim();
  if (d < 2) throw DomainError("cartesian_to_polar: need d >= 2");
  PolarPoint p;
  p.theta.assign(static_cast<std::size_t>(d - 1), 0.0);
  // rho[j] = |(x_1, ..., x_j)|, 1-based j.
  std::vector<double> rho(static_cast<std::size_t>(d) + 1, 0.0);
  double acc = 0.0;
  for (int j = 1; j <= d; ++j) {
    const double v = x.x[static_cast<std::size_t>(j - 1)];
    acc += v * v;
    rho[static_cast<std::size_t>(j)] = std::sqrt(acc);
  }
  p.r = rho[static_cast<std::size_t>(d)];
  for (int j = d; j >= 3; --j) {
    if (rho[static_cast<std::size_t>(j)] == 0.0) return p;
    p.theta[static_cast<std::size_t>(j - 2)] =
        std::atan2(rho[static_cast<std::size_t>(j - 1)], x.x[static_cast<std::size_t>(j - 1)]);
  }
  if (rho[2] == 0.0) return p;
  double t = std::atan2(x.x[0], x.x[1]);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  p.theta[0] = t + 0.0;
  return p;
}

double surface_measure(int ell) {
  if (ell < 1) throw DomainError("surface_measure: ell must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * ell) / specfun::gamma(0.5 * ell);
}

std::int64_t harmonic_dim(int d, int n) {
  if (d < 2) throw DomainError("harmonic_dim: d must be >= 2");
  if (n < 0) throw DomainError("harmonic_dim: n must be >= 0");
  if (n == 0) return 1;
  // (2n + d - 2) / (n + d - 2) · C(n + d - 2, n)
  const std::int64_t b = binomial(n + d - 2, n);
  const std::int64_t num = 2 * static_cast<std::int64_t>(n) + d - 2;
  const std::int64_t den = static_cast<std::int64_t>(n) + d - 2;
  const std::int64_t g = std::gcd(num, den);
  return checked_mul(b / (den / g), num / g);
}

HarmonicIndex make_index(std::vector<int> chain, Sign sign) {
  if (chain.empty()) throw DomainError("make_index: chain must have d - 1 >= 1 entries");
  if (chain.front() < 0) throw DomainError("make_index: chain entries must be >= 0");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] < chain[i - 1]) throw DomainError("make_index: chain must be non-decreasing");
  }
  if (chain.front() == 0 && sign == Sign::kMinus) {
    throw DomainError("make_index: sign '-' requires mu_1 >= 1");
  }
  HarmonicIndex idx;
  idx.n = chain.back();
  idx.sign = sign;
  // Count the chains before this one: at level j (μ_j, j = d-2..1) every
  // smaller value b contributes dim 𝒴_b on S^j.
  std::int64_t m = 1;
  for (std::size_t level = chain.size() - 1; level-- > 0;) {
    const int ambient = static_cast<int>(level) + 2;  // μ_{level+1} indexes harmonics in R^{level+2}
    for (int b = 0; b < chain[level]; ++b) m += harmonic_dim(ambient, b);
  }
  if (sign == Sign::kMinus) m += 1;
  if (chain.size() == 1 && idx.n == 0) m = 1;
  idx.m = m;
  idx.chain = std::move(chain);
  return idx;
}

std::vector<HarmonicIndex> enumerate_indices(int d, int n) {
  if (d < 2) throw DomainError("enumerate_indices: d must be >= 2");
  if (n < 0) throw DomainError("enumerate_indices: n must be >= 0");
  std::vector<HarmonicIndex> out;
  out.reserve(static_cast<std::size_t>(harmonic_dim(d, n)));
  std::vector<int> chain(static_cast<std::size_t>(d - 1), 0);
  chain.back() = n;
  std::int64_t m = 0;
  // Depth-first over levels d-2 .. 1, each bounded above by the level above.
  std::function<void(int)> descend = [&](int level) {
    if (level < 0) {
      const auto add = [&](Sign s) {
        HarmonicIndex idx;
        idx.chain = chain;
        idx.sign = s;
        idx.n = n;
        idx.m = ++m;
        out.push_back(std::move(idx));
      };
      add(Sign::kPlus);
      if (chain.front() >= 1) add(Sign::kMinus);
      return;
    }
    const int upper = chain[static_cast<std::size_t>(level) + 1];
    for (int b = 0; b <= upper; ++b) {
      chain[static_cast<std::size_t>(level)] = b;
      descend(level - 1);
    }
  };
  descend(d - 3);
  return out;
}

HarmonicIndex index_from_flat(int d, int n, std::int64_t m) {
  const std::int64_t count = harmonic_dim(d, n);
  if (m < 1 || m > count) {
    throw DomainError("index_from_flat: m = " + std::to_string(m) + " outside 1.." + std::to_string(count));
  }
  std::vector<int> chain(static_cast<std::size_t>(d - 1), 0);
  chain.back() = n;
  std::int64_t rest = m - 1;
  for (int level = d - 3; level >= 0; --level) {
    const int upper = chain[static_cast<std::size_t>(level) + 1];
    const int ambient = level + 2;
    int b = 0;
    while (b < upper) {
      const std::int64_t block = harmonic_dim(ambient, b);
      if (rest < block) break;
      rest -= block;
      ++b;
    }
    chain[static_cast<std::size_t>(level)] = b;
  }
  const Sign sign = rest == 0 ? Sign::kPlus : Sign::kMinus;
  return make_index(std::move(chain), sign);
}

}  // namespace hyperhelm::sphere
