#pragma once

// Coordinates on R^d and S^{d-1}, real hyperspherical harmonics, and product
// quadrature over the sphere.
//
// Polar coordinates (r, θ_1, ..., θ_{d-1}):
//   x_1 = r sin θ_{d-1} ... sin θ_2 sin θ_1
//   x_2 = r sin θ_{d-1} ... sin θ_2 cos θ_1
//   ...
//   x_{d-1} = r sin θ_{d-1} cos θ_{d-2}
//   x_d = r cos θ_{d-1}
// with 0 <= θ_1 < 2π and 0 <= θ_i <= π for i >= 2.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hyperhelm::sphere {

struct CartesianPoint {
  std::vector<double> x;

  int dim() const { return static_cast<int>(x.size()); }
  double norm() const;
};

struct PolarPoint {
  double r = 0.0;
  std::vector<double> theta;  // θ_1 ... θ_{d-1}

  int dim() const { return static_cast<int>(theta.size()) + 1; }
};

// True if r >= 0 and every angle lies in its domain.
bool in_domain(const PolarPoint& p);

CartesianPoint polar_to_cartesian(const PolarPoint& p);

// Points on a coordinate axis get canonical angles: once the leading
// coordinates x_1..x_j are all zero, θ_1..θ_{j-1} are 0.
PolarPoint cartesian_to_polar(const CartesianPoint& x);

// ω_{ell-1} = 2 π^{ell/2} / Γ(ell/2), the measure of the unit sphere in R^ell.
double surface_measure(int ell);

// dim 𝒴_n in dimension d, exact. Throws OverflowError past int64.
std::int64_t harmonic_dim(int d, int n);

enum class Sign { kPlus, kMinus };

// One real hyperspherical harmonic: the chain 0 <= μ_1 <= ... <= μ_{d-1} = n,
// a sign choosing cos/sin in θ_1 (only meaningful when μ_1 >= 1), and the
// 1-based position m in the enumeration order of degree n.
//
// Enumeration order: lexicographic over (μ_{d-2}, ..., μ_1, sign) with "+"
// before "-". For d = 2 the order is 1, cos nθ, sin nθ.
struct HarmonicIndex {
  std::vector<int> chain;
  Sign sign = Sign::kPlus;
  int n = 0;
  std::int64_t m = 1;

  int dim() const { return static_cast<int>(chain.size()) + 1; }
  bool operator==(const HarmonicIndex&) const = default;
};

// Validates the chain and fills in n and m.
HarmonicIndex make_index(std::vector<int> chain, Sign sign);
HarmonicIndex index_from_flat(int d, int n, std::int64_t m);
std::vector<HarmonicIndex> enumerate_indices(int d, int n);

// Y_n^m(θ) for a single index; `theta` holds θ_1..θ_{d-1}.
double eval_harmonic(const HarmonicIndex& idx, std::span<const double> theta);

// One fixed Y_n^m at many points; normalisation computed once. Same values,
// bit for bit, as eval_harmonic.
class HarmonicFunction {
 public:
  explicit HarmonicFunction(HarmonicIndex idx);
  double operator()(std::span<const double> theta) const;

 private:
  HarmonicIndex idx_;
  std::vector<double> norms_;  // levels d-1 down to 2
};

// All harmonics with n <= max_order at once, laid out n-major then m in
// enumeration order. The value of each (n, m) does not depend on max_order.
class HarmonicBasis {
 public:
  HarmonicBasis(int d, int max_order);

  int dim() const { return d_; }
  int max_order() const { return max_order_; }
  std::size_t size() const { return offsets_.back(); }
  // First flat position of degree n.
  std::size_t offset(int n) const { return offsets_[static_cast<std::size_t>(n)]; }

  void evaluate(std::span<const double> theta, std::span<double> out) const;
  std::vector<double> evaluate(std::span<const double> theta) const;

 private:
  int d_;
  int max_order_;
  std::vector<std::size_t> offsets_;
  // Per level j = 2..d-1, normalizers N_j(a, b) stored as [j][a * (N+1) + b].
  std::vector<std::vector<double>> norms_;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss rule on [-1, 1] for the weight (1 - t²)^alpha, alpha > -1; exact for
// polynomials of degree <= 2 count - 1. Nodes ascending.
GaussRule gauss_jacobi(int count, double alpha);

struct QuadratureRule {
  int d = 0;
  std::vector<PolarPoint> nodes;  // r = 1
  std::vector<double> weights;
  int exact_degree = 0;

  // Unit vectors of the nodes, coordinate-major (all x_1, then all x_2, ...).
  std::vector<double> directions;
};

// Product rule: 2 order + 2 equispaced nodes in θ_1, and order + 1
// Gauss-Jacobi nodes in cos θ_i with exponent (i-2)/2 for i >= 2.
// Integrates products of harmonics of degree <= order exactly.
QuadratureRule quadrature(int d, int order);

using SphereFunction = std::function<std::complex<double>(const PolarPoint&)>;

// Σ_j w_j f(θ_j).
std::complex<double> integrate_sphere(const SphereFunction& f, const QuadratureRule& rule);

// Σ_j w_j f_j for values already tabulated at the nodes.
std::complex<double> integrate_values(std::span<const std::complex<double>> values,
                                      const QuadratureRule& rule);

}  // namespace hyperhelm::sphere
