#pragma once

// Band-limited sound fields: the reproducing kernel κ_k(r, r') = J_{d,0}(k|r - r'|),
// kernel interpolation of sampled pressures, and spherical-harmonic
// expansions p(r) = Σ B_n^m J_{d,n}(kr) Y_n^m(θ) (interior) or
// Σ A_n^m H^{(1)}_{d,n}(kr) Y_n^m(θ) (exterior).

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

#include "hyperhelm/sphere.hpp"

namespace hyperhelm::rkhs {

using sphere::CartesianPoint;

struct FieldSamples {
  double k = 1.0;
  std::vector<CartesianPoint> points;
  std::vector<std::complex<double>> pressures;
};

// Throws DomainError unless sizes agree, there is at least one sample, every
// point has dimension d, values are finite and points are pairwise distinct.
void validate(const FieldSamples& samples, int d);

struct KernelEstimate {
  double k = 1.0;
  int d = 0;
  std::vector<CartesianPoint> centers;
  std::vector<std::complex<double>> weights;
  double lambda = 0.0;
};

enum class BasisKind { kInterior, kExterior };

struct SHExpansion {
  double k = 1.0;
  int d = 0;
  int max_order = 0;
  BasisKind kind = BasisKind::kInterior;
  // n-major, m in enumeration order; Σ_{n<=N} dim 𝒴_n entries.
  std::vector<std::complex<double>> coefficients;

  std::size_t index(int n, std::int64_t m) const;
  std::complex<double> coefficient(int n, std::int64_t m) const { return coefficients[index(n, m)]; }
};

// Σ_{n<=N} dim 𝒴_n.
std::size_t coefficient_count(int d, int max_order);

double kernel(int d, double k, const CartesianPoint& r, const CartesianPoint& rp);

Eigen::MatrixXd gram(int d, double k, const std::vector<CartesianPoint>& points);

// 1e-8 ω_{d-1}.
double default_lambda(int d);

// 2-norm condition number of a symmetric matrix; infinity if it is not
// positive definite.
double condition_number(const Eigen::MatrixXd& symmetric);

// a = (G + λI)^{-1} p̂ by Cholesky. At λ = 0 a failed or numerically singular
// factorization throws SingularSystemError; at λ > 0 it falls back to an
// eigen-decomposition pseudo-inverse (eigenvalues below 1e-12 max dropped).
KernelEstimate fit(const FieldSamples& samples, int d, double lambda);

std::complex<double> evaluate(const KernelEstimate& est, const CartesianPoint& r);
std::vector<std::complex<double>> evaluate(const KernelEstimate& est, const std::vector<CartesianPoint>& points);

// B_n^m = Σ_ℓ a_ℓ J_{d,n}(k r_ℓ) Y_n^m(θ_ℓ). Each coefficient is the same
// closed-form sum for every requested N.
SHExpansion to_sh_expansion(const KernelEstimate& est, int max_order);

// Exterior expansions throw DomainError at r = 0.
std::complex<double> eval_sh(const SHExpansion& expansion, const sphere::PolarPoint& p);

// Least-squares B_n^m for n <= N from the design matrix J_{d,n}(k r_ℓ) Y_n^m(θ_ℓ).
// λ = 0: column-pivoted QR, SingularSystemError if rank deficient.
// λ > 0: Tikhonov, min |Φ B - p̂|² + λ |B|².
SHExpansion fit_sh_direct(const FieldSamples& samples, int d, int max_order, double lambda);

}  // namespace hyperhelm::rkhs
