#pragma once

// Numerical checks of the classical identities behind the hyperspherical
// expansion: Funk-Hecke, Gegenbauer's integral for J_{ν+n}, the plane-wave
// expansion, the addition theorem, the Helmholtz equation itself and the
// Sommerfeld radiation condition.

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "hyperhelm/sphere.hpp"

namespace hyperhelm::identities {

struct IdentityReport {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_err = 0.0;  // |lhs - rhs|
  double rel_err = 0.0;  // abs_err / max(|lhs|, 1e-300)
  std::map<std::string, double> parameters;
};

IdentityReport make_report(std::complex<double> lhs, std::complex<double> rhs,
                           std::map<std::string, double> parameters = {});

// ceil(e k R / 2) + 10: past n ≈ kR the terms J_{d,n}(kR) decay
// super-exponentially.
int truncation_order(double k, double radius);

// Step for central differences in r: 1e-5 max(1, 1/k).
double derivative_step(double k);

using Profile = std::function<std::complex<double>(double)>;

// ∫_{S^{d-1}} φ(θ·ϑ) Y(θ) dθ by `rule` against
//   n! Γ(d-2) / Γ(n+d-2) ω_{d-2} Y(ϑ) ∫ φ(t) C_n^{(d-2)/2}(t) (1-t²)^{(d-3)/2} dt
// with a `gl_nodes`-point Gauss-Jacobi rule. `dir` holds the angles of ϑ.
// Throws DomainError for d = 2.
IdentityReport funk_hecke(const Profile& phi, const sphere::HarmonicIndex& idx, std::span<const double> dir,
                          const sphere::QuadratureRule& rule, int gl_nodes);

// J_{ν+n}(x) against
//   (-i)^n Γ(2ν) n! (x/2)^ν / (Γ(ν+1/2) Γ(1/2) Γ(2ν+n)) ∫ e^{ixt} C_n^ν(t) (1-t²)^{ν-1/2} dt.
// Requires ν > 0, x > 0 and gl_nodes >= x + n + 10.
IdentityReport gegenbauer_bessel(double nu, int n, double x, int gl_nodes);

// Σ_{n<=N} Σ_m i^n J_{d,n}(k|r|) Y_n^m(ϑ) Y_n^m(θ), k = |kvec|, ϑ = kvec/k.
std::complex<double> plane_wave_truncated(const sphere::CartesianPoint& kvec, const sphere::CartesianPoint& r,
                                          int max_order);

// J_{d,0}(k|r - r'|) against Σ_{n<=N} Σ_m J_{d,n}(k|r|) Y_n^m(θ) J_{d,n}(k|r'|) Y_n^m(θ').
IdentityReport addition_theorem(int d, double k, const sphere::CartesianPoint& r, const sphere::CartesianPoint& rp,
                                int max_order);

using Field = std::function<std::complex<double>(const sphere::CartesianPoint&)>;

// Σ_i (f(x + h e_i) - 2 f(x) + f(x - h e_i)) / h² + k² f(x).
std::complex<double> helmholtz_residual(const Field& field, double k, const sphere::CartesianPoint& x, double h);

enum class HankelKind { kFirst, kSecond };

// r^{(d-1)/2} (∂H/∂r - i k H) for H(r) = H^{(1)}_{d,n}(kr) (or H^{(2)}).
std::complex<double> radiation_remainder(int d, int n, double k, double r, HankelKind kind = HankelKind::kFirst);

}  // namespace hyperhelm::identities
