#pragma once

// Real-order cylindrical Bessel functions, Gegenbauer polynomials, Gamma, and
// the normalized hyperspherical radial functions
//
//   J_{d,n}(z) = (2π)^{d/2} J_{n+d/2-1}(z) / z^{d/2-1}
//   N_{d,n}(z) = (2π)^{d/2} N_{n+d/2-1}(z) / z^{d/2-1}
//   H^{(1,2)}_{d,n}(z) = J_{d,n}(z) ± i N_{d,n}(z)
//
// whose (2π)^{d/2} factor makes {J_{d,n} Y_n^m} orthonormal in the
// band-limited space of Helmholtz solutions with wavenumber k.
//
// All functions are pure; errors are reported with DomainError / OverflowError.

#include <complex>

namespace hyperhelm::specfun {

// Spatial dimension d >= 2 and harmonic order n >= 0 of a radial function.
class RadialOrder {
 public:
  RadialOrder(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  // Cylindrical order ν = n + d/2 - 1; half-integer iff d is odd.
  double nu() const { return n_ + 0.5 * d_ - 1.0; }

 private:
  int d_;
  int n_;
};

double gamma(double x);
double log_gamma(double x);

// J_ν(z), ν >= 0, z >= 0.
double bessel_j(double nu, double z);

// N_ν(z) (Weber/Neumann Y_ν), ν >= 0, z > 0.
double bessel_n(double nu, double z);

// C_n^λ(t) by the three-term recurrence; λ > -1/2, λ != 0.
double gegenbauer(int n, double lambda, double t);

double hyper_j(const RadialOrder& ord, double z);
double hyper_n(const RadialOrder& ord, double z);
std::complex<double> hyper_h1(const RadialOrder& ord, double z);
std::complex<double> hyper_h2(const RadialOrder& ord, double z);

}  // namespace hyperhelm::specfun
