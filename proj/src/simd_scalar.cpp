#include "hyperhelm/simd.hpp"

#include <cassert>

namespace hyperhelm::simd::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const std::size_t blocked = n - n % 4;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < blocked; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  double sum = (s0 + s1) + (s2 + s3);
  for (std::size_t i = blocked; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f) {
  assert(w.size() == f.size());
  const std::size_t n = w.size();
  const std::size_t blocked = n - n % 4;
  double r0 = 0.0, r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double i0 = 0.0, i1 = 0.0, i2 = 0.0, i3 = 0.0;
  for (std::size_t i = 0; i < blocked; i += 4) {
    r0 += w[i] * f[i].real();
    i0 += w[i] * f[i].imag();
    r1 += w[i + 1] * f[i + 1].real();
    i1 += w[i + 1] * f[i + 1].imag();
    r2 += w[i + 2] * f[i + 2].real();
    i2 += w[i + 2] * f[i + 2].imag();
    r3 += w[i + 3] * f[i + 3].real();
    i3 += w[i + 3] * f[i + 3].imag();
  }
  double re = (r0 + r1) + (r2 + r3);
  double im = (i0 + i1) + (i2 + i3);
  for (std::size_t i = blocked; i < n; ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y) {
  assert(x.size() == y.size());
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = {y[i].real() + ar * x[i], y[i].imag() + ai * x[i]};
  }
}

void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out) {
  assert(points.size() == count * target.size());
  assert(out.size() == count);
  for (std::size_t j = 0; j < count; ++j) out[j] = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double* row = points.data() + i * count;
    const double t = target[i];
    for (std::size_t j = 0; j < count; ++j) {
      const double diff = row[j] - t;
      out[j] += diff * diff;
    }
  }
}

}  // namespace hyperhelm::simd::scalar
