// Built with -mavx2 (no -mfma): the variants below must round exactly like
// the scalar reference, so products and sums stay separate instructions.

#include "hyperhelm/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>

namespace hyperhelm::simd::avx2 {
namespace {

// (s0 + s1) + (s2 + s3)
inline double reduce_pairs(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const double s01 = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  const double s23 = _mm_cvtsd_f64(_mm_add_sd(hi, _mm_unpackhi_pd(hi, hi)));
  return s01 + s23;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const std::size_t blocked = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d va = _mm256_loadu_pd(a.data() + i);
    const __m256d vb = _mm256_loadu_pd(b.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double sum = reduce_pairs(acc);
  for (std::size_t i = blocked; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f) {
  assert(w.size() == f.size());
  const std::size_t n = w.size();
  const std::size_t blocked = n - n % 4;
  const double* fp = reinterpret_cast<const double*>(f.data());
  // lanes: (re0, im0, re1, im1) and (re2, im2, re3, im3)
  __m256d acc01 = _mm256_setzero_pd();
  __m256d acc23 = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w.data() + i);
    const __m256d w01 = _mm256_permute4x64_pd(wv, 0x50);  // w0 w0 w1 w1
    const __m256d w23 = _mm256_permute4x64_pd(wv, 0xFA);  // w2 w2 w3 w3
    const __m256d f01 = _mm256_loadu_pd(fp + 2 * i);
    const __m256d f23 = _mm256_loadu_pd(fp + 2 * i + 4);
    acc01 = _mm256_add_pd(acc01, _mm256_mul_pd(w01, f01));
    acc23 = _mm256_add_pd(acc23, _mm256_mul_pd(w23, f23));
  }
  alignas(32) double l01[4];
  alignas(32) double l23[4];
  _mm256_store_pd(l01, acc01);
  _mm256_store_pd(l23, acc23);
  double re = (l01[0] + l01[2]) + (l23[0] + l23[2]);
  double im = (l01[1] + l01[3]) + (l23[1] + l23[3]);
  for (std::size_t i = blocked; i < n; ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const std::size_t blocked = n - n % 2;
  double* yp = reinterpret_cast<double*>(y.data());
  const __m256d av = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  for (std::size_t i = 0; i < blocked; i += 2) {
    const __m128d xv = _mm_loadu_pd(x.data() + i);
    const __m256d xx = _mm256_permute4x64_pd(_mm256_castpd128_pd256(xv), 0x50);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, _mm256_mul_pd(av, xx)));
  }
  for (std::size_t i = blocked; i < n; ++i) {
    y[i] = {y[i].real() + alpha.real() * x[i], y[i].imag() + alpha.imag() * x[i]};
  }
}

void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out) {
  assert(points.size() == count * target.size());
  assert(out.size() == count);
  const std::size_t blocked = count - count % 4;
  const std::size_t dim = target.size();
  for (std::size_t j = 0; j < blocked; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; ++i) {
      const __m256d p = _mm256_loadu_pd(points.data() + i * count + j);
      const __m256d diff = _mm256_sub_pd(p, _mm256_set1_pd(target[i]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out.data() + j, acc);
  }
  for (std::size_t j = blocked; j < count; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double diff = points[i * count + j] - target[i];
      acc += diff * diff;
    }
    out[j] = acc;
  }
}

}  // namespace hyperhelm::simd::avx2

#else

// Not built for this target; isa_available() reports the variant as absent.
namespace hyperhelm::simd::avx2 {

double dot(std::span<const double> a, std::span<const double> b) { return scalar::dot(a, b); }

std::complex<double> dot_real_complex(std::span<const double> w, std::span<const std::complex<double>> f) {
  return scalar::dot_real_complex(w, f);
}

void axpy_complex(std::complex<double> alpha, std::span<const double> x, std::span<std::complex<double>> y) {
  scalar::axpy_complex(alpha, x, y);
}

void squared_distances(std::span<const double> points, std::size_t count, std::span<const double> target,
                       std::span<double> out) {
  scalar::squared_distances(points, count, target, out);
}

}  // namespace hyperhelm::simd::avx2

#endif
