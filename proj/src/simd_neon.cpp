#include "hyperhelm/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cassert>

// Two float64x2 accumulators stand in for the four scalar partial sums.
// vmulq/vaddq are used instead of vfmaq to keep rounding identical.

namespace hyperhelm::simd::neon {

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const std::size_t blocked = n - n % 4;
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < blocked; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2)));
  }
  double sum = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
               (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (std::size_t i = blocked; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f) {
  assert(w.size() == f.size());
  const std::size_t n = w.size();
  const std::size_t blocked = n - n % 4;
  const double* fp = reinterpret_cast<const double*>(f.data());
  float64x2_t acc[4] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
  for (std::size_t i = 0; i < blocked; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      const float64x2_t wl = vdupq_n_f64(w[i + l]);
      acc[l] = vaddq_f64(acc[l], vmulq_f64(wl, vld1q_f64(fp + 2 * (i + l))));
    }
  }
  double re = (vgetq_lane_f64(acc[0], 0) + vgetq_lane_f64(acc[1], 0)) +
              (vgetq_lane_f64(acc[2], 0) + vgetq_lane_f64(acc[3], 0));
  double im = (vgetq_lane_f64(acc[0], 1) + vgetq_lane_f64(acc[1], 1)) +
              (vgetq_lane_f64(acc[2], 1) + vgetq_lane_f64(acc[3], 1));
  for (std::size_t i = blocked; i < n; ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y) {
  assert(x.size() == y.size());
  double* yp = reinterpret_cast<double*>(y.data());
  const double av_init[2] = {alpha.real(), alpha.imag()};
  const float64x2_t av = vld1q_f64(av_init);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const float64x2_t yv = vld1q_f64(yp + 2 * i);
    vst1q_f64(yp + 2 * i, vaddq_f64(yv, vmulq_f64(av, vdupq_n_f64(x[i]))));
  }
}

void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out) {
  assert(points.size() == count * target.size());
  assert(out.size() == count);
  const std::size_t blocked = count - count % 2;
  const std::size_t dim = target.size();
  for (std::size_t j = 0; j < blocked; j += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const float64x2_t diff =
          vsubq_f64(vld1q_f64(points.data() + i * count + j), vdupq_n_f64(target[i]));
      acc = vaddq_f64(acc, vmulq_f64(diff, diff));
    }
    vst1q_f64(out.data() + j, acc);
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

}  // namespace hyperhelm::simd::neon

#else

// Not built for this target; isa_available() reports the variant as absent.
namespace hyperhelm::simd::neon {

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

}  // namespace hyperhelm::simd::neon

#endif
