#pragma once

// Data-parallel inner loops used by quadrature sums, kernel evaluation and
// coefficient accumulation.
//
// Every kernel has a scalar reference implementation and optional AVX2 and
// NEON variants. The vector variants reproduce the scalar operation order
// exactly (four interleaved partial sums, combined as (s0 + s1) + (s2 + s3),
// remainder added sequentially, no fused multiply-add), so all variants are
// bitwise identical. The active variant is chosen once at first use from the
// CPU features and the HYPERHELM_SIMD environment variable
// ("scalar", "avx2", "neon" or "auto").

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace hyperhelm::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// Variants usable on this machine. Scalar is always present.
bool isa_available(Isa isa);

Isa active_isa();

// Overrides the runtime choice. Throws DomainError if `isa` is unavailable.
void set_active_isa(Isa isa);

// Σ a_i b_i.
double dot(std::span<const double> a, std::span<const double> b);

// Σ w_i f_i for real weights and complex values.
std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f);

// y_i += alpha * x_i.
void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y);

// out_j = Σ_i (points[i * count + j] - target_i)^2, i.e. squared distances
// from `target` to `count` points stored coordinate-major (all x_1, then all
// x_2, ...). The sum over coordinates runs in index order.
void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out);

// Per-variant entry points, for equivalence testing. Calling a variant that is
// not available on the host is undefined.
namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f);
void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y);
void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out);
}  // namespace scalar

namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f);
void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y);
void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out);
}  // namespace avx2

namespace neon {
double dot(std::span<const double> a, std::span<const double> b);
std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f);
void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y);
void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out);
}  // namespace neon

}  // namespace hyperhelm::simd
