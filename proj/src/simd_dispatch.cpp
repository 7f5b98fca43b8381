#include <atomic>
#include <cstdlib>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/simd.hpp"

namespace hyperhelm::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  const char* env = std::getenv("HYPERHELM_SIMD");
  const std::string choice = env != nullptr ? env : "auto";
  if (choice == "scalar") return Isa::kScalar;
  if (choice == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (choice == "neon" && isa_available(Isa::kNeon)) return Isa::kNeon;
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return cpu_has_avx2();
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw DomainError("SIMD variant '" + std::string(isa_name(isa)) + "' is not available on this CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

#if defined(__x86_64__) || defined(_M_X64)
#define HYPERHELM_DISPATCH(fn, ...)                     \
  switch (active_isa()) {                               \
    case Isa::kAvx2: return avx2::fn(__VA_ARGS__);      \
    default: return scalar::fn(__VA_ARGS__);            \
  }
#elif defined(__aarch64__)
#define HYPERHELM_DISPATCH(fn, ...)                     \
  switch (active_isa()) {                               \
    case Isa::kNeon: return neon::fn(__VA_ARGS__);      \
    default: return scalar::fn(__VA_ARGS__);            \
  }
#else
#define HYPERHELM_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__);
#endif

double dot(std::span<const double> a, std::span<const double> b) {
  HYPERHELM_DISPATCH(dot, a, b)
}

std::complex<double> dot_real_complex(std::span<const double> w,
                                      std::span<const std::complex<double>> f) {
  HYPERHELM_DISPATCH(dot_real_complex, w, f)
}

void axpy_complex(std::complex<double> alpha, std::span<const double> x,
                  std::span<std::complex<double>> y) {
  HYPERHELM_DISPATCH(axpy_complex, alpha, x, y)
}

void squared_distances(std::span<const double> points, std::size_t count,
                       std::span<const double> target, std::span<double> out) {
  HYPERHELM_DISPATCH(squared_distances, points, count, target, out)
}

#undef HYPERHELM_DISPATCH

}  // namespace hyperhelm::simd
