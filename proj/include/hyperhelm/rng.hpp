#pragma once

// Portable seeded generator. std::mt19937_64 is fully specified by the
// standard; everything on top of it is done here rather than with the
// <random> distributions, whose algorithms vary between standard libraries.
//
//   uniform()  (x >> 11) * 2^-53, in [0, 1)
//   normal()   Box-Muller on (1 - u1, u2), both outputs used in turn
//   in_ball()  normalised Gaussian direction, radius * u^(1/d)

#include <cstdint>
#include <random>
#include <vector>

namespace hyperhelm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  double normal();
  std::vector<double> unit_vector(int d);
  std::vector<double> in_ball(int d, double radius);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hyperhelm
