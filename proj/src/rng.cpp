#include "hyperhelm/rng.hpp"

#include <cmath>
#include <numbers>

#include "hyperhelm/errors.hpp"

namespace hyperhelm {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::vector<double> Rng::unit_vector(int d) {
  if (d < 1) throw DomainError("Rng::unit_vector: d must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(d));
  double s = 0.0;
  while (s == 0.0) {
    s = 0.0;
    for (double& x : v) {
      x = normal();
      s += x * x;
    }
  }
  s = std::sqrt(s);
  for (double& x : v) x /= s;
  return v;
}

std::vector<double> Rng::in_ball(int d, double radius) {
  auto v = unit_vector(d);
  const double r = radius * std::pow(uniform(), 1.0 / d);
  for (double& x : v) x *= r;
  return v;
}

}  // namespace hyperhelm
