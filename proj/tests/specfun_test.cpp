#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/specfun.hpp"
#include "oracles.hpp"

using namespace hyperhelm;
using namespace hyperhelm::specfun;
using std::numbers::pi;

namespace {

// Relative error with an absolute floor, matching the documented accuracy
// contract of bessel_j (absolute tolerance where |J| < 1e-2).
bool close_j(double got, double want, double rel, double abs_small) {
  if (std::abs(want) < 1e-2) return std::abs(got - want) <= abs_small;
  return std::abs(got - want) <= rel * std::abs(want);
}

}  // namespace

TEST_CASE("gamma values") {
  CHECK(specfun::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(specfun::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-15));
  CHECK(specfun::gamma(6.0) == doctest::Approx(120.0).epsilon(1e-15));
  // Γ(170) = 169!
  double f = 1.0;
  for (int i = 2; i <= 169; ++i) f *= i;
  CHECK(std::abs(specfun::gamma(170.0) - f) <= 1e-13 * f);
  CHECK(log_gamma(500.0) == doctest::Approx(std::lgamma(500.0)).epsilon(1e-15));
  CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(specfun::gamma(200.0), OverflowError);
}

TEST_CASE("bessel_j spot values") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(2.5, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0.5, pi)) <= 1e-12);
  const double want = oracle::series_bessel_j(5.0, 2.0);
  CHECK(bessel_j(5.0, 2.0) == doctest::Approx(want).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(1.0, -1.0), DomainError);
}

TEST_CASE("bessel_j matches the extended-precision series") {
  // Series-oracle equivalence region: z <= 10, ν <= 30.
  double worst = 0.0;
  for (double nu = 0.0; nu <= 30.0; nu += 0.5) {
    for (double z = 0.05; z <= 10.0; z += 0.37) {
      const double want = oracle::series_bessel_j(nu, z);
      const double got = bessel_j(nu, z);
      if (std::abs(want) < 1e-290) continue;
      if (std::abs(want) > 1e-2) {
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      } else {
        CHECK(std::abs(got - want) <= std::max(1e-11 * std::abs(want), 1e-15));
      }
    }
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("bessel_j over the full contract range") {
  // ν <= 60, z <= 200, including non-integer, non-half-integer orders.
  const double orders[] = {0.0, 0.3, 0.5, 1.0, 1.5, 2.0, 3.7, 7.5, 12.0, 20.25, 33.5, 47.0, 60.0};
  const double args[] = {0.001, 0.4, 1.3, 3.0, 7.9, 15.2, 28.0, 45.5, 64.0, 99.9, 137.3, 175.0, 200.0};
  for (double nu : orders) {
    for (double z : args) {
      const double want = oracle::series_bessel_j(nu, z);
      const double got = bessel_j(nu, z);
      INFO("nu=" << nu << " z=" << z << " want=" << want << " got=" << got);
      CHECK(close_j(got, want, 1e-10, 1e-12));
    }
  }
}

TEST_CASE("bessel_n closed-form and boost cross-checks") {
  CHECK(std::abs(bessel_n(0.5, pi / 2)) <= 1e-12);
  CHECK(bessel_n(0.5, pi) == doctest::Approx(0.4501581580785531).epsilon(1e-14));
  // Leading small-argument behaviour -Γ(ν)(2/z)^ν/π; next term is O(z²) relative.
  const double leading = -std::tgamma(1.5) * std::pow(2.0 / 1e-3, 1.5) / pi;
  CHECK(bessel_n(1.5, 1e-3) == doctest::Approx(leading).epsilon(1e-5));
  CHECK(bessel_n(1.5, 1e-3) < -2.5e4);
  CHECK_THROWS_AS(bessel_n(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_n(60.0, 1e-6), OverflowError);

  const double orders[] = {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.5, 4.0, 9.0, 10.5, 17.3, 25.0, 40.5, 60.0};
  const double args[] = {1e-3, 0.01, 0.3, 1.0, 1.99, 2.0, 2.5, 6.1, 13.0, 29.4, 58.0, 111.0, 200.0};
  for (double nu : orders) {
    for (double z : args) {
      const double want = boost::math::cyl_neumann(nu, z);
      if (!std::isfinite(want) || std::abs(want) > 1e300) continue;
      const double got = bessel_n(nu, z);
      INFO("nu=" << nu << " z=" << z << " want=" << want << " got=" << got);
      if (std::abs(want) < 1e-2) {
        CHECK(std::abs(got - want) <= 1e-12);
      } else {
        CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
      }
    }
  }
}

TEST_CASE("Wronskian J N' - J' N = 2/(πz)") {
  for (double nu : {0.0, 0.5, 1.0, 2.5, 7.0, 12.5}) {
    for (double z : {0.7, 2.3, 5.0, 11.0, 30.0}) {
      // Five-point central differences, truncation O(h^4).
      const double h = 1e-3 * std::min(1.0, z / (nu + 1.0));
      auto deriv = [h, z](auto&& f) {
        return (8 * (f(z + h) - f(z - h)) - (f(z + 2 * h) - f(z - 2 * h))) / (12 * h);
      };
      const double jp = deriv([nu](double x) { return bessel_j(nu, x); });
      const double np = deriv([nu](double x) { return bessel_n(nu, x); });
      const double w = bessel_j(nu, z) * np - jp * bessel_n(nu, z);
      const double want = 2.0 / (pi * z);
      INFO("nu=" << nu << " z=" << z);
      CHECK(std::abs(w - want) <= 1e-9 * want);
    }
  }
}

TEST_CASE("gegenbauer") {
  CHECK(gegenbauer(0, 2.3, -0.4) == 1.0);
  CHECK(gegenbauer(1, 0.5, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(std::abs(gegenbauer(2, 1.0, 0.5)) <= 1e-15);
  for (int n = 0; n <= 4; ++n) {
    for (double l : {0.5, 1.0, 1.5, 2.5, -0.25}) {
      for (double t : {-1.0, -0.6, 0.1, 0.77, 1.0}) {
        CHECK(gegenbauer(n, l, t) == doctest::Approx(oracle::gegenbauer_explicit(n, l, t)).epsilon(1e-13));
      }
    }
  }
  // Recurrence identity holds for the returned values.
  for (int n = 2; n <= 30; ++n) {
    const double l = 1.7, t = 0.41;
    const double lhs = n * gegenbauer(n, l, t);
    const double rhs = 2 * (n + l - 1) * t * gegenbauer(n - 1, l, t) - (n + 2 * l - 2) * gegenbauer(n - 2, l, t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gegenbauer(3, 0.0, 0.2), DomainError);
  CHECK_THROWS_AS(gegenbauer(3, -0.5, 0.2), DomainError);
}

TEST_CASE("RadialOrder validation") {
  CHECK(RadialOrder(3, 2).nu() == 2.5);
  CHECK(RadialOrder(4, 1).nu() == 2.0);
  CHECK_THROWS_AS(RadialOrder(1, 0), DomainError);
  CHECK_THROWS_AS(RadialOrder(3, -1), DomainError);
}

TEST_CASE("hyper_j examples") {
  CHECK(std::abs(hyper_j({3, 0}, pi)) <= 1e-10);
  for (int d = 2; d <= 9; ++d) {
    CHECK(hyper_j({d, 0}, 0.0) == doctest::Approx(oracle::surface_measure_closed(d)).epsilon(1e-14));
    CHECK(hyper_j({d, 2}, 0.0) == 0.0);
  }
  CHECK(hyper_j({3, 0}, 0.0) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(hyper_j({2, 3}, 2.5) == doctest::Approx(2 * pi * oracle::series_bessel_j(3.0, 2.5)).epsilon(1e-13));
  // Continuity across the small-argument branch.
  for (int d : {2, 3, 4, 7}) {
    for (int n : {0, 1, 3}) {
      const RadialOrder ord(d, n);
      const double z_edge = std::sqrt(ord.nu() + 1.0);
      const double below = hyper_j(ord, z_edge * (1 - 1e-9));
      const double above = hyper_j(ord, z_edge * (1 + 1e-9));
      CHECK(below == doctest::Approx(above).epsilon(1e-8));
    }
  }
  // Tiny arguments return the analytic limit behaviour, not 0/0.
  CHECK(hyper_j({5, 0}, 1e-12) == doctest::Approx(oracle::surface_measure_closed(5)).epsilon(1e-14));
  CHECK(std::isfinite(hyper_j({6, 4}, 1e-9)));
}

TEST_CASE("hyper_j reduces to 4π j_n and 2π J_n") {
  double worst3 = 0.0;
  for (double z = 0.1; z <= 50.0; z += 0.7) {
    const oracle::SphericalBesselClosedForm sph(z);
    for (int n = 0; n <= 20; ++n) {
      const double want = 4 * pi * sph.j(n);
      if (std::abs(want) <= 4 * pi * 1e-12) continue;
      worst3 = std::max(worst3, std::abs(hyper_j({3, n}, z) - want) / std::abs(want));
    }
  }
  CHECK(worst3 <= 1e-10);
}

TEST_CASE("hyper_n examples") {
  CHECK(hyper_n({2, 0}, 1.0) == doctest::Approx(2 * pi * boost::math::cyl_neumann(0.0, 1.0)).epsilon(1e-13));
  CHECK(std::abs(hyper_n({3, 0}, pi / 2)) <= 1e-10);
  CHECK(hyper_n({3, 0}, 1.3) == doctest::Approx(4 * pi * oracle::spherical_y0(1.3)).epsilon(1e-14));
  const double want = std::pow(2 * pi, 2.5) * boost::math::cyl_neumann(2.5, 3.0) / std::pow(3.0, 1.5);
  CHECK(hyper_n({5, 1}, 3.0) == doctest::Approx(want).epsilon(1e-13));
  CHECK_THROWS_AS(hyper_n({3, 1}, 0.0), DomainError);
}

TEST_CASE("hyper_h1 / hyper_h2") {
  const std::complex<double> h = hyper_h1({3, 0}, 1.0);
  CHECK(h.real() == doctest::Approx(4 * pi * std::sin(1.0)).epsilon(1e-14));
  CHECK(h.imag() == doctest::Approx(-4 * pi * std::cos(1.0)).epsilon(1e-14));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> zdist(0.05, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 6;
    const int n = trial % 9;
    const double z = zdist(rng);
    const RadialOrder ord(d, n);
    const auto h1 = hyper_h1(ord, z);
    const auto h2 = hyper_h2(ord, z);
    CHECK(h1.real() == hyper_j(ord, z));
    CHECK(h1.imag() == hyper_n(ord, z));
    CHECK(h2 == std::conj(h1));
  }
  CHECK_THROWS_AS(hyper_h1({2, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(hyper_h2({2, 0}, 0.0), DomainError);
}

TEST_CASE("radial equation residual is O(h^2)") {
  // r² R'' + (d-1) r R' + (k² r² - n(n+d-2)) R = 0 for R(r) = J_{d,n}(k r).
  for (int d : {2, 3, 4, 6}) {
    for (int n : {0, 1, 4}) {
      const double k = 1.7, r = 2.2;
      const RadialOrder ord(d, n);
      auto residual = [&](double h) {
        auto R = [&](double x) { return hyper_j(ord, k * x); };
        const double d1 = (R(r + h) - R(r - h)) / (2 * h);
        const double d2 = (R(r + h) - 2 * R(r) + R(r - h)) / (h * h);
        return r * r * d2 + (d - 1) * r * d1 + (k * k * r * r - n * (n + d - 2.0)) * R(r);
      };
      const double e1 = std::abs(residual(0.02));
      const double e2 = std::abs(residual(0.01));
      INFO("d=" << d << " n=" << n << " e1=" << e1 << " e2=" << e2);
      CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
    }
  }
}
