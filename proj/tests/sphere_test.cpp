#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"
#include "oracles.hpp"

using namespace hyperhelm;
using namespace hyperhelm::sphere;

namespace {

constexpr double kPi = std::numbers::pi;

PolarPoint polar(double r, std::vector<double> theta) { return PolarPoint{r, std::move(theta)}; }

PolarPoint random_angles(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PolarPoint p;
  p.r = 1.0;
  p.theta.push_back(2.0 * kPi * u(rng));
  for (int i = 2; i < d; ++i) p.theta.push_back(kPi * u(rng));
  return p;
}

std::vector<double> gram_deviation_per_d(int d, int n_max) {
  const QuadratureRule rule = quadrature(d, n_max);
  const HarmonicBasis basis(d, n_max);
  const std::size_t size = basis.size();
  std::vector<double> gram(size * size, 0.0);
  std::vector<double> y(size);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    basis.evaluate(rule.nodes[j].theta, y);
    for (std::size_t a = 0; a < size; ++a) {
      const double wa = rule.weights[j] * y[a];
      for (std::size_t b = a; b < size; ++b) gram[a * size + b] += wa * y[b];
    }
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      worst = std::max(worst, std::abs(gram[a * size + b] - (a == b ? 1.0 : 0.0)));
    }
  }
  return {worst, static_cast<double>(size)};
}

}  // namespace

TEST_CASE("polar_to_cartesian examples") {
  auto x = polar_to_cartesian(polar(1.0, {0.0, kPi / 2}));
  CHECK(x.x[0] == doctest::Approx(0.0));
  CHECK(x.x[1] == doctest::Approx(1.0));
  CHECK(std::abs(x.x[2]) < 1e-15);

  for (int d = 2; d <= 7; ++d) {
    auto e = polar_to_cartesian(polar(1.0, std::vector<double>(static_cast<std::size_t>(d - 1), 0.0)));
    for (int i = 0; i < d - 1; ++i) CHECK(e.x[static_cast<std::size_t>(i)] == 0.0);
    CHECK(e.x.back() == 1.0);
  }

  auto c = polar_to_cartesian(polar(2.0, {kPi / 2}));
  CHECK(c.x[0] == doctest::Approx(2.0));
  CHECK(std::abs(c.x[1]) < 1e-15);
}

TEST_CASE("cartesian_to_polar canonical and inverse examples") {
  auto origin = cartesian_to_polar(CartesianPoint{{0.0, 0.0, 0.0, 0.0}});
  CHECK(origin.r == 0.0);
  for (double t : origin.theta) CHECK(t == 0.0);

  auto p = cartesian_to_polar(CartesianPoint{{0.0, 1.0, 0.0}});
  CHECK(p.r == 1.0);
  CHECK(p.theta[0] == 0.0);
  CHECK(p.theta[1] == doctest::Approx(kPi / 2));

  // On the x_d axis only θ_{d-1} is determined.
  auto south = cartesian_to_polar(CartesianPoint{{0.0, 0.0, 0.0, -2.0}});
  CHECK(south.r == 2.0);
  CHECK(south.theta[2] == doctest::Approx(kPi));
  CHECK(south.theta[0] == 0.0);
  CHECK(south.theta[1] == 0.0);

  // x_1 = x_2 = 0 but x_3 != 0: θ_1 canonical.
  auto q = cartesian_to_polar(CartesianPoint{{0.0, 0.0, 1.0, 1.0}});
  CHECK(q.theta[0] == 0.0);
  CHECK(q.theta[1] == doctest::Approx(0.0));
  CHECK(q.theta[2] == doctest::Approx(kPi / 4));
  CHECK(in_domain(q));
}

TEST_CASE("coordinate round trips") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_fwd = 0.0;
  double worst_angle = 0.0;
  for (int d = 2; d <= 8; ++d) {
    for (int trial = 0; trial < 500; ++trial) {
      CartesianPoint x;
      for (int i = 0; i < d; ++i) x.x.push_back(u(rng));
      if (trial % 5 == 0) x.x[static_cast<std::size_t>(trial / 5 % d)] = 0.0;
      const PolarPoint p = cartesian_to_polar(x);
      REQUIRE(in_domain(p));
      const CartesianPoint back = polar_to_cartesian(p);
      const double scale = x.norm();
      for (int i = 0; i < d; ++i) {
        worst_fwd = std::max(worst_fwd, std::abs(back.x[static_cast<std::size_t>(i)] - x.x[static_cast<std::size_t>(i)]) / scale);
      }

      // Interior angles (away from the axis conventions) also round-trip.
      PolarPoint q = random_angles(rng, d);
      q.r = 0.5 + std::abs(u(rng));
      const PolarPoint q2 = cartesian_to_polar(polar_to_cartesian(q));
      worst_angle = std::max(worst_angle, std::abs(q2.r - q.r));
      for (std::size_t i = 0; i < q.theta.size(); ++i) {
        double diff = std::abs(q2.theta[i] - q.theta[i]);
        if (i == 0) diff = std::min(diff, 2.0 * kPi - diff);
        worst_angle = std::max(worst_angle, diff);
      }
    }
  }
  MESSAGE("cartesian round trip worst " << worst_fwd << ", polar round trip worst " << worst_angle);
  CHECK(worst_fwd <= 1e-12);
  CHECK(worst_angle <= 1e-12);
}

TEST_CASE("surface_measure") {
  CHECK(surface_measure(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(surface_measure(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(surface_measure(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
  for (int ell = 1; ell <= 12; ++ell) {
    CHECK(surface_measure(ell) == doctest::Approx(oracle::surface_measure_closed(ell)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(surface_measure(0), DomainError);

  // ω_3 = 4 vol(B^4), volume by hit-or-miss in [-1, 1]^4.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int total = 400000;
  int hits = 0;
  for (int i = 0; i < total; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double v = u(rng);
      s += v * v;
    }
    if (s <= 1.0) ++hits;
  }
  const double mc = 4.0 * 16.0 * hits / total;
  CHECK(std::abs(mc - surface_measure(4)) / surface_measure(4) < 0.01);
}

TEST_CASE("harmonic_dim and enumeration") {
  CHECK(harmonic_dim(3, 2) == 5);
  CHECK(harmonic_dim(2, 7) == 2);
  CHECK(harmonic_dim(4, 2) == 9);
  CHECK(harmonic_dim(5, 3) == 30);
  CHECK(enumerate_indices(2, 0).size() == 1);
  CHECK(enumerate_indices(3, 1).size() == 3);
  CHECK(enumerate_indices(5, 3).size() == 30);

  for (int d = 2; d <= 8; ++d) {
    for (int n = 0; n <= 12; ++n) {
      const std::int64_t dim = harmonic_dim(d, n);
      CHECK(dim == oracle::harmonic_count(d, n));
      const auto list = enumerate_indices(d, n);
      REQUIRE(static_cast<std::int64_t>(list.size()) == dim);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& idx = list[i];
        CHECK(idx.m == static_cast<std::int64_t>(i) + 1);
        CHECK(idx.n == n);
        CHECK(idx.chain.back() == n);
        CHECK(std::is_sorted(idx.chain.begin(), idx.chain.end()));
        if (i > 0) {
          // Strictly increasing in the (μ_{d-2}, ..., μ_1, sign) order.
          const auto& prev = list[i - 1];
          const auto key = [](const HarmonicIndex& h) {
            std::vector<int> k(h.chain.rbegin(), h.chain.rend());
            k.push_back(h.sign == Sign::kPlus ? 0 : 1);
            return k;
          };
          CHECK(key(prev) < key(idx));
        }
        CHECK(index_from_flat(d, n, idx.m) == idx);
        CHECK(make_index(idx.chain, idx.sign) == idx);
      }
    }
  }
  CHECK_THROWS_AS(harmonic_dim(1, 0), DomainError);
  CHECK_THROWS_AS(harmonic_dim(3, -1), DomainError);
  CHECK_THROWS_AS(harmonic_dim(60, 60), OverflowError);
  CHECK_THROWS_AS(index_from_flat(3, 2, 6), DomainError);
  CHECK_THROWS_AS(index_from_flat(3, 2, 0), DomainError);
  CHECK_THROWS_AS(make_index({2, 1}, Sign::kPlus), DomainError);
  CHECK_THROWS_AS(make_index({0, 1}, Sign::kMinus), DomainError);
}

TEST_CASE("eval_harmonic examples") {
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 6; ++d) {
    const auto idx = enumerate_indices(d, 0).front();
    for (int t = 0; t < 5; ++t) {
      const PolarPoint p = random_angles(rng, d);
      CHECK(eval_harmonic(idx, p.theta) == doctest::Approx(1.0 / std::sqrt(surface_measure(d))).epsilon(1e-14));
    }
  }
  CHECK(eval_harmonic(make_index({1}, Sign::kPlus), std::vector<double>{0.0}) ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));

  // d = 3, n = 1 is √(3/(4π)) times (x_3, x_2, x_1) in enumeration order.
  const double c = std::sqrt(3.0 / (4.0 * kPi));
  const auto deg1 = enumerate_indices(3, 1);
  for (int t = 0; t < 20; ++t) {
    const PolarPoint p = random_angles(rng, 3);
    const CartesianPoint x = polar_to_cartesian(p);
    CHECK(eval_harmonic(deg1[0], p.theta) == doctest::Approx(c * x.x[2]).epsilon(1e-13));
    CHECK(eval_harmonic(deg1[1], p.theta) == doctest::Approx(c * x.x[1]).epsilon(1e-13));
    CHECK(eval_harmonic(deg1[2], p.theta) == doctest::Approx(c * x.x[0]).epsilon(1e-13));
  }

  // Same span as Gram-Schmidt on {x_1, x_2, x_3} under quadrature: the
  // projection matrix onto the orthonormalized linear functions is orthogonal.
  const QuadratureRule rule = quadrature(3, 2);
  double proj[3][3] = {};
  double norms[3] = {};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const CartesianPoint x = polar_to_cartesian(rule.nodes[j]);
    for (int i = 0; i < 3; ++i) {
      norms[i] += rule.weights[j] * x.x[static_cast<std::size_t>(i)] * x.x[static_cast<std::size_t>(i)];
      for (int m = 0; m < 3; ++m) {
        proj[m][i] += rule.weights[j] * eval_harmonic(deg1[static_cast<std::size_t>(m)], rule.nodes[j].theta) *
                      x.x[static_cast<std::size_t>(i)];
      }
    }
  }
  for (int m = 0; m < 3; ++m) {
    double row = 0.0;
    for (int i = 0; i < 3; ++i) row += proj[m][i] * proj[m][i] / norms[i];
    CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("HarmonicBasis matches eval_harmonic and is independent of max_order") {
  std::mt19937_64 rng(17);
  for (int d = 2; d <= 6; ++d) {
    const HarmonicBasis small(d, 3);
    const HarmonicBasis large(d, 7);
    for (int t = 0; t < 5; ++t) {
      const PolarPoint p = random_angles(rng, d);
      const auto ys = small.evaluate(p.theta);
      const auto yl = large.evaluate(p.theta);
      for (std::size_t i = 0; i < ys.size(); ++i) CHECK(ys[i] == yl[i]);
      for (int n = 0; n <= 7; ++n) {
        const auto list = enumerate_indices(d, n);
        for (const auto& idx : list) {
          const double v = yl[large.offset(n) + static_cast<std::size_t>(idx.m - 1)];
          CHECK(std::abs(v - eval_harmonic(idx, p.theta)) <= 1e-12 * std::max(1.0, std::abs(v)));
        }
      }
    }
  }
  const HarmonicBasis basis(4, 2);
  std::vector<double> wrong(basis.size() + 1);
  CHECK_THROWS_AS(basis.evaluate(std::vector<double>{0.1, 0.2, 0.3}, wrong), DomainError);
  CHECK_THROWS_AS(basis.evaluate(std::vector<double>{0.1, 0.2}), DomainError);
}

TEST_CASE("gauss_jacobi moments") {
  for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5}) {
    for (int count : {1, 2, 3, 7, 16, 40}) {
      const GaussRule g = gauss_jacobi(count, alpha);
      REQUIRE(g.nodes.size() == static_cast<std::size_t>(count));
      CHECK(std::is_sorted(g.nodes.begin(), g.nodes.end()));
      for (double w : g.weights) CHECK(w > 0.0);
      for (int k = 0; 2 * k <= 2 * count - 1; ++k) {
        // ∫ t^{2k} (1 - t²)^α dt = B(k + 1/2, α + 1)
        const double exact = boost::math::beta(k + 0.5, alpha + 1.0);
        double sum = 0.0;
        for (int i = 0; i < count; ++i) {
          sum += g.weights[static_cast<std::size_t>(i)] * std::pow(g.nodes[static_cast<std::size_t>(i)], 2 * k);
        }
        CHECK(std::abs(sum - exact) <= 1e-13 * exact * (1 + k));
      }
    }
  }
  CHECK_THROWS_AS(gauss_jacobi(0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_jacobi(3, -1.0), DomainError);
}

TEST_CASE("quadrature weights and means") {
  for (auto [d, order] : {std::pair{2, 10}, {3, 10}, {5, 8}, {4, 0}, {6, 3}}) {
    const QuadratureRule rule = quadrature(d, order);
    CHECK(rule.exact_degree >= 2 * order);
    double sum = 0.0;
    for (double w : rule.weights) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(std::abs(sum - surface_measure(d)) <= 1e-10 * surface_measure(d));
    const auto one = integrate_sphere([](const PolarPoint&) { return std::complex<double>(1.0, 0.0); }, rule);
    CHECK(std::abs(one - surface_measure(d)) <= 1e-10 * surface_measure(d));
    for (const auto& p : rule.nodes) REQUIRE(in_domain(p));
  }
  for (int d = 2; d <= 5; ++d) {
    const QuadratureRule rule = quadrature(d, 4);
    for (const auto& idx : enumerate_indices(d, 1)) {
      const auto mean = integrate_sphere(
          [&](const PolarPoint& p) { return std::complex<double>(eval_harmonic(idx, p.theta), 0.0); }, rule);
      CHECK(std::abs(mean) <= 1e-10);
    }
  }
  const QuadratureRule rule = quadrature(3, 2);
  std::vector<std::complex<double>> short_values(rule.weights.size() - 1);
  CHECK_THROWS_AS(integrate_values(short_values, rule), DomainError);
}

TEST_CASE("orthonormality under product quadrature") {
  for (int d = 2; d <= 5; ++d) {
    const auto result = gram_deviation_per_d(d, 6);
    MESSAGE("d=" << d << " basis size " << result[1] << " max Gram deviation " << result[0]);
    CHECK(result[0] <= 1e-8);
  }
  // |Y|² integrates to 1 through integrate_sphere too.
  const QuadratureRule rule = quadrature(4, 3);
  for (const auto& idx : enumerate_indices(4, 3)) {
    const auto v = integrate_sphere(
        [&](const PolarPoint& p) {
          const double y = eval_harmonic(idx, p.theta);
          return std::complex<double>(y * y, 0.0);
        },
        rule);
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sum rule") {
  std::mt19937_64 rng(23);
  for (int d = 2; d <= 6; ++d) {
    const HarmonicBasis basis(d, 5);
    for (int n = 0; n <= 5; ++n) {
      const double expected = static_cast<double>(harmonic_dim(d, n)) / surface_measure(d);
      for (int t = 0; t < 10; ++t) {
        const auto y = basis.evaluate(random_angles(rng, d).theta);
        double s = 0.0;
        const std::size_t end = basis.offset(n) + static_cast<std::size_t>(harmonic_dim(d, n));
        for (std::size_t i = basis.offset(n); i < end; ++i) s += y[i] * y[i];
        CHECK(std::abs(s - expected) <= 1e-8 * expected);
      }
    }
  }
}

TEST_CASE("harmonicity by Cartesian finite differences") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto list = enumerate_indices(d, n);
      const auto& idx = list[static_cast<std::size_t>(pick(rng)) % list.size()];
      const auto field = [&](const std::vector<double>& x, int power) {
        const PolarPoint p = cartesian_to_polar(CartesianPoint{x});
        return std::pow(p.r, power) * eval_harmonic(idx, p.theta);
      };
      const auto laplacian = [&](const std::vector<double>& x, double h, int power) {
        double s = 0.0;
        const double f0 = field(x, power);
        for (int i = 0; i < d; ++i) {
          auto xp = x;
          auto xm = x;
          xp[static_cast<std::size_t>(i)] += h;
          xm[static_cast<std::size_t>(i)] -= h;
          s += (field(xp, power) - 2.0 * f0 + field(xm, power)) / (h * h);
        }
        return s;
      };
      for (int t = 0; t < 3; ++t) {
        auto x = oracle::random_unit(rng, d);
        for (double& v : x) v *= 0.8;
        const double r1 = std::abs(laplacian(x, 1e-2, n));
        const double r2 = std::abs(laplacian(x, 5e-3, n));
        CHECK(r1 <= 1e-4);
        // O(h²) with a round-off floor: exact for low degree, ratio 4 otherwise.
        CHECK(r2 <= r1 / 3.0 + 1e-8);
        // Negative control: r^{n+1} Y is not harmonic.
        CHECK(std::abs(laplacian(x, 1e-2, n + 1)) > 1e-2);
      }
    }
  }
}

TEST_CASE("integrate_sphere of a plane wave gives the reproducing kernel at the origin") {
  std::mt19937_64 rng(31);
  for (int d = 2; d <= 5; ++d) {
    const QuadratureRule rule = quadrature(d, 24);
    for (double kr : {0.5, 2.0, 7.5}) {
      auto dir = oracle::random_unit(rng, d);
      for (double& v : dir) v *= kr;
      const auto value = integrate_sphere(
          [&](const PolarPoint& p) {
            const CartesianPoint u = polar_to_cartesian(p);
            double phase = 0.0;
            for (int i = 0; i < d; ++i) phase += u.x[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(i)];
            return std::complex<double>(std::cos(phase), std::sin(phase));
          },
          rule);
      const double expected = specfun::hyper_j(specfun::RadialOrder(d, 0), kr);
      CHECK(std::abs(value - expected) <= 1e-10 * surface_measure(d));
      if (d == 3) CHECK(value.real() == doctest::Approx(4.0 * kPi * std::sin(kr) / kr).epsilon(1e-11));
    }
  }
}
