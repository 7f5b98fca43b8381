#include <algorithm>
#include <cmath>
#include <numbers>

#include "commands.hpp"
#include "csv.hpp"
#include "hyperhelm/identities.hpp"
#include "hyperhelm/rng.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"

namespace hyperhelm::cli {
namespace {

using cd = std::complex<double>;
using sphere::CartesianPoint;

class Report {
 public:
  Report() : csv_({"case", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "metric", "bound", "pass"}) {}

  void add(const std::string& name, cd lhs, cd rhs, double metric, const std::string& bound, bool pass) {
    const double abs_err = std::abs(lhs - rhs);
    const double rel_err = abs_err / std::max(std::abs(lhs), 1e-300);
    csv_.add(CsvRow() << name << lhs << rhs << abs_err << rel_err << metric << bound << (pass ? "1" : "0"));
    all_ &= pass;
  }

  void add(const std::string& name, const identities::IdentityReport& r, double metric, double tol) {
    add(name, r.lhs, r.rhs, metric, io::format_double(tol), metric <= tol);
  }

  int finish(const std::string& out) const {
    emit(out, csv_.text());
    return all_ ? kOk : kNumericFailure;
  }

 private:
  Csv csv_;
  bool all_ = true;
};

std::string fmt(double v) { return io::format_double(v); }

CartesianPoint scaled(std::vector<double> u, double s) {
  for (double& v : u) v *= s;
  return CartesianPoint{std::move(u)};
}

std::int64_t pick(Rng& rng, std::int64_t count) {
  return static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(count)) + 1;
}

int addition(const VerifyOptions& o) {
  const double radius = o.radius.value_or(5.0 / o.k);
  const int order = o.order.value_or(identities::truncation_order(o.k, radius));
  const double tol = o.tol.value_or(1e-8);
  Rng rng(o.seed);
  Report rep;
  for (int c = 0; c < o.count.value_or(100); ++c) {
    const CartesianPoint r{rng.in_ball(o.d, radius)};
    const CartesianPoint rp{rng.in_ball(o.d, radius)};
    const auto res = identities::addition_theorem(o.d, o.k, r, rp, order);
    rep.add("pair=" + std::to_string(c) + ";N=" + std::to_string(order), res, res.rel_err, tol);
  }
  return rep.finish(o.out);
}

int funk_hecke(const VerifyOptions& o) {
  if (o.d < 3) throw UsageError("funk-hecke: unsupported for d=2");
  const int n_max = o.n_max.value_or(5);
  const double tol = o.tol.value_or(1e-8);
  const double a_max = 7.0 * o.k;
  const auto rule = sphere::quadrature(o.d, std::max(30, static_cast<int>(std::ceil(a_max)) + n_max + 25));
  const int exp_nodes = static_cast<int>(std::ceil(a_max)) + n_max + 33;
  Rng rng(o.seed);
  Report rep;
  for (int n = 0; n <= n_max; ++n) {
    const auto idx = sphere::index_from_flat(o.d, n, pick(rng, sphere::harmonic_dim(o.d, n)));
    const auto dir = sphere::cartesian_to_polar(CartesianPoint{rng.unit_vector(o.d)}).theta;
    std::vector<double> c(7);
    for (double& v : c) v = 2.0 * rng.uniform() - 1.0;
    const auto poly = [&](double t) {
      double s = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
      return cd(s, 0.0);
    };
    const std::string tag = "n=" + std::to_string(n) + ";m=" + std::to_string(idx.m);
    const auto rp = identities::funk_hecke(poly, idx, dir, rule, 8);
    rep.add(tag + ";profile=poly6", rp, rp.rel_err, tol);
    for (double a : {o.k, 3.0 * o.k, a_max}) {
      const auto re = identities::funk_hecke([&](double t) { return cd(std::cos(a * t), std::sin(a * t)); }, idx, dir,
                                             rule, exp_nodes);
      rep.add(tag + ";profile=exp;a=" + fmt(a), re, re.rel_err, tol);
    }
  }
  return rep.finish(o.out);
}

int gegenbauer(const VerifyOptions& o) {
  const int n_max = o.n_max.value_or(6);
  const double tol = o.tol.value_or(1e-8);
  Report rep;
  for (double nu : {0.5, 1.0, 1.5, 2.5}) {
    for (int n = 0; n <= n_max; ++n) {
      for (int i = 1; i <= 80; ++i) {
        const double x = 0.25 * i;
        const auto r = identities::gegenbauer_bessel(nu, n, x, static_cast<int>(std::ceil(x)) + n + 10);
        rep.add("nu=" + fmt(nu) + ";n=" + std::to_string(n) + ";x=" + fmt(x), r, r.rel_err, tol);
      }
    }
  }
  return rep.finish(o.out);
}

int plane_wave(const VerifyOptions& o) {
  const double radius = o.radius.value_or(5.0 / o.k);
  const double tol = o.tol.value_or(1e-9);
  Rng rng(o.seed);
  Report rep;
  for (int c = 0; c < o.count.value_or(100); ++c) {
    const auto kvec = scaled(rng.unit_vector(o.d), o.k);
    const CartesianPoint r{rng.in_ball(o.d, radius)};
    double norm = 0.0;
    double phase = 0.0;
    for (int i = 0; i < o.d; ++i) {
      norm += r.x[static_cast<std::size_t>(i)] * r.x[static_cast<std::size_t>(i)];
      phase += kvec.x[static_cast<std::size_t>(i)] * r.x[static_cast<std::size_t>(i)];
    }
    const int order = o.order.value_or(identities::truncation_order(o.k, std::sqrt(norm)));
    const cd lhs = identities::plane_wave_truncated(kvec, r, order);
    const cd rhs{std::cos(phase), std::sin(phase)};
    const double err = std::abs(lhs - rhs);
    rep.add("point=" + std::to_string(c) + ";kr=" + fmt(o.k * std::sqrt(norm)) + ";N=" + std::to_string(order), lhs,
            rhs, err, fmt(tol), err <= tol);
  }
  return rep.finish(o.out);
}

int orthonormality(const VerifyOptions& o) {
  const int n_max = o.n_max.value_or(6);
  const double tol = o.tol.value_or(1e-10);
  if (n_max < 0) throw UsageError("--n-max must be >= 0");
  const auto rule = sphere::quadrature(o.d, n_max);
  const sphere::HarmonicBasis basis(o.d, n_max);
  const std::size_t size = basis.size();
  std::vector<double> gram(size * size, 0.0);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const auto y = basis.evaluate(rule.nodes[j].theta);
    for (std::size_t a = 0; a < size; ++a) {
      const double wa = rule.weights[j] * y[a];
      for (std::size_t b = a; b < size; ++b) gram[a * size + b] += wa * y[b];
    }
  }
  Report rep;
  std::size_t a = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (std::int64_t m = 1; m <= sphere::harmonic_dim(o.d, n); ++m, ++a) {
      double worst = 0.0;
      for (std::size_t b = 0; b < size; ++b) {
        const double g = a <= b ? gram[a * size + b] : gram[b * size + a];
        worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
      }
      rep.add("n=" + std::to_string(n) + ";m=" + std::to_string(m), gram[a * size + a], 1.0, worst, fmt(tol),
              worst <= tol);
    }
  }
  return rep.finish(o.out);
}

// |remainder(kr = 10)| / |remainder(kr = 1000)|: at least 3 for the outgoing
// wave, at most 1.5 for the incoming one.
int radiation(const VerifyOptions& o) {
  const int n_max = o.n_max.value_or(3);
  Report rep;
  for (const auto kind : {identities::HankelKind::kFirst, identities::HankelKind::kSecond}) {
    const bool outgoing = kind == identities::HankelKind::kFirst;
    for (int n = 0; n <= n_max; ++n) {
      const cd near = identities::radiation_remainder(o.d, n, o.k, 10.0 / o.k, kind);
      const cd far = identities::radiation_remainder(o.d, n, o.k, 1000.0 / o.k, kind);
      const double ratio = std::abs(near) / std::max(std::abs(far), 1e-300);
      const bool pass = outgoing ? ratio >= 3.0 : ratio <= 1.5;
      rep.add(std::string(outgoing ? "h1" : "h2") + ";n=" + std::to_string(n), near, far, ratio,
              outgoing ? ">=3" : "<=1.5", pass);
    }
  }
  return rep.finish(o.out);
}

// Ratio of the finite-difference residual at h = 0.05/k and h/2.
int helmholtz(const VerifyOptions& o) {
  const int n_max = o.n_max.value_or(3);
  const double k = o.k;
  const double h = 0.05 / k;
  const double r_min = 0.5 / k;
  const double r_max = o.radius.value_or(3.0 / k);
  if (!(r_max > r_min)) throw UsageError("--radius must exceed 0.5/k");
  Rng rng(o.seed);
  Report rep;
  const auto check = [&](const std::string& name, const identities::Field& f, const CartesianPoint& x) {
    const cd coarse = identities::helmholtz_residual(f, k, x, h);
    const cd fine = identities::helmholtz_residual(f, k, x, h / 2);
    const double ratio = std::abs(coarse) / std::max(std::abs(fine), 1e-300);
    rep.add(name, coarse, fine, ratio, "3.5..4.5", ratio >= 3.5 && ratio <= 4.5);
  };
  for (int c = 0; c < o.count.value_or(5); ++c) {
    const auto x = scaled(rng.unit_vector(o.d), r_min + (r_max - r_min) * rng.uniform());
    const auto kvec = scaled(rng.unit_vector(o.d), k);
    const std::string at = "point=" + std::to_string(c);
    check(at + ";field=plane_wave", [&](const CartesianPoint& y) {
      double phase = 0.0;
      for (int i = 0; i < o.d; ++i) phase += kvec.x[static_cast<std::size_t>(i)] * y.x[static_cast<std::size_t>(i)];
      return cd(std::cos(phase), std::sin(phase));
    }, x);
    for (int n = 0; n <= n_max; ++n) {
      const auto idx = sphere::index_from_flat(o.d, n, pick(rng, sphere::harmonic_dim(o.d, n)));
      const specfun::RadialOrder ord(o.d, n);
      const std::string tag = ";n=" + std::to_string(n) + ";m=" + std::to_string(idx.m);
      check(at + ";field=J" + tag, [&](const CartesianPoint& y) {
        const auto p = sphere::cartesian_to_polar(y);
        return cd(specfun::hyper_j(ord, k * p.r) * sphere::eval_harmonic(idx, p.theta), 0.0);
      }, x);
      check(at + ";field=H1" + tag, [&](const CartesianPoint& y) {
        const auto p = sphere::cartesian_to_polar(y);
        return specfun::hyper_h1(ord, k * p.r) * sphere::eval_harmonic(idx, p.theta);
      }, x);
    }
  }
  return rep.finish(o.out);
}

}  // namespace

int run_verify(const VerifyOptions& o) {
  if (o.d < 2 || o.d > 16) throw UsageError("--d must be in 2..16");
  if (!(o.k > 0.0) || !std::isfinite(o.k)) throw UsageError("--k must be > 0");
  if (o.order && *o.order < 0) throw UsageError("--N must be >= 0");
  if (o.tol && !(*o.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (o.n_max && *o.n_max < 0) throw UsageError("--n-max must be >= 0");
  if (o.count && *o.count < 1) throw UsageError("--count must be >= 1");
  if (o.radius && !(*o.radius > 0.0)) throw UsageError("--radius must be > 0");

  if (o.suite == "addition") return addition(o);
  if (o.suite == "funk-hecke") return funk_hecke(o);
  if (o.suite == "gegenbauer") return gegenbauer(o);
  if (o.suite == "plane-wave") return plane_wave(o);
  if (o.suite == "orthonormality") return orthonormality(o);
  if (o.suite == "radiation") return radiation(o);
  return helmholtz(o);
}

}  // namespace hyperhelm::cli
