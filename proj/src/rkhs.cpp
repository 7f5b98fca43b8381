#include "hyperhelm/rkhs.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/simd.hpp"
#include "hyperhelm/specfun.hpp"

namespace hyperhelm::rkhs {
namespace {

using cd = std::complex<double>;

// All x_1, then all x_2, ...
std::vector<double> coordinate_major(const std::vector<CartesianPoint>& points, int d) {
  const std::size_t count = points.size();
  std::vector<double> out(count * static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < count; ++j) {
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i) * count + j] = points[j].x[static_cast<std::size_t>(i)];
  }
  return out;
}

void check_k(double k, const char* what) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError(std::string(what) + ": k must be finite and > 0");
}

void check_lambda(double lambda, const char* what) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(what) + ": lambda must be finite and >= 0");
}

// Per-coefficient degree n for the flat layout up to N.
std::vector<int> degrees(int d, int max_order) {
  std::vector<int> out;
  out.reserve(coefficient_count(d, max_order));
  for (int n = 0; n <= max_order; ++n) out.insert(out.end(), static_cast<std::size_t>(sphere::harmonic_dim(d, n)), n);
  return out;
}

Eigen::VectorXd real_part(const std::vector<cd>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].real();
  return out;
}

Eigen::VectorXd imag_part(const std::vector<cd>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].imag();
  return out;
}

std::vector<cd> combine(const Eigen::VectorXd& re, const Eigen::VectorXd& im) {
  std::vector<cd> out(static_cast<std::size_t>(re.size()));
  for (Eigen::Index i = 0; i < re.size(); ++i) out[static_cast<std::size_t>(i)] = {re[i], im[i]};
  return out;
}

}  // namespace

std::size_t SHExpansion::index(int n, std::int64_t m) const {
  if (n < 0 || n > max_order) throw DomainError("SHExpansion: n outside 0.." + std::to_string(max_order));
  if (m < 1 || m > sphere::harmonic_dim(d, n)) throw DomainError("SHExpansion: m outside 1..dim");
  return coefficient_count(d, n - 1) + static_cast<std::size_t>(m - 1);
}

std::size_t coefficient_count(int d, int max_order) {
  std::size_t total = 0;
  for (int n = 0; n <= max_order; ++n) total += static_cast<std::size_t>(sphere::harmonic_dim(d, n));
  return total;
}

void validate(const FieldSamples& samples, int d) {
  check_k(samples.k, "FieldSamples");
  if (d < 2) throw DomainError("FieldSamples: d must be >= 2");
  if (samples.points.empty()) throw DomainError("FieldSamples: need at least one sample");
  if (samples.points.size() != samples.pressures.size()) {
    throw DomainError("FieldSamples: " + std::to_string(samples.points.size()) + " points but " +
                      std::to_string(samples.pressures.size()) + " pressures");
  }
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    const auto& p = samples.points[i];
    if (p.dim() != d) throw DomainError("FieldSamples: point " + std::to_string(i) + " is not of dimension d");
    for (double v : p.x) {
      if (!std::isfinite(v)) throw DomainError("FieldSamples: non-finite coordinate at point " + std::to_string(i));
    }
    if (!std::isfinite(samples.pressures[i].real()) || !std::isfinite(samples.pressures[i].imag())) {
      throw DomainError("FieldSamples: non-finite pressure at sample " + std::to_string(i));
    }
  }
  std::vector<std::size_t> order(samples.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return samples.points[a].x < samples.points[b].x; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (samples.points[order[i]].x == samples.points[order[i - 1]].x) {
      throw DomainError("FieldSamples: duplicate sample points " + std::to_string(order[i - 1]) + " and " +
                        std::to_string(order[i]));
    }
  }
}

double kernel(int d, double k, const CartesianPoint& r, const CartesianPoint& rp) {
  check_k(k, "kernel");
  if (r.dim() != d || rp.dim() != d) throw DomainError("kernel: points must have dimension d");
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double diff = r.x[static_cast<std::size_t>(i)] - rp.x[static_cast<std::size_t>(i)];
    s += diff * diff;
  }
  return specfun::hyper_j(specfun::RadialOrder(d, 0), k * std::sqrt(s));
}

Eigen::MatrixXd gram(int d, double k, const std::vector<CartesianPoint>& points) {
  check_k(k, "gram");
  const std::size_t count = points.size();
  for (const auto& p : points) {
    if (p.dim() != d) throw DomainError("gram: points must have dimension d");
  }
  const auto cm = coordinate_major(points, d);
  const specfun::RadialOrder ord(d, 0);
  Eigen::MatrixXd g(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
  std::vector<double> dist2(count);
  for (std::size_t a = 0; a < count; ++a) {
    simd::squared_distances(cm, count, points[a].x, dist2);
    for (std::size_t b = 0; b < count; ++b) {
      g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = specfun::hyper_j(ord, k * std::sqrt(dist2[b]));
    }
  }
  return g;
}

double default_lambda(int d) { return 1e-8 * sphere::surface_measure(d); }

double condition_number(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetric, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

KernelEstimate fit(const FieldSamples& samples, int d, double lambda) {
  validate(samples, d);
  check_lambda(lambda, "fit");
  const auto count = static_cast<Eigen::Index>(samples.points.size());
  Eigen::MatrixXd g = gram(d, samples.k, samples.points);
  g.diagonal().array() += lambda;
  const Eigen::VectorXd re = real_part(samples.pressures);
  const Eigen::VectorXd im = imag_part(samples.pressures);

  KernelEstimate est;
  est.k = samples.k;
  est.d = d;
  est.centers = samples.points;
  est.lambda = lambda;

  Eigen::LLT<Eigen::MatrixXd> llt(g);
  const double floor = static_cast<double>(count) * std::numeric_limits<double>::epsilon();
  if (llt.info() == Eigen::Success && (lambda > 0.0 || llt.rcond() >= floor)) {
    est.weights = combine(llt.solve(re), llt.solve(im));
    return est;
  }
  if (lambda == 0.0) {
    throw SingularSystemError("fit: Gram matrix is singular or numerically ill-conditioned at lambda = 0; use lambda > 0");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  if (eig.info() != Eigen::Success) throw SingularSystemError("fit: eigen-decomposition of the Gram matrix failed");
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double threshold = 1e-12 * values.maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    if (values[i] > threshold) inv[i] = 1.0 / values[i];
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const auto apply = [&](const Eigen::VectorXd& rhs) -> Eigen::VectorXd {
    return v * inv.cwiseProduct(v.transpose() * rhs);
  };
  est.weights = combine(apply(re), apply(im));
  return est;
}

std::vector<cd> evaluate(const KernelEstimate& est, const std::vector<CartesianPoint>& points) {
  check_k(est.k, "evaluate");
  if (est.centers.size() != est.weights.size()) throw DomainError("evaluate: centers and weights differ in length");
  const std::size_t count = est.centers.size();
  const auto cm = coordinate_major(est.centers, est.d);
  const specfun::RadialOrder ord(est.d, 0);
  std::vector<double> dist2(count);
  std::vector<double> kern(count);
  std::vector<cd> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != est.d) throw DomainError("evaluate: point dimension does not match the estimate");
    simd::squared_distances(cm, count, p.x, dist2);
    for (std::size_t j = 0; j < count; ++j) kern[j] = specfun::hyper_j(ord, est.k * std::sqrt(dist2[j]));
    out.push_back(simd::dot_real_complex(kern, est.weights));
  }
  return out;
}

cd evaluate(const KernelEstimate& est, const CartesianPoint& r) { return evaluate(est, std::vector{r}).front(); }

SHExpansion to_sh_expansion(const KernelEstimate& est, int max_order) {
  check_k(est.k, "to_sh_expansion");
  if (max_order < 0) throw DomainError("to_sh_expansion: N must be >= 0");
  if (est.centers.size() != est.weights.size()) throw DomainError("to_sh_expansion: centers and weights differ in length");
  SHExpansion out;
  out.k = est.k;
  out.d = est.d;
  out.max_order = max_order;
  out.kind = BasisKind::kInterior;
  const sphere::HarmonicBasis basis(est.d, max_order);
  out.coefficients.assign(basis.size(), cd(0.0, 0.0));
  const auto deg = degrees(est.d, max_order);
  std::vector<double> y(basis.size());
  std::vector<double> radial(static_cast<std::size_t>(max_order) + 1);
  for (std::size_t l = 0; l < est.centers.size(); ++l) {
    const sphere::PolarPoint p = sphere::cartesian_to_polar(est.centers[l]);
    for (int n = 0; n <= max_order; ++n) {
      radial[static_cast<std::size_t>(n)] = specfun::hyper_j(specfun::RadialOrder(est.d, n), est.k * p.r);
    }
    basis.evaluate(p.theta, y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= radial[static_cast<std::size_t>(deg[i])];
    simd::axpy_complex(est.weights[l], y, out.coefficients);
  }
  return out;
}

cd eval_sh(const SHExpansion& expansion, const sphere::PolarPoint& p) {
  check_k(expansion.k, "eval_sh");
  if (p.dim() != expansion.d) throw DomainError("eval_sh: point dimension does not match the expansion");
  if (expansion.coefficients.size() != coefficient_count(expansion.d, expansion.max_order)) {
    throw DomainError("eval_sh: coefficient count does not match max_order");
  }
  if (expansion.kind == BasisKind::kExterior && !(p.r > 0.0)) {
    throw DomainError("eval_sh: exterior expansion is singular at r = 0");
  }
  const sphere::HarmonicBasis basis(expansion.d, expansion.max_order);
  const auto y = basis.evaluate(p.theta);
  const std::span<const double> ys(y);
  const std::span<const cd> bs(expansion.coefficients);
  cd total = 0.0;
  for (int n = expansion.max_order; n >= 0; --n) {
    const std::size_t begin = basis.offset(n);
    const auto len = static_cast<std::size_t>(sphere::harmonic_dim(expansion.d, n));
    const cd angular = simd::dot_real_complex(ys.subspan(begin, len), bs.subspan(begin, len));
    const specfun::RadialOrder ord(expansion.d, n);
    const cd radial = expansion.kind == BasisKind::kInterior ? cd(specfun::hyper_j(ord, expansion.k * p.r), 0.0)
                                                             : specfun::hyper_h1(ord, expansion.k * p.r);
    total += radial * angular;
  }
  return total;
}

SHExpansion fit_sh_direct(const FieldSamples& samples, int d, int max_order, double lambda) {
  validate(samples, d);
  check_lambda(lambda, "fit_sh_direct");
  if (max_order < 0) throw DomainError("fit_sh_direct: N must be >= 0");
  const sphere::HarmonicBasis basis(d, max_order);
  const auto cols = static_cast<Eigen::Index>(basis.size());
  const auto rows = static_cast<Eigen::Index>(samples.points.size());
  const auto deg = degrees(d, max_order);

  Eigen::MatrixXd phi(rows, cols);
  std::vector<double> y(basis.size());
  for (Eigen::Index l = 0; l < rows; ++l) {
    const sphere::PolarPoint p = sphere::cartesian_to_polar(samples.points[static_cast<std::size_t>(l)]);
    basis.evaluate(p.theta, y);
    for (Eigen::Index i = 0; i < cols; ++i) {
      const int n = deg[static_cast<std::size_t>(i)];
      phi(l, i) = specfun::hyper_j(specfun::RadialOrder(d, n), samples.k * p.r) * y[static_cast<std::size_t>(i)];
    }
  }
  const Eigen::VectorXd re = real_part(samples.pressures);
  const Eigen::VectorXd im = imag_part(samples.pressures);

  SHExpansion out;
  out.k = samples.k;
  out.d = d;
  out.max_order = max_order;
  out.kind = BasisKind::kInterior;
  if (lambda == 0.0) {
    if (rows < cols) {
      throw SingularSystemError("fit_sh_direct: " + std::to_string(rows) + " samples for " + std::to_string(cols) +
                                " coefficients is rank deficient at lambda = 0; use lambda > 0 or lower N");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(phi);
    if (qr.rank() < cols) {
      throw SingularSystemError("fit_sh_direct: design matrix has rank " + std::to_string(qr.rank()) + " < " +
                                std::to_string(cols) + " at lambda = 0; use lambda > 0 or lower N");
    }
    out.coefficients = combine(qr.solve(re), qr.solve(im));
    return out;
  }
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(rows + cols, cols);
  aug.topRows(rows) = phi;
  aug.bottomRows(cols).diagonal().setConstant(std::sqrt(lambda));
  Eigen::VectorXd rhs_re = Eigen::VectorXd::Zero(rows + cols);
  Eigen::VectorXd rhs_im = Eigen::VectorXd::Zero(rows + cols);
  rhs_re.head(rows) = re;
  rhs_im.head(rows) = im;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(aug);
  out.coefficients = combine(qr.solve(rhs_re), qr.solve(rhs_im));
  return out;
}

}  // namespace hyperhelm::rkhs
