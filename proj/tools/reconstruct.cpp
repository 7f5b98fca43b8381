#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "csv.hpp"
#include "hyperhelm/config.hpp"
#include "hyperhelm/errors.hpp"
#include "hyperhelm/io.hpp"
#include "hyperhelm/rkhs.hpp"
#include "hyperhelm/rng.hpp"

namespace hyperhelm::cli {
namespace {

using cd = std::complex<double>;
using sphere::CartesianPoint;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void add_coefficients(Csv& csv, const char* route, int order, const rkhs::SHExpansion& e) {
  std::size_t i = 0;
  for (int n = 0; n <= e.max_order; ++n) {
    for (std::int64_t m = 1; m <= sphere::harmonic_dim(e.d, n); ++m, ++i) {
      csv.add(CsvRow() << route << order << n << m << e.coefficients[i]);
    }
  }
}

double relative_l2(const std::vector<cd>& est, const std::vector<cd>& truth) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    num += std::norm(est[i] - truth[i]);
    den += std::norm(truth[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace

int run_reconstruct(const ReconstructOptions& o) {
  // Anything wrong up to here is a usage error.
  config::ExperimentConfig cfg;
  rkhs::FieldSamples samples;
  std::vector<CartesianPoint> grid;
  int order = 0;
  double lambda = 0.0;
  double direct_lambda = 0.0;
  try {
    cfg = config::parse(read_file(o.config));
    samples.k = cfg.k;
    samples.points = config::array_points(cfg.array, cfg.d);
    Rng noise(cfg.noise_seed);
    for (const auto& p : samples.points) {
      cd v = config::source_value(cfg.source, cfg.d, cfg.k, p);
      if (cfg.noise_std > 0.0) {
        const double re = noise.normal();
        const double im = noise.normal();
        v += cfg.noise_std * cd(re, im);
      }
      samples.pressures.push_back(v);
    }
    rkhs::validate(samples, cfg.d);
    grid = config::ball_grid(cfg.d, cfg.eval_radius, cfg.eval_resolution);
    order = config::resolve_truncation(cfg, samples.points);
    lambda = config::resolve_lambda(cfg);
    direct_lambda = cfg.direct_lambda.value_or(rkhs::default_lambda(cfg.d));
    std::filesystem::create_directories(o.out_dir);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    throw UsageError(e.what());
  }
  const std::filesystem::path dir(o.out_dir);
  const int d = cfg.d;

  rkhs::KernelEstimate est;
  try {
    est = rkhs::fit(samples, d, lambda);
  } catch (const SingularSystemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericFailure;
  }

  {
    auto h = coordinate_header(d);
    h.insert(h.end(), {"re", "im"});
    Csv csv(h);
    for (std::size_t i = 0; i < samples.points.size(); ++i) csv.add(CsvRow() << samples.points[i].x << samples.pressures[i]);
    emit((dir / "samples.csv").string(), csv.text());
  }
  {
    auto h = coordinate_header(d);
    h.insert(h.begin(), "index");
    h.insert(h.end(), {"re", "im"});
    Csv csv(h);
    for (std::size_t i = 0; i < est.centers.size(); ++i) csv.add(CsvRow() << i << est.centers[i].x << est.weights[i]);
    emit((dir / "weights.csv").string(), csv.text());
  }

  const auto at_samples = rkhs::evaluate(est, samples.points);
  double residual = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < at_samples.size(); ++i) {
    residual = std::max(residual, std::abs(at_samples[i] - samples.pressures[i]));
    scale = std::max(scale, std::abs(samples.pressures[i]));
  }
  if (scale > 0.0) residual /= scale;

  std::vector<cd> truth;
  for (const auto& p : grid) truth.push_back(config::source_value(cfg.source, d, cfg.k, p));
  const auto field = rkhs::evaluate(est, grid);
  const auto expansion = rkhs::to_sh_expansion(est, order);
  std::vector<cd> field_sh;
  for (const auto& p : grid) field_sh.push_back(rkhs::eval_sh(expansion, sphere::cartesian_to_polar(p)));
  double max_abs = 0.0;
  {
    auto h = coordinate_header(d);
    h.insert(h.end(), {"re_truth", "im_truth", "re_est", "im_est", "abs_err"});
    Csv csv(h);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double err = std::abs(field[i] - truth[i]);
      max_abs = std::max(max_abs, err);
      csv.add(CsvRow() << grid[i].x << truth[i] << field[i] << err);
    }
    emit((dir / "field_error.csv").string(), csv.text());
  }

  {
    std::set<int> orders(cfg.drift_orders.begin(), cfg.drift_orders.end());
    orders.insert(order);
    Csv csv({"route", "N", "n", "m", "re", "im"});
    for (int n : orders) add_coefficients(csv, "rk", n, rkhs::to_sh_expansion(est, n));
    for (int n : orders) {
      try {
        add_coefficients(csv, "direct", n, rkhs::fit_sh_direct(samples, d, n, direct_lambda));
      } catch (const SingularSystemError& e) {
        std::cerr << "error: direct route at N=" << n << ": " << e.what() << '\n';
        return kNumericFailure;
      }
    }
    emit((dir / "coefficients.csv").string(), csv.text());
  }

  {
    std::ostringstream a;
    io::write_kernel_estimate(a, est);
    emit((dir / "estimate.txt").string(), a.str());
    std::ostringstream b;
    io::write_sh_expansion(b, expansion);
    emit((dir / "expansion.txt").string(), b.str());
  }

  Eigen::MatrixXd g = rkhs::gram(d, cfg.k, samples.points);
  g.diagonal().array() += lambda;
  const double rel_l2 = relative_l2(field, truth);
  const double rel_l2_sh = relative_l2(field_sh, truth);
  {
    Csv csv({"metric", "value"});
    csv.add(CsvRow() << "d" << d);
    csv.add(CsvRow() << "k" << cfg.k);
    csv.add(CsvRow() << "samples" << samples.points.size());
    csv.add(CsvRow() << "grid_points" << grid.size());
    csv.add(CsvRow() << "lambda" << lambda);
    csv.add(CsvRow() << "condition_number" << rkhs::condition_number(g));
    csv.add(CsvRow() << "interpolation_residual" << residual);
    csv.add(CsvRow() << "N" << order);
    csv.add(CsvRow() << "relative_l2_error" << rel_l2);
    csv.add(CsvRow() << "relative_l2_error_sh" << rel_l2_sh);
    csv.add(CsvRow() << "max_abs_error" << max_abs);
    emit((dir / "summary.csv").string(), csv.text());
  }

  if (cfg.tolerance && !(rel_l2 <= *cfg.tolerance)) {
    std::cerr << "error: relative L2 error " << io::format_double(rel_l2) << " exceeds tolerance "
              << io::format_double(*cfg.tolerance) << '\n';
    return kNumericFailure;
  }
  return kOk;
}

}  // namespace hyperhelm::cli
