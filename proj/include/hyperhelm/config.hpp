#pragma once

// Reconstruction experiment description, read from a JSON file. The schema
// is documented in README.md; unknown keys are rejected.

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperhelm/sphere.hpp"

namespace hyperhelm::config {

struct SourceSpec {
  enum class Kind { kPlaneWave, kInteriorMode, kSuperposition };
  struct Term;

  Kind kind = Kind::kPlaneWave;
  std::vector<double> direction;  // d-1 angles
  int n = 0;
  std::int64_t m = 1;
  std::vector<Term> terms;
};

struct SourceSpec::Term {
  std::complex<double> weight;
  SourceSpec source;
};

struct ArraySpec {
  enum class Kind { kRandomBall, kGrid, kExplicit };
  Kind kind = Kind::kRandomBall;
  int count = 0;
  double radius = 0.0;
  std::uint64_t rng_seed = 0;
  double spacing = 0.0;
  std::vector<sphere::CartesianPoint> points;
};

struct ExperimentConfig {
  int d = 3;
  double k = 1.0;
  SourceSpec source;
  ArraySpec array;
  double noise_std = 0.0;
  std::uint64_t noise_seed = 1;
  std::optional<double> lambda;  // empty: "auto"
  double eval_resolution = 0.25;
  double eval_radius = 1.0;
  std::optional<int> truncation;  // empty: "auto"
  std::vector<int> drift_orders{2, 8};
  std::optional<double> direct_lambda;
  std::optional<double> tolerance;
};

// Throws DomainError with the offending key on any schema violation.
ExperimentConfig parse(std::string_view json_text);

std::complex<double> source_value(const SourceSpec& source, int d, double k, const sphere::CartesianPoint& x);

// Cartesian grid of the given spacing centred on the origin, clipped to the
// closed ball; points in lexicographic order of their integer indices.
std::vector<sphere::CartesianPoint> ball_grid(int d, double radius, double spacing);

std::vector<sphere::CartesianPoint> array_points(const ArraySpec& array, int d);

// ω_{d-1} max(1e-8, noise_std / 10) for "auto", else the configured value.
double resolve_lambda(const ExperimentConfig& cfg);

// N*(k, R) for "auto", R the largest |r| among samples and the evaluation ball.
int resolve_truncation(const ExperimentConfig& cfg, const std::vector<sphere::CartesianPoint>& samples);

}  // namespace hyperhelm::config
