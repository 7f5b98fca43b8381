#pragma once

#include <optional>
#include <string>

#include <CLI11.hpp>

namespace hyperhelm::cli {

enum ExitCode { kOk = 0, kNumericFailure = 1, kUsage = 2 };

// Usage errors: bad flags, bad parameter combinations, bad config.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  std::string function;
  int d = 3;
  int n = 0;
  double lambda = 1.0;
  std::optional<double> from, to, step;
  int n_max = 10;
  std::string out;
};

struct VerifyOptions {
  std::string suite;
  int d = 3;
  double k = 1.0;
  std::optional<int> order;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::optional<int> n_max;
  std::optional<int> count;
  std::optional<double> radius;
  std::string out;
};

struct ReconstructOptions {
  std::string config;
  std::string out_dir;
};

struct DimsOptions {
  int d_min = 2;
  int d_max = 8;
  int n_max = 10;
  std::string out;
};

int run_eval(const EvalOptions& o);
int run_verify(const VerifyOptions& o);
int run_reconstruct(const ReconstructOptions& o);
int run_dims(const DimsOptions& o);

// Writes `text` to `path`, or stdout if `path` is empty.
void emit(const std::string& path, const std::string& text);

}  // namespace hyperhelm::cli
