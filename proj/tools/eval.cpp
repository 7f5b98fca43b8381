#include <cmath>

#include "commands.hpp"
#include "csv.hpp"
#include "hyperhelm/specfun.hpp"
#include "hyperhelm/sphere.hpp"

namespace hyperhelm::cli {
namespace {

constexpr long kMaxRows = 10'000'000;

std::vector<double> abscissae(const EvalOptions& o) {
  if (!o.from || !o.to || !o.step) throw UsageError(o.function + " needs --from, --to and --step");
  const double from = *o.from, to = *o.to, step = *o.step;
  if (!std::isfinite(from) || !std::isfinite(to) || !(step > 0.0) || !std::isfinite(step)) {
    throw UsageError("--from/--to must be finite and --step > 0");
  }
  if (to < from) throw UsageError("--to must be >= --from");
  const double span = (to - from) / step;
  if (span >= kMaxRows) throw UsageError("too many rows; increase --step");
  // Tolerate rounding in (to - from) / step so that the endpoint is kept.
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> z;
  for (long i = 0; i < count; ++i) z.push_back(from + static_cast<double>(i) * step);
  return z;
}

}  // namespace

int run_eval(const EvalOptions& o) {
  if (o.function == "harmonic_dim") {
    if (o.n_max < 0) throw UsageError("--n-max must be >= 0");
    Csv csv({"n", "dim"});
    for (int n = 0; n <= o.n_max; ++n) csv.add(CsvRow() << n << sphere::harmonic_dim(o.d, n));
    emit(o.out, csv.text());
    return kOk;
  }

  const auto z = abscissae(o);
  if (o.function == "gegenbauer") {
    Csv csv({"t", "value"});
    for (double t : z) csv.add(CsvRow() << t << specfun::gegenbauer(o.n, o.lambda, t));
    emit(o.out, csv.text());
    return kOk;
  }

  const specfun::RadialOrder ord(o.d, o.n);
  const bool complex_valued = o.function == "hyper_h1" || o.function == "hyper_h2";
  Csv csv(complex_valued ? std::vector<std::string>{"z", "re", "im"} : std::vector<std::string>{"z", "value"});
  for (double x : z) {
    CsvRow row;
    row << x;
    if (o.function == "hyper_j") {
      row << specfun::hyper_j(ord, x);
    } else if (o.function == "hyper_n") {
      row << specfun::hyper_n(ord, x);
    } else if (o.function == "hyper_h1") {
      row << specfun::hyper_h1(ord, x);
    } else {
      row << specfun::hyper_h2(ord, x);
    }
    csv.add(row);
  }
  emit(o.out, csv.text());
  return kOk;
}

int run_dims(const DimsOptions& o) {
  if (o.d_min < 2 || o.d_max < o.d_min) throw UsageError("need 2 <= --d-min <= --d-max");
  if (o.n_max < 0) throw UsageError("--n-max must be >= 0");
  Csv csv({"d", "n", "dim", "cumulative"});
  for (int d = o.d_min; d <= o.d_max; ++d) {
    std::int64_t total = 0;
    for (int n = 0; n <= o.n_max; ++n) {
      const std::int64_t dim = sphere::harmonic_dim(d, n);
      total += dim;
      csv.add(CsvRow() << d << n << dim << total);
    }
  }
  emit(o.out, csv.text());
  return kOk;
}

}  // namespace hyperhelm::cli
