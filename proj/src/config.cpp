#include "hyperhelm/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "hyperhelm/errors.hpp"
#include "hyperhelm/identities.hpp"
#include "hyperhelm/rng.hpp"
#include "hyperhelm/specfun.hpp"

namespace hyperhelm::config {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxGridPoints = 4'000'000;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw DomainError("config: " + where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) bad(where, "unknown key '" + key + "'");
  }
}

const json& need(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) bad(where, std::string("missing '") + key + "'");
  return j.at(key);
}

double real_at(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(where, "must be finite");
  return v;
}

long long int_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long long>();
}

std::vector<double> reals_at(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

SourceSpec parse_source(const json& j, int d, const std::string& where) {
  SourceSpec s;
  const std::string type = need(j, where, "type").is_string() ? j.at("type").get<std::string>() : "";
  if (type == "plane_wave") {
    only_keys(j, where, {"type", "direction"});
    s.kind = SourceSpec::Kind::kPlaneWave;
    s.direction = reals_at(need(j, where, "direction"), where + ".direction");
    if (static_cast<int>(s.direction.size()) != d - 1) bad(where + ".direction", "expected d-1 angles");
    if (!sphere::in_domain(sphere::PolarPoint{1.0, s.direction})) bad(where + ".direction", "angles out of range");
  } else if (type == "interior_mode") {
    only_keys(j, where, {"type", "n", "m"});
    s.kind = SourceSpec::Kind::kInteriorMode;
    const long long n = int_at(need(j, where, "n"), where + ".n");
    const long long m = int_at(need(j, where, "m"), where + ".m");
    if (n < 0 || n > 200) bad(where + ".n", "must be in 0..200");
    s.n = static_cast<int>(n);
    if (m < 1 || m > sphere::harmonic_dim(d, s.n)) bad(where + ".m", "must be in 1..dim");
    s.m = m;
  } else if (type == "superposition") {
    only_keys(j, where, {"type", "terms"});
    s.kind = SourceSpec::Kind::kSuperposition;
    const json& terms = need(j, where, "terms");
    if (!terms.is_array() || terms.empty()) bad(where + ".terms", "expected a non-empty array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = where + ".terms[" + std::to_string(i) + "]";
      only_keys(terms[i], w, {"weight", "source"});
      std::complex<double> weight = 1.0;
      if (terms[i].contains("weight")) {
        const json& wj = terms[i].at("weight");
        if (wj.is_number()) {
          weight = real_at(wj, w + ".weight");
        } else {
          const auto v = reals_at(wj, w + ".weight");
          if (v.size() != 2) bad(w + ".weight", "expected a number or [re, im]");
          weight = {v[0], v[1]};
        }
      }
      s.terms.push_back({weight, parse_source(need(terms[i], w, "source"), d, w + ".source")});
    }
  } else {
    bad(where + ".type", "expected plane_wave, interior_mode or superposition");
  }
  return s;
}

ArraySpec parse_array(const json& j, int d) {
  const std::string where = "array";
  ArraySpec a;
  const std::string type = need(j, where, "type").is_string() ? j.at("type").get<std::string>() : "";
  if (type == "random_ball") {
    only_keys(j, where, {"type", "count", "radius", "rng_seed"});
    a.kind = ArraySpec::Kind::kRandomBall;
    const long long count = int_at(need(j, where, "count"), "array.count");
    if (count < 1 || count > 100000) bad("array.count", "must be in 1..100000");
    a.count = static_cast<int>(count);
    a.radius = real_at(need(j, where, "radius"), "array.radius");
    const long long seed = int_at(need(j, where, "rng_seed"), "array.rng_seed");
    if (seed < 0) bad("array.rng_seed", "must be >= 0");
    a.rng_seed = static_cast<std::uint64_t>(seed);
  } else if (type == "grid") {
    only_keys(j, where, {"type", "spacing", "radius"});
    a.kind = ArraySpec::Kind::kGrid;
    a.spacing = real_at(need(j, where, "spacing"), "array.spacing");
    a.radius = real_at(need(j, where, "radius"), "array.radius");
    if (!(a.spacing > 0.0)) bad("array.spacing", "must be > 0");
  } else if (type == "explicit") {
    only_keys(j, where, {"type", "points"});
    a.kind = ArraySpec::Kind::kExplicit;
    const json& pts = need(j, where, "points");
    if (!pts.is_array() || pts.empty()) bad("array.points", "expected a non-empty array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto x = reals_at(pts[i], "array.points[" + std::to_string(i) + "]");
      if (static_cast<int>(x.size()) != d) bad("array.points[" + std::to_string(i) + "]", "expected d coordinates");
      a.points.push_back(sphere::CartesianPoint{std::move(x)});
    }
    a.count = static_cast<int>(a.points.size());
    return a;
  } else {
    bad("array.type", "expected random_ball, grid or explicit");
  }
  if (!(a.radius > 0.0)) bad("array.radius", "must be > 0");
  return a;
}

}  // namespace

ExperimentConfig parse(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config: not valid JSON: ") + e.what());
  }
  only_keys(j, "top level", {"d", "k", "source", "array", "noise_std", "noise_seed", "lambda", "eval_grid",
                             "truncation", "drift_orders", "direct_lambda", "tolerance"});
  ExperimentConfig c;
  const long long d = int_at(need(j, "top level", "d"), "d");
  if (d < 2 || d > 16) bad("d", "must be in 2..16");
  c.d = static_cast<int>(d);
  c.k = real_at(need(j, "top level", "k"), "k");
  if (!(c.k > 0.0)) bad("k", "must be > 0");
  c.source = parse_source(need(j, "top level", "source"), c.d, "source");
  c.array = parse_array(need(j, "top level", "array"), c.d);

  if (j.contains("noise_std")) {
    c.noise_std = real_at(j.at("noise_std"), "noise_std");
    if (c.noise_std < 0.0) bad("noise_std", "must be >= 0");
  }
  if (j.contains("noise_seed")) {
    const long long seed = int_at(j.at("noise_seed"), "noise_seed");
    if (seed < 0) bad("noise_seed", "must be >= 0");
    c.noise_seed = static_cast<std::uint64_t>(seed);
  }
  if (j.contains("lambda")) {
    const json& l = j.at("lambda");
    if (l.is_string() && l.get<std::string>() == "auto") {
      c.lambda.reset();
    } else {
      c.lambda = real_at(l, "lambda");
      if (*c.lambda < 0.0) bad("lambda", "must be >= 0 or \"auto\"");
    }
  }
  if (j.contains("eval_grid")) {
    const json& g = j.at("eval_grid");
    only_keys(g, "eval_grid", {"resolution", "radius"});
    c.eval_resolution = real_at(need(g, "eval_grid", "resolution"), "eval_grid.resolution");
    c.eval_radius = real_at(need(g, "eval_grid", "radius"), "eval_grid.radius");
    if (!(c.eval_resolution > 0.0)) bad("eval_grid.resolution", "must be > 0");
    if (!(c.eval_radius > 0.0)) bad("eval_grid.radius", "must be > 0");
  } else {
    c.eval_radius = c.array.kind == ArraySpec::Kind::kExplicit ? 1.0 : c.array.radius;
    c.eval_resolution = c.eval_radius / 8.0;
  }
  if (j.contains("truncation")) {
    const json& t = j.at("truncation");
    if (t.is_string() && t.get<std::string>() == "auto") {
      c.truncation.reset();
    } else {
      const long long n = int_at(t, "truncation");
      if (n < 0 || n > 200) bad("truncation", "must be in 0..200 or \"auto\"");
      c.truncation = static_cast<int>(n);
    }
  }
  if (j.contains("drift_orders")) {
    const json& o = j.at("drift_orders");
    if (!o.is_array()) bad("drift_orders", "expected an array of integers");
    c.drift_orders.clear();
    for (std::size_t i = 0; i < o.size(); ++i) {
      const long long n = int_at(o[i], "drift_orders[" + std::to_string(i) + "]");
      if (n < 0 || n > 200) bad("drift_orders", "orders must be in 0..200");
      c.drift_orders.push_back(static_cast<int>(n));
    }
  }
  if (j.contains("direct_lambda")) {
    c.direct_lambda = real_at(j.at("direct_lambda"), "direct_lambda");
    if (*c.direct_lambda < 0.0) bad("direct_lambda", "must be >= 0");
  }
  if (j.contains("tolerance")) {
    c.tolerance = real_at(j.at("tolerance"), "tolerance");
    if (!(*c.tolerance > 0.0)) bad("tolerance", "must be > 0");
  }
  return c;
}

std::complex<double> source_value(const SourceSpec& source, int d, double k, const sphere::CartesianPoint& x) {
  switch (source.kind) {
    case SourceSpec::Kind::kPlaneWave: {
      const auto u = sphere::polar_to_cartesian(sphere::PolarPoint{1.0, source.direction});
      double phase = 0.0;
      for (int i = 0; i < d; ++i) phase += u.x[static_cast<std::size_t>(i)] * x.x[static_cast<std::size_t>(i)];
      phase *= k;
      return {std::cos(phase), std::sin(phase)};
    }
    case SourceSpec::Kind::kInteriorMode: {
      const auto p = sphere::cartesian_to_polar(x);
      return specfun::hyper_j(specfun::RadialOrder(d, source.n), k * p.r) *
             sphere::eval_harmonic(sphere::index_from_flat(d, source.n, source.m), p.theta);
    }
    case SourceSpec::Kind::kSuperposition: {
      std::complex<double> sum = 0.0;
      for (const auto& t : source.terms) sum += t.weight * source_value(t.source, d, k, x);
      return sum;
    }
  }
  return 0.0;
}

std::vector<sphere::CartesianPoint> ball_grid(int d, double radius, double spacing) {
  if (!(radius > 0.0) || !(spacing > 0.0)) throw DomainError("ball_grid: radius and spacing must be > 0");
  const long steps = static_cast<long>(std::floor(radius / spacing * (1.0 + 1e-12)));
  const double per_axis = 2.0 * static_cast<double>(steps) + 1.0;
  if (std::pow(per_axis, d) > static_cast<double>(kMaxGridPoints)) {
    throw DomainError("ball_grid: more than " + std::to_string(kMaxGridPoints) + " candidate points; increase spacing");
  }
  std::vector<sphere::CartesianPoint> out;
  std::vector<long> idx(static_cast<std::size_t>(d), -steps);
  const double r2 = radius * radius * (1.0 + 1e-12);
  while (true) {
    sphere::CartesianPoint p;
    double s = 0.0;
    for (long v : idx) {
      const double c = static_cast<double>(v) * spacing;
      p.x.push_back(c);
      s += c * c;
    }
    if (s <= r2) out.push_back(std::move(p));
    // Last coordinate fastest.
    int i = d - 1;
    while (i >= 0 && ++idx[static_cast<std::size_t>(i)] > steps) idx[static_cast<std::size_t>(i--)] = -steps;
    if (i < 0) break;
  }
  return out;
}

std::vector<sphere::CartesianPoint> array_points(const ArraySpec& array, int d) {
  switch (array.kind) {
    case ArraySpec::Kind::kRandomBall: {
      Rng rng(array.rng_seed);
      std::vector<sphere::CartesianPoint> out;
      for (int i = 0; i < array.count; ++i) out.push_back(sphere::CartesianPoint{rng.in_ball(d, array.radius)});
      return out;
    }
    case ArraySpec::Kind::kGrid:
      return ball_grid(d, array.radius, array.spacing);
    case ArraySpec::Kind::kExplicit:
      return array.points;
  }
  return {};
}

double resolve_lambda(const ExperimentConfig& cfg) {
  if (cfg.lambda) return *cfg.lambda;
  return sphere::surface_measure(cfg.d) * std::max(1e-8, cfg.noise_std / 10.0);
}

int resolve_truncation(const ExperimentConfig& cfg, const std::vector<sphere::CartesianPoint>& samples) {
  if (cfg.truncation) return *cfg.truncation;
  double radius = cfg.eval_radius;
  for (const auto& p : samples) radius = std::max(radius, sphere::cartesian_to_polar(p).r);
  return identities::truncation_order(cfg.k, radius);
}

}  // namespace hyperhelm::config
