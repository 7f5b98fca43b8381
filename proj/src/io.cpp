#include "hyperhelm/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

#include "hyperhelm/errors.hpp"

namespace hyperhelm::io {
namespace {

constexpr std::string_view kEstimateMagic = "hyperhelm-kernel-estimate 1";
constexpr std::string_view kExpansionMagic = "hyperhelm-sh-expansion 1";

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      return tokens;
    }
    throw DomainError(std::string("unexpected end of input, expected ") + what);
  }

  void expect_magic(std::string_view magic) {
    std::string line;
    if (!std::getline(in_, line)) throw DomainError("empty input");
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != magic) throw DomainError("line 1: expected header '" + std::string(magic) + "'");
  }

  // "<key> <value>"
  std::string field(const char* key) {
    const auto t = next(key);
    if (t.size() != 2 || t[0] != key) fail(std::string("expected '") + key + " <value>'");
    return t[1];
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw DomainError("line " + std::to_string(number_) + ": " + message);
  }

  double number(const std::string& text) const {
    try {
      return parse_double(text);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  long integer(const std::string& text) const {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("not an integer: '" + text + "'");
    return v;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw DomainError("format_double: conversion failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

void write_kernel_estimate(std::ostream& out, const rkhs::KernelEstimate& est) {
  out << kEstimateMagic << '\n';
  out << "d " << est.d << '\n';
  out << "k " << format_double(est.k) << '\n';
  out << "lambda " << format_double(est.lambda) << '\n';
  out << "count " << est.centers.size() << '\n';
  for (std::size_t l = 0; l < est.centers.size(); ++l) {
    for (double v : est.centers[l].x) out << format_double(v) << ' ';
    out << format_double(est.weights[l].real()) << ' ' << format_double(est.weights[l].imag()) << '\n';
  }
}

rkhs::KernelEstimate read_kernel_estimate(std::istream& in) {
  LineReader r(in);
  r.expect_magic(kEstimateMagic);
  rkhs::KernelEstimate est;
  est.d = static_cast<int>(r.integer(r.field("d")));
  if (est.d < 2) r.fail("d must be >= 2");
  est.k = r.number(r.field("k"));
  est.lambda = r.number(r.field("lambda"));
  const long count = r.integer(r.field("count"));
  if (count < 0) r.fail("count must be >= 0");
  for (long l = 0; l < count; ++l) {
    const auto t = r.next("a center line");
    if (t.size() != static_cast<std::size_t>(est.d) + 2) r.fail("expected d coordinates and a complex weight");
    sphere::CartesianPoint p;
    for (int i = 0; i < est.d; ++i) p.x.push_back(r.number(t[static_cast<std::size_t>(i)]));
    est.centers.push_back(std::move(p));
    est.weights.emplace_back(r.number(t[static_cast<std::size_t>(est.d)]), r.number(t[static_cast<std::size_t>(est.d) + 1]));
  }
  return est;
}

void write_sh_expansion(std::ostream& out, const rkhs::SHExpansion& expansion) {
  out << kExpansionMagic << '\n';
  out << "d " << expansion.d << '\n';
  out << "k " << format_double(expansion.k) << '\n';
  out << "kind " << (expansion.kind == rkhs::BasisKind::kInterior ? "interior" : "exterior") << '\n';
  out << "max_order " << expansion.max_order << '\n';
  std::size_t i = 0;
  for (int n = 0; n <= expansion.max_order; ++n) {
    const std::int64_t dim = sphere::harmonic_dim(expansion.d, n);
    for (std::int64_t m = 1; m <= dim; ++m, ++i) {
      out << n << ' ' << m << ' ' << format_double(expansion.coefficients[i].real()) << ' '
          << format_double(expansion.coefficients[i].imag()) << '\n';
    }
  }
}

rkhs::SHExpansion read_sh_expansion(std::istream& in) {
  LineReader r(in);
  r.expect_magic(kExpansionMagic);
  rkhs::SHExpansion e;
  e.d = static_cast<int>(r.integer(r.field("d")));
  if (e.d < 2) r.fail("d must be >= 2");
  e.k = r.number(r.field("k"));
  const std::string kind = r.field("kind");
  if (kind == "interior") {
    e.kind = rkhs::BasisKind::kInterior;
  } else if (kind == "exterior") {
    e.kind = rkhs::BasisKind::kExterior;
  } else {
    r.fail("kind must be 'interior' or 'exterior'");
  }
  e.max_order = static_cast<int>(r.integer(r.field("max_order")));
  if (e.max_order < 0) r.fail("max_order must be >= 0");
  for (int n = 0; n <= e.max_order; ++n) {
    const std::int64_t dim = sphere::harmonic_dim(e.d, n);
    for (std::int64_t m = 1; m <= dim; ++m) {
      const auto t = r.next("a coefficient line");
      if (t.size() != 4) r.fail("expected '<n> <m> <re> <im>'");
      if (r.integer(t[0]) != n || r.integer(t[1]) != m) {
        r.fail("expected coefficient (" + std::to_string(n) + ", " + std::to_string(m) + ")");
      }
      e.coefficients.emplace_back(r.number(t[2]), r.number(t[3]));
    }
  }
  return e;
}

}  // namespace hyperhelm::io
