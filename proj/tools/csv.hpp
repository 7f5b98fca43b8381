#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hyperhelm/io.hpp"

namespace hyperhelm::cli {

// Comma-separated rows; numbers in shortest round-trip form.
class CsvRow {
 public:
  CsvRow& operator<<(double v) { return add(io::format_double(v)); }
  CsvRow& operator<<(int v) { return add(std::to_string(v)); }
  CsvRow& operator<<(std::int64_t v) { return add(std::to_string(v)); }
  CsvRow& operator<<(std::size_t v) { return add(std::to_string(v)); }
  CsvRow& operator<<(const std::string& v) { return add(v); }
  CsvRow& operator<<(const char* v) { return add(v); }
  CsvRow& operator<<(std::complex<double> v) { return *this << v.real() << v.imag(); }
  CsvRow& operator<<(const std::vector<double>& v) {
    for (double x : v) *this << x;
    return *this;
  }
  const std::string& str() const { return line_; }

 private:
  CsvRow& add(const std::string& cell) {
    if (!first_) line_ += ',';
    line_ += cell;
    first_ = false;
    return *this;
  }
  std::string line_;
  bool first_ = true;
};

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) {
    CsvRow r;
    for (const auto& h : header) r << h;
    add(r);
  }
  void add(const CsvRow& row) { text_ += row.str() + '\n'; }
  void write(std::ostream& out) const { out << text_; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

inline std::vector<std::string> coordinate_header(int d, const char* prefix = "x_") {
  std::vector<std::string> h;
  for (int i = 1; i <= d; ++i) h.push_back(prefix + std::to_string(i));
  return h;
}

}  // namespace hyperhelm::cli
