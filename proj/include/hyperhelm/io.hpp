#pragma once

// Text formats for fitted fields.
//
// Numbers are written in the shortest decimal form that reads back to the
// same double, so files are byte-stable and round-trip exactly.
//
//   hyperhelm-kernel-estimate 1
//   d <int>
//   k <real>
//   lambda <real>
//   count <L>
//   <x_1> ... <x_d> <re a> <im a>        (L lines)
//
//   hyperhelm-sh-expansion 1
//   d <int>
//   k <real>
//   kind interior|exterior
//   max_order <N>
//   <n> <m> <re> <im>                    (Σ_{n<=N} dim 𝒴_n lines, n-major)

#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperhelm/rkhs.hpp"

namespace hyperhelm::io {

std::string format_double(double value);

// Whole-string parse; throws DomainError on trailing garbage or range errors.
double parse_double(std::string_view text);

void write_kernel_estimate(std::ostream& out, const rkhs::KernelEstimate& est);
rkhs::KernelEstimate read_kernel_estimate(std::istream& in);

void write_sh_expansion(std::ostream& out, const rkhs::SHExpansion& expansion);
rkhs::SHExpansion read_sh_expansion(std::istream& in);

}  // namespace hyperhelm::io
