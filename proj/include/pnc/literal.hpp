#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/types.hpp"

namespace pnc {

/// Textual number form "x0,x1,...,x_{n-1}"; n is inferred from the count.
PolarNComplex parse_literal(std::string_view text);

/// Formats with the given significant digits; at 17 digits parse(format(u))
/// reproduces u exactly.
std::string format_literal(const PolarNComplex& u, int digits = 17);

std::string format_real(double v, int digits = 17);

/// Path file: one literal per line; blank lines and '#' comments skipped.
std::vector<PolarNComplex> read_path_file(std::istream& in);

}  // namespace pnc
