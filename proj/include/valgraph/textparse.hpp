#pragma once

#include <map>
#include <string>

namespace valgraph {

// Parses "c*t^k + t + 3 + t^-2" into exponent -> coefficient code.
std::map<long, unsigned> parse_poly_terms(const std::string& text, bool allow_negative_exponents);

std::string trim_copy(const std::string& s);

}  // namespace valgraph
