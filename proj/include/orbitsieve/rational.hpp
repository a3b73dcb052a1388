#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orbitsieve {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/2", "1.5", "2.5e-3", "1e6" into an exact rational.
/// Decimal and scientific forms convert exactly (no float round trip).
Rat parse_rational(const std::string& text);

/// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string rational_str(const Rat& r);

double to_double(const Rat& r);

}  // namespace orbitsieve
