#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace effdiag {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q" in lowest terms, e.g. "1/1", "3/4".
std::string formatRational(const Rational& r);
/// "p/q", or "p" when the value is an integer.
std::string formatRationalShort(const Rational& r);
/// Accepts "p/q" or "p"; throws InvalidValue otherwise.
Rational parseRational(std::string_view text);

}  // namespace effdiag
