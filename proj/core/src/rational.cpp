#include "effdiag/rational.hpp"

#include <cctype>

#include "effdiag/error.hpp"

namespace effdiag {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InvalidValue("malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidValue("malformed rational '" + std::string(whole) + "'");
    }
  }
  return cpp_int(std::string(digits));
}

}  // namespace

std::string formatRational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string formatRationalShort(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return formatRational(r);
}

Rational parseRational(std::string_view text) {
  bool negative = !text.empty() && text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;
  auto slash = body.find('/');
  cpp_int num = parseInteger(body.substr(0, slash), text);
  cpp_int den = 1;
  if (slash != std::string_view::npos) {
    den = parseInteger(body.substr(slash + 1), text);
    if (den == 0) throw InvalidValue("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace effdiag
