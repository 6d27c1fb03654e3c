#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "carnot/error.hpp"

namespace carnot {

// gmpxx keeps every mpq_class canonical after arithmetic; the only
// non-canonical values come from set_str, handled in parse_rational.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading signs, decimal digits only).
/// Non-lowest-terms input is accepted and normalized.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits(num, true) || (slash != std::string_view::npos && !digits(den, true)))
    throw input_error("malformed rational literal '" + std::string(text) + "'");
  std::string normalized(num.front() == '+' ? num.substr(1) : num);
  Rational value;
  if (slash == std::string_view::npos) {
    value = mpz_class(normalized);
  } else {
    mpz_class d{std::string(den.front() == '+' ? den.substr(1) : den)};
    if (d == 0) throw input_error("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(normalized), d);
    value.canonicalize();
  }
  return value;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, int exponent) {
  Rational result = 1;
  const bool invert = exponent < 0;
  for (int i = 0; i < (invert ? -exponent : exponent); ++i) result *= base;
  return invert ? Rational(1 / result) : result;
}

}  // namespace carnot
