#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2inst {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" string.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace g2inst
