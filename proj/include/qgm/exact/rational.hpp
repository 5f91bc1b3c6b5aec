#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qgm {

using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary size) into canonical form.
Rational parse_rational(std::string_view text);
/// "p/q" with q > 1, or "p".
std::string format_rational(const Rational& q);

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace qgm
