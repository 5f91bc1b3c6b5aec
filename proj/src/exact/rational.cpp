#include "qgm/exact/rational.hpp"

#include "qgm/error.hpp"

namespace qgm {

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(Errc::Parse, "not a rational: '" + s + "'");
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace qgm
