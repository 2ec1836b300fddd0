#include "latgate/exact.hpp"

#include <cmath>

namespace latgate {

Integer floor(Rational const& q) {
  Integer const& num = boost::multiprecision::numerator(q);
  Integer const& den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) {
    --quot;
  }
  return quot;
}

Integer ceil(Rational const& q) { return -floor(-q); }

Integer floor_div(Integer const& a, Integer const& b) {
  Integer q = a / b;
  if (a < 0 && q * b != a) --q;
  return q;
}

Integer ceil_div(Integer const& a, Integer const& b) {
  return -floor_div(-a, b);
}

Integer isqrt(Integer const& x) {
  if (x <= 0) return Integer(0);
  return boost::multiprecision::sqrt(x);
}

Integer ceil_sqrt(Rational const& q) {
  if (q <= 0) return Integer(0);
  Integer b(static_cast<long long>(std::ceil(std::sqrt(q.convert_to<double>()))));
  while (b > 0 && Rational((b - 1) * (b - 1)) >= q) --b;
  while (Rational(b * b) < q) ++b;
  return b;
}

}  // namespace latgate
