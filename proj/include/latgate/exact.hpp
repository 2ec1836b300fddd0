#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latgate {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer <= q.
Integer floor(Rational const& q);
// Smallest integer >= q.
Integer ceil(Rational const& q);

// Integer range [lo, hi]; empty when lo > hi.
struct IntegerInterval {
  Integer lo;
  Integer hi;
  bool empty() const { return lo > hi; }
};

// Floor and ceiling of a / b for b > 0.
Integer floor_div(Integer const& a, Integer const& b);
Integer ceil_div(Integer const& a, Integer const& b);

// Largest q >= 0 with q^2 <= x, for x >= 0.
Integer isqrt(Integer const& x);

// Smallest integer b >= 0 with b^2 >= q, for q >= 0.
Integer ceil_sqrt(Rational const& q);

}  // namespace latgate
