#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace hpmodel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (-1)^e
inline int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline Integer binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(std::uint64_t n)
{
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

} // namespace hpmodel
