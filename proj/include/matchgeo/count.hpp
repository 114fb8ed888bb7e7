#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "matchgeo/error.hpp"

namespace matchgeo {

// Exact nonnegative counts. Geodesic counts pass 2^64 at m = 17.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// (total; parts...) with total == sum(parts).
inline Count multinomial(std::span<const std::int64_t> parts) {
  Count result = 1;
  std::int64_t running = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw Error(ErrorKind::InvalidArgument, "negative multinomial part");
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

inline Count power(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Count b = base;
  return boost::multiprecision::pow(b, static_cast<unsigned>(exponent));
}

// n!! = n (n-2) (n-4) ...; 0!! = (-1)!! = 1.
inline Count double_factorial(std::int64_t n) {
  Count result = 1;
  for (std::int64_t i = n; i > 1; i -= 2) result *= i;
  return result;
}

inline Count catalan(std::int64_t n) { return binomial(2 * n, n) / (n + 1); }

// Number of perfect matchings of K_{2m}, saturating at UINT64_MAX.
inline std::uint64_t matching_count_u64(int m) {
  std::uint64_t result = 1;
  if (m < 1) return result;
  for (std::uint64_t i = 2 * static_cast<std::uint64_t>(m) - 1; i > 1; i -= 2) {
    if (result > UINT64_MAX / i) return UINT64_MAX;
    result *= i;
  }
  return result;
}

}  // namespace matchgeo
