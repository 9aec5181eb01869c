#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssq {

/// Exact arbitrary-precision integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial, coefficient of t^i at index i.
using Poly = std::vector<BigInt>;

/// Binomial coefficient with the usual convention: zero unless 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long t = 1; t <= k; ++t) {
    result *= (n - k + t);
    result /= t;
  }
  return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline void add_into(Poly& target, const Poly& source, std::size_t shift = 0) {
  if (target.size() < source.size() + shift) target.resize(source.size() + shift);
  for (std::size_t i = 0; i < source.size(); ++i) target[i + shift] += source[i];
}

inline Poly convolve(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace ssq
