#pragma once

// Exact scalar arithmetic shared by every module: arbitrary precision integers
// and rationals, plus the handful of number-theoretic helpers the lattice code
// needs (extended gcd, integer square roots, checked 128-bit products).

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace latscreen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using i128 = __int128;

// Result of the extended Euclidean algorithm: s*a + t*b = g with g >= 0.
template <typename T>
struct ExtGcd {
  T g;
  T s;
  T t;
};

template <typename T>
ExtGcd<T> ext_gcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = 1, s = 0;
  T old_t = 0, t = 1;
  while (r != 0) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Floor division and modulus with the mathematical (not truncating) convention.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);

// floor(sqrt(n)) for n >= 0.
i128 isqrt(i128 n);
std::int64_t isqrt(std::int64_t n);
Integer isqrt(const Integer& n);

// True iff n is a perfect square; writes the root to *root when non-null.
bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr);

// Overflow-checked operations; throw LatticeError(kOverflow) on overflow.
i128 mul128(i128 a, i128 b);
i128 add128(i128 a, i128 b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// Narrowing from big integers; throws kOverflow when the value does not fit.
std::int64_t to_int64(const Integer& v);
std::int64_t to_int64(i128 v);

// Canonical decimal text of a rational: "n" or "n/d".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace latscreen
