#include "latscreen/arith.hpp"

#include <limits>
#include <sstream>

#include "latscreen/error.hpp"

namespace latscreen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNotSymmetric: return "not_symmetric";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotPrimitive: return "not_primitive";
    case ErrorCode::kNoOrthogonalSplit: return "no_orthogonal_split";
    case ErrorCode::kLinearlyDependent: return "linearly_dependent";
    case ErrorCode::kZeroVector: return "zero_vector";
    case ErrorCode::kNotScreener: return "not_screener";
    case ErrorCode::kNormMismatch: return "norm_mismatch";
    case ErrorCode::kEmptyScreenerSet: return "empty_screener_set";
    case ErrorCode::kNotABasis: return "not_a_basis";
    case ErrorCode::kInnerProductViolation: return "inner_product_violation";
    case ErrorCode::kUnrecognizedComponent: return "unrecognized_component";
    case ErrorCode::kNotGeneratedByScreeners: return "not_generated_by_screeners";
    case ErrorCode::kNotEven: return "not_even";
    case ErrorCode::kNoScreenerBasis: return "no_screener_basis";
    case ErrorCode::kGammaUnavailable: return "gamma_unavailable";
    case ErrorCode::kOddNorm: return "odd_norm";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 isqrt(i128 n) {
  if (n < 0) throw LatticeError(ErrorCode::kInvalidArgument, "isqrt of negative value");
  if (n < 2) return n;
  // Newton iteration from an upper bound; monotonically decreasing.
  unsigned __int128 un = static_cast<unsigned __int128>(n);
  int bits = 0;
  for (unsigned __int128 t = un; t != 0; t >>= 1) ++bits;
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  while (true) {
    unsigned __int128 y = (x + un / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return static_cast<i128>(x);
}

std::int64_t isqrt(std::int64_t n) { return static_cast<std::int64_t>(isqrt(static_cast<i128>(n))); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw LatticeError(ErrorCode::kInvalidArgument, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(std::int64_t n, std::int64_t* root) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  if (r * r != n) return false;
  if (root != nullptr) *root = r;
  return true;
}

i128 mul128(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw LatticeError(ErrorCode::kOverflow, "128-bit multiplication overflow");
  }
  return out;
}

i128 add128(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw LatticeError(ErrorCode::kOverflow, "128-bit addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw LatticeError(ErrorCode::kOverflow, "64-bit multiplication overflow");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw LatticeError(ErrorCode::kOverflow, "64-bit addition overflow");
  }
  return out;
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw LatticeError(ErrorCode::kOverflow, "integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t to_int64(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw LatticeError(ErrorCode::kOverflow, "integer does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw LatticeError(ErrorCode::kParse, "zero denominator in '" + text + "'");
    // cpp_rational rejects a negative denominator in its two-argument constructor.
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception& e) {
    if (dynamic_cast<const LatticeError*>(&e) != nullptr) throw;
    throw LatticeError(ErrorCode::kParse, "not a rational number: '" + text + "'");
  }
}

}  // namespace latscreen
