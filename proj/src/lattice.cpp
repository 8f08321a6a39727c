#include "latscreen/lattice.hpp"

#include <string>

namespace latscreen {

namespace {

void check_symmetric(const IntMatrix& g) {
  if (!g.square()) throw LatticeError(ErrorCode::kDimensionMismatch, "Gram matrix is not square");
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i)) {
        throw LatticeError(ErrorCode::kNotSymmetric, "Gram matrix is not symmetric at (" + std::to_string(i + 1) +
                                                         "," + std::to_string(j + 1) + ")");
      }
}

void check_dim(const Lattice& L, std::size_t n) {
  if (n != L.rank()) {
    throw LatticeError(ErrorCode::kDimensionMismatch, "vector has length " + std::to_string(n) +
                                                          " but lattice has rank " + std::to_string(L.rank()));
  }
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  check_symmetric(gram_);
  if (auto k = first_nonpositive_minor(gram_)) {
    throw LatticeError(ErrorCode::kNotPositiveDefinite,
                       "Gram matrix is not positive definite: leading minor " + std::to_string(*k) + " is nonpositive");
  }
  det_ = latscreen::determinant(gram_);
}

bool Lattice::even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

std::optional<std::size_t> first_nonpositive_minor(const IntMatrix& g) {
  check_symmetric(g);
  const auto minors = leading_minors(g);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0) return k + 1;
  return std::nullopt;
}

bool is_positive_definite(const IntMatrix& g) { return !first_nonpositive_minor(g).has_value(); }

Vec gram_times(const Lattice& L, const Vec& x) {
  check_dim(L, x.size());
  const std::size_t d = L.rank();
  Vec out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    i128 acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc = add128(acc, mul128(static_cast<i128>(L.gram(i, j)), x[j]));
    out[i] = to_int64(acc);
  }
  return out;
}

RatVec gram_times(const Lattice& L, const RatVec& v) {
  check_dim(L, v.size());
  const std::size_t d = L.rank();
  RatVec out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i] += L.gram(i, j) * v[j];
  return out;
}

std::int64_t inner(const Lattice& L, const Vec& x, const Vec& y) {
  check_dim(L, x.size());
  const Vec gy = gram_times(L, y);
  i128 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = add128(acc, mul128(static_cast<i128>(x[i]), gy[i]));
  return to_int64(acc);
}

std::int64_t norm(const Lattice& L, const Vec& x) { return inner(L, x, x); }

Rational inner(const Lattice& L, const Vec& x, const RatVec& v) {
  check_dim(L, x.size());
  const RatVec gv = gram_times(L, v);
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * gv[i];
  return acc;
}

Rational inner(const Lattice& L, const RatVec& u, const RatVec& v) {
  check_dim(L, u.size());
  const RatVec gv = gram_times(L, v);
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * gv[i];
  return acc;
}

int parity(const Lattice& L, const Vec& x) {
  const std::int64_t n = norm(L, x);
  return static_cast<int>(((n % 2) + 2) % 2);
}

Integer determinant(const Lattice& L) { return L.det(); }

bool in_dual(const Lattice& L, const Vec& x, std::int64_t k) {
  if (k <= 0) throw LatticeError(ErrorCode::kInvalidArgument, "dual membership needs a positive denominator");
  for (std::int64_t e : gram_times(L, x))
    if (e % k != 0) return false;
  return true;
}

bool in_extended_dual(const Lattice& L, const RatVec& v) {
  const RatVec gv = gram_times(L, v);
  for (std::size_t j = 0; j < gv.size(); ++j) {
    const Rational t = (L.gram(j, j) % 2 == 0) ? gv[j] : gv[j] * 2;
    if (boost::multiprecision::denominator(t) != 1) return false;
  }
  return true;
}

bool in_nL(const Vec& x, std::int64_t n) {
  if (n <= 0) throw LatticeError(ErrorCode::kInvalidArgument, "in_nL needs a positive modulus");
  for (std::int64_t c : x)
    if (c % n != 0) return false;
  return true;
}

IntMatrix extend_to_basis(const Vec& x) {
  const std::size_t d = x.size();
  if (d == 0) throw LatticeError(ErrorCode::kDimensionMismatch, "empty vector");
  if (content(x) != 1) throw LatticeError(ErrorCode::kNotPrimitive, "vector is not primitive (gcd of coordinates != 1)");
  // Reduce x to e_1 by 2x2 gcd steps on (y_0, y_i); U collects the inverses so
  // that U e_1 = x.
  IntMatrix u = IntMatrix::identity(d);
  std::int64_t y0 = x[0];
  for (std::size_t i = 1; i < d; ++i) {
    const std::int64_t yi = x[i];
    if (yi == 0) continue;
    const auto [g, s, t] = ext_gcd<std::int64_t>(y0, yi);
    const std::int64_t a = y0 / g;
    const std::int64_t b = yi / g;
    for (std::size_t r = 0; r < d; ++r) {
      const std::int64_t c0 = u(r, 0);
      const std::int64_t ci = u(r, i);
      u(r, 0) = checked_add(checked_mul(c0, a), checked_mul(ci, b));
      u(r, i) = checked_add(checked_mul(c0, -t), checked_mul(ci, s));
    }
    y0 = g;
  }
  if (y0 < 0)
    for (std::size_t r = 0; r < d; ++r) u(r, 0) = -u(r, 0);
  return u;
}

IntMatrix extend_to_basis(const Lattice& L, const Vec& x) {
  check_dim(L, x.size());
  return extend_to_basis(x);
}

OrthogonalSplit orthogonal_split(const Lattice& L, const Vec& a) {
  check_dim(L, a.size());
  if (is_zero(a)) throw LatticeError(ErrorCode::kZeroVector, "cannot split along the zero vector");
  const std::int64_t n = norm(L, a);
  const Vec ga = gram_times(L, a);
  for (std::int64_t e : ga)
    if (e % n != 0) {
      throw LatticeError(ErrorCode::kNoOrthogonalSplit, "<a, L> is not contained in <a,a>Z; no orthogonal split");
    }
  // The divisibility condition forces a to be primitive.
  IntMatrix basis = extend_to_basis(a);
  const std::size_t d = L.rank();
  for (std::size_t j = 1; j < d; ++j) {
    const Vec b = basis.col(j);
    const std::int64_t coef = inner(L, a, b) / n;
    for (std::size_t r = 0; r < d; ++r) basis(r, j) = checked_add(basis(r, j), checked_mul(-coef, a[r]));
  }
  std::vector<Vec> rest;
  for (std::size_t j = 1; j < d; ++j) rest.push_back(basis.col(j));
  return OrthogonalSplit{Lattice(IntMatrix{{n}}), Lattice(gram_of(L, rest)), basis};
}

QuotientInvariants quotient_invariants(const Lattice& L) {
  QuotientInvariants q;
  q.divisors = smith_diagonal(to_big(L.gram()));
  q.order = 1;
  for (const auto& v : q.divisors) q.order *= v;
  return q;
}

Integer discriminant_exponent(const Lattice& L) {
  const auto q = quotient_invariants(L);
  return q.divisors.empty() ? Integer(1) : q.divisors.back();
}

IntMatrix gram_of(const Lattice& L, const std::vector<Vec>& vs) {
  IntMatrix g(vs.size(), vs.size());
  std::vector<Vec> gv;
  gv.reserve(vs.size());
  for (const auto& v : vs) gv.push_back(gram_times(L, v));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      i128 acc = 0;
      for (std::size_t k = 0; k < L.rank(); ++k) acc = add128(acc, mul128(static_cast<i128>(vs[i][k]), gv[j][k]));
      g(i, j) = to_int64(acc);
    }
  return g;
}

Lattice sublattice_gram(const Lattice& L, const std::vector<Vec>& vs) {
  for (const auto& v : vs) check_dim(L, v.size());
  if (!vs.empty() && rank(from_columns(vs, L.rank())) != vs.size()) {
    throw LatticeError(ErrorCode::kLinearlyDependent, "vectors are linearly dependent");
  }
  return Lattice(gram_of(L, vs));
}

RatMatrix gram_inverse(const Lattice& L) { return inverse(to_rational(L.gram())); }

Vec scaled(const Vec& x, std::int64_t k) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked_mul(x[i], k);
  return out;
}

Vec add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw LatticeError(ErrorCode::kDimensionMismatch, "vector length mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked_add(x[i], y[i]);
  return out;
}

Vec sub(const Vec& x, const Vec& y) { return add(x, negated(y)); }

Vec negated(const Vec& x) { return scaled(x, -1); }

bool is_zero(const Vec& x) {
  for (std::int64_t c : x)
    if (c != 0) return false;
  return true;
}

std::int64_t content(const Vec& x) {
  std::int64_t g = 0;
  for (std::int64_t c : x) g = gcd64(g, c);
  return g;
}

Vec canonical(const Vec& x) {
  for (std::int64_t c : x) {
    if (c > 0) return x;
    if (c < 0) return negated(x);
  }
  return x;
}

bool is_canonical(const Vec& x) {
  for (std::int64_t c : x) {
    if (c != 0) return c > 0;
  }
  return false;
}

RatVec to_rational(const Vec& x) {
  RatVec out;
  out.reserve(x.size());
  for (std::int64_t c : x) out.emplace_back(c);
  return out;
}

}  // namespace latscreen
