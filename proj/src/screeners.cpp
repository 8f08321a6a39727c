#include "latscreen/screeners.hpp"

namespace latscreen {

namespace mp = boost::multiprecision;

bool is_screener(const Lattice& L, const Vec& x) {
  if (is_zero(x)) throw LatticeError(ErrorCode::kZeroVector, "screener test on the zero vector");
  const std::int64_t n = norm(L, x);
  if (n % 2 != 0) return false;
  if (in_nL(x, 2)) return false;
  for (std::int64_t e : gram_times(L, x))
    if (mul128(2, e) % n != 0) return false;
  return true;
}

std::vector<Vec> ScreenerSet::with_negatives() const {
  std::vector<Vec> out;
  out.reserve(2 * screeners.size());
  for (const auto& v : screeners) {
    out.push_back(v);
    out.push_back(negated(v));
  }
  return out;
}

std::int64_t screener_norm_bound(const Lattice& L) { return to_int64(2 * discriminant_exponent(L)); }

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t k) {
  const std::int64_t r = a % k;
  return r < 0 ? r + k : r;
}

// Upper triangular basis (rows) of kZ^d + GZ^d. Every lattice met along the
// way contains kZ^d, so entries right of the diagonal stay reduced mod k.
IntMatrix modular_span(const Lattice& L, std::int64_t k) {
  const std::size_t d = L.rank();
  IntMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i) b(i, i) = k;
  for (std::size_t r = 0; r < d; ++r) {
    Vec v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = floor_mod(L.gram(r, j), k);
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] == 0) continue;
      const auto [g, s, t] = ext_gcd<std::int64_t>(b(i, i), v[i]);
      const std::int64_t p = b(i, i) / g;
      const std::int64_t q = v[i] / g;
      for (std::size_t j = i; j < d; ++j) {
        const std::int64_t bi = b(i, j);
        const std::int64_t vj = v[j];
        b(i, j) = checked_add(checked_mul(s, bi), checked_mul(t, vj));
        v[j] = checked_add(checked_mul(p, vj), -checked_mul(q, bi));
      }
      for (std::size_t j = i + 1; j < d; ++j) {
        b(i, j) = floor_mod(b(i, j), k);
        v[j] = floor_mod(v[j], k);
      }
    }
  }
  return b;
}

// Basis (rows) of {x : Gx = 0 mod k}, the vectors that can carry norm 2k. It
// is k times the dual of kZ^d + GZ^d.
BigMatrix congruence_sublattice(const Lattice& L, std::int64_t k) {
  const std::size_t d = L.rank();
  const RatMatrix inv = inverse(to_rational(modular_span(L, k)));
  BigMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational e = inv(j, i) * k;
      out(i, j) = numerator(e);
    }
  return out;
}

}  // namespace

ScreenerSet all_screeners(const Lattice& L) {
  // A screener of norm 2k has Gx = 0 mod k with k | exponent, so each k is
  // searched at exact norm 2k inside the matching congruence sublattice.
  const std::size_t d = L.rank();
  std::vector<std::pair<std::int64_t, Vec>> found;
  for (std::int64_t k : divisors(screener_norm_bound(L) / 2)) {
    const BigMatrix raw = congruence_sublattice(L, k);
    BigMatrix gm(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Integer acc = 0;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) acc += raw(i, r) * L.gram(r, c) * raw(j, c);
        gm(i, j) = acc;
      }
    const auto red = lll_gram(gm);
    const BigMatrix b = red.transform * raw;
    gm = red.gram;
    const Lattice sub(to_int(gm));
    for (const auto& w : enumerate_exact_norm(sub, 2 * k).vectors) {
      Vec x(d, 0);
      for (std::size_t j = 0; j < d; ++j) {
        Integer acc = 0;
        for (std::size_t i = 0; i < d; ++i) acc += w[i] * b(i, j);
        x[j] = to_int64(acc);
      }
      if (in_nL(x, 2)) continue;
      found.emplace_back(2 * k, canonical(x));
    }
  }
  std::sort(found.begin(), found.end());
  ScreenerSet out{L, {}, {}};
  for (auto& [n, x] : found) {
    out.norms.push_back(n);
    out.screeners.push_back(std::move(x));
  }
  return out;
}

ScreeningSystem screening_system(const ScreenerSet& S) {
  if (S.empty()) throw LatticeError(ErrorCode::kEmptyScreenerSet, "screener set is empty");
  const std::size_t d = S.lattice.rank();
  std::vector<Vec> chosen;
  for (const auto& v : S.screeners) {
    if (chosen.size() == d) break;
    chosen.push_back(v);
    if (rank(from_columns(chosen, d)) != chosen.size()) chosen.pop_back();
  }
  Lattice g = sublattice_gram(S.lattice, chosen);
  return ScreeningSystem{std::move(chosen), std::move(g)};
}

SublatticeBasis z_phi(const ScreenerSet& S) {
  if (S.empty()) throw LatticeError(ErrorCode::kEmptyScreenerSet, "screener set is empty");
  const std::size_t d = S.lattice.rank();
  const auto h = hermite_rows(to_big(from_rows(S.screeners, d)));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < h.rank; ++i) {
    Vec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = to_int64(h.form(i, j));
    basis.push_back(std::move(row));
  }
  Lattice g = sublattice_gram(S.lattice, basis);
  return SublatticeBasis{std::move(basis), std::move(g)};
}

LPhi l_phi(const Lattice& L, const ScreenerSet& S) {
  const std::size_t d = L.rank();
  if (S.empty()) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return LPhi{basis, L, Integer(1), 0};
  }
  const SublatticeBasis zp = z_phi(S);
  const std::size_t r = zp.basis.size();
  // W M = H with M the d x r matrix of Z Phi basis columns. U = W^{-1} then
  // satisfies M = U H, so the first r columns of U span the saturation and the
  // remaining columns complete it to a basis of L.
  const auto h = hermite_rows(to_big(from_columns(zp.basis, d)));
  const IntMatrix u = unimodular_inverse(to_int(h.transform));
  std::vector<Vec> basis = zp.basis;
  for (std::size_t j = r; j < d; ++j) basis.push_back(u.col(j));
  Integer index = mp::abs(determinant(from_columns(basis, d)));
  Lattice g = sublattice_gram(L, basis);
  return LPhi{std::move(basis), std::move(g), std::move(index), r};
}

Vec unit_pairing_coefficients(const Vec& a) {
  Vec b(a.size(), 0);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [g2, s, t] = ext_gcd<std::int64_t>(g, a[i]);
    for (std::size_t j = 0; j < i; ++j) b[j] = checked_mul(b[j], s);
    b[i] = t;
    g = g2;
  }
  if (g != 1) throw LatticeError(ErrorCode::kNotPrimitive, "vector is not primitive; no unit pairing exists");
  return b;
}

RatVec dual_with_pairing(const Lattice& L, const Vec& a, std::int64_t target) {
  if (a.size() != L.rank()) throw LatticeError(ErrorCode::kDimensionMismatch, "vector length mismatch");
  if (target == 0) return RatVec(L.rank(), Rational(0));
  const Vec b = unit_pairing_coefficients(a);
  const RatMatrix ginv = gram_inverse(L);
  RatVec out(L.rank(), Rational(0));
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) out[i] += ginv(i, j) * b[j];
    out[i] *= target;
  }
  return out;
}

GammaResult gamma_for_screener(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) throw LatticeError(ErrorCode::kInvalidArgument, "p and q must be positive");
  if (!is_screener(L, a)) throw LatticeError(ErrorCode::kNotScreener, "vector is not a screener");
  if (norm(L, a) != checked_mul(2, checked_mul(p, q))) {
    throw LatticeError(ErrorCode::kNormMismatch, "<a,a> != 2pq");
  }
  GammaResult out;
  try {
    out.gamma = dual_with_pairing(L, a, p - q);
  } catch (const LatticeError& e) {
    if (e.code() != ErrorCode::kNotPrimitive) throw;
    throw LatticeError(ErrorCode::kGammaUnavailable, "screener is not primitive; gamma construction fails");
  }
  RatVec v = to_rational(a);
  for (auto& c : v) c /= -p;
  out.weight_minus_a_over_p = conformal_weight(L, v, out.gamma);
  return out;
}

Rational conformal_weight(const Lattice& L, const RatVec& v, const RatVec& gamma, std::int64_t r) {
  return Rational(r) + inner(L, v, v) / 2 - inner(L, gamma, v);
}

Rational central_charge(std::size_t d, const RatVec& g, const Lattice& L) {
  return Rational(static_cast<std::int64_t>(d)) - 12 * inner(L, g, g);
}

bool in_span(const std::vector<Vec>& basis, const Vec& x) {
  if (basis.empty()) return is_zero(x);
  const std::size_t d = x.size();
  // The Hermite rows span the same lattice; reduce x against their pivots.
  const auto h = hermite_rows(to_big(from_rows(basis, d)));
  std::vector<Integer> rem(x.begin(), x.end());
  std::size_t row = 0;
  for (std::size_t c = 0; c < d && row < h.rank; ++c) {
    if (h.form(row, c) == 0) continue;
    if (rem[c] % h.form(row, c) != 0) return false;
    const Integer q = rem[c] / h.form(row, c);
    for (std::size_t j = 0; j < d; ++j) rem[j] -= q * h.form(row, j);
    ++row;
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  return true;
}

}  // namespace latscreen
