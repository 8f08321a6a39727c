#include "latscreen/pairs.hpp"

#include <algorithm>

#include "latscreen/screeners.hpp"

namespace latscreen {

std::string to_string(PairType t) {
  switch (t) {
    case PairType::kI: return "I";
    case PairType::kII: return "II";
    case PairType::kIII: return "III";
    case PairType::kIVa: return "IV_a";
    case PairType::kIVb: return "IV_b";
  }
  return "?";
}

std::vector<std::pair<std::int64_t, std::int64_t>> pair_decompositions(const Lattice& L, const Vec& a) {
  if (is_zero(a)) throw LatticeError(ErrorCode::kZeroVector, "pair decomposition of the zero vector");
  const std::int64_t n = norm(L, a);
  if (n % 2 != 0) throw LatticeError(ErrorCode::kOddNorm, "vector has odd norm " + std::to_string(n));
  const std::int64_t half = n / 2;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 1; p <= half; ++p) {
    if (half % p != 0) continue;
    const std::int64_t q = half / p;
    if (in_dual(L, a, p) && in_dual(L, a, q)) out.emplace_back(p, q);
  }
  return out;
}

namespace {

RatVec scaled_rational(const Vec& a, const Rational& s) {
  RatVec out = to_rational(a);
  for (auto& c : out) c *= s;
  return out;
}

// gamma with <a, gamma> = target from the extended-gcd construction, or
// nullopt when a is imprimitive (and target != 0).
std::optional<RatVec> gcd_gamma(const Lattice& L, const Vec& a, std::int64_t target) {
  try {
    return dual_with_pairing(L, a, target);
  } catch (const LatticeError& e) {
    if (e.code() == ErrorCode::kNotPrimitive) return std::nullopt;
    throw;
  }
}

bool proportional(const Vec& a, const RatVec& b) {
  // a != 0; b is proportional iff a_i b_j = a_j b_i for all i, j.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

// A direction beta outside span(a) with <beta, v> = 0, if one exists.
std::optional<RatVec> orthogonal_witness(const Lattice& L, const Vec& a, const RatVec& v) {
  const std::size_t d = L.rank();
  const RatVec w = gram_times(L, v);
  std::size_t k = d;
  for (std::size_t i = 0; i < d; ++i)
    if (w[i] != 0) {
      k = i;
      break;
    }
  std::vector<RatVec> candidates;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec e(d, Rational(0));
    e[j] = 1;
    if (k == d) {
      candidates.push_back(e);
    } else if (j != k) {
      e[k] = -w[j] / w[k];
      candidates.push_back(e);
    }
  }
  for (auto& c : candidates)
    if (!proportional(a, c)) return c;
  return std::nullopt;
}

// Shared tail of types II and III: find gamma with <a, gamma> = target and a
// witness beta orthogonal to (u - 2 gamma). Prefers the extended-gcd gamma;
// falls back to gamma0 = u / 2, which makes every beta admissible, when that
// lies in the extended dual.
struct GammaBeta {
  RatVec gamma;
  RatVec beta;
};

std::optional<GammaBeta> gamma_and_beta(const Lattice& L, const Vec& a, std::int64_t target, const RatVec& u) {
  if (auto g = gcd_gamma(L, a, target)) {
    RatVec v = u;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= 2 * (*g)[i];
    if (auto beta = orthogonal_witness(L, a, v)) return GammaBeta{*g, *beta};
  }
  RatVec g0 = u;
  for (auto& c : g0) c /= 2;
  if (in_extended_dual(L, g0) && inner(L, a, g0) == target) {
    if (auto beta = orthogonal_witness(L, a, RatVec(L.rank(), Rational(0)))) return GammaBeta{g0, *beta};
  }
  return std::nullopt;
}

}  // namespace

PairSpec make_type_i(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t p_prime) {
  if (p <= 0 || p_prime <= 0) throw LatticeError(ErrorCode::kInvalidArgument, "p and p' must be positive");
  const std::int64_t n = norm(L, a);
  if (n != checked_mul(2, checked_mul(p, p_prime))) throw LatticeError(ErrorCode::kNormMismatch, "<a,a> != 2pp'");
  if (!in_dual(L, a, p) || !in_dual(L, a, p_prime)) {
    throw LatticeError(ErrorCode::kInvalidArgument, "a/p or a/p' is not in the dual lattice");
  }
  PairSpec s;
  s.alpha = a;
  s.p = p;
  s.p_prime = p_prime;
  s.type = PairType::kI;
  s.m = 2 * p;
  auto g = gcd_gamma(L, a, p - p_prime);
  if (!g) throw LatticeError(ErrorCode::kGammaUnavailable, "a is imprimitive and p != p'; no gamma constructed");
  s.gamma = *g;
  s.central_charge = central_charge(L.rank(), s.gamma, L);
  s.weight_first = conformal_weight(L, scaled_rational(a, Rational(-1, p)), s.gamma);
  s.weight_second = conformal_weight(L, scaled_rational(a, Rational(1, p_prime)), s.gamma);
  if (s.weight_first != 1 || s.weight_second != 1) {
    throw LatticeError(ErrorCode::kInvalidArgument, "type I momenta do not have conformal weight 1");
  }
  return s;
}

Feasibility type_ii_feasible(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t p_prime) {
  Feasibility f;
  f.p = p;
  f.p_prime = p_prime;
  f.m = 2 * (p - p_prime);
  auto no = [&](std::string why) {
    f.reason = std::move(why);
    return f;
  };
  if (p <= 0 || p_prime <= 0) return no("p and p' must be positive");
  if (norm(L, a) != 2 * p * p_prime) return no("<a,a> != 2pp'");
  if (p <= p_prime) return no("needs p > p'");
  if (p == 2 * p_prime) return no("p = 2p' is excluded");
  if (!in_dual(L, a, p)) return no("a/p is not in the dual lattice");
  if (!in_dual(L, scaled(a, p - p_prime), p * p_prime)) return no("(p-p')a/pp' is not in the dual lattice");
  if (L.rank() < 2) return no("rank 1 leaves no direction outside span(a)");
  const RatVec u = scaled_rational(a, Rational(p - p_prime, p * p_prime));
  auto gb = gamma_and_beta(L, a, p - p_prime, u);
  if (!gb) return no("no gamma in the extended dual admits a direction beta outside span(a)");
  PairSpec s;
  s.alpha = a;
  s.p = p;
  s.p_prime = p_prime;
  s.type = PairType::kII;
  s.m = f.m;
  s.gamma = gb->gamma;
  s.beta = gb->beta;
  s.central_charge = central_charge(L.rank(), s.gamma, L);
  s.weight_first = conformal_weight(L, scaled_rational(a, Rational(-1, p)), s.gamma);
  s.weight_second = conformal_weight(L, u, s.gamma, 1);
  f.pair = std::move(s);
  f.feasible = true;
  return f;
}

Feasibility type_iii_feasible(const Lattice& L, const Vec& a, std::int64_t p_prime, std::int64_t r) {
  Feasibility f;
  f.p_prime = p_prime;
  f.m = r - p_prime;
  auto no = [&](std::string why) {
    f.reason = std::move(why);
    return f;
  };
  if (p_prime <= 0 || r <= 0) return no("p' and r must be positive");
  if (r <= p_prime) return no("needs r > p'");
  const std::int64_t num = r * r - p_prime * p_prime;
  const bool integral = num % (4 * p_prime) == 0;
  const std::int64_t p = integral ? num / (4 * p_prime) : 0;
  f.p = p;
  if (r == 3 * p_prime) return no("r = 3p' is excluded");
  if (!integral) return no("p = (r^2 - p'^2)/4p' is not an integer");
  if (norm(L, a) != 2 * p * p_prime) return no("<a,a> != 2pp'");
  if (!in_dual(L, a, p)) return no("a/p is not in the dual lattice");
  if (!in_dual(L, scaled(a, r - p_prime), 2 * p * p_prime)) return no("(r-p')a/2pp' is not in the dual lattice");
  if (L.rank() < 2) return no("rank 1 leaves no direction outside span(a)");
  // beta is orthogonal to a/p + 2 gamma = -(u - 2 gamma) with u = -a/p.
  const RatVec u = scaled_rational(a, Rational(-1, p));
  auto gb = gamma_and_beta(L, a, -p_prime, u);
  if (!gb) return no("no gamma in the extended dual admits a direction beta outside span(a)");
  PairSpec s;
  s.alpha = a;
  s.p = p;
  s.p_prime = p_prime;
  s.type = PairType::kIII;
  s.m = f.m;
  s.r = r;
  s.gamma = gb->gamma;
  s.beta = gb->beta;
  s.central_charge = central_charge(L.rank(), s.gamma, L);
  s.weight_first = conformal_weight(L, u, s.gamma, 1);
  s.weight_second = conformal_weight(L, scaled_rational(a, Rational(r - p_prime, 2 * p * p_prime)), s.gamma);
  f.pair = std::move(s);
  f.feasible = true;
  return f;
}

std::vector<std::int64_t> solve_weight_quadratic(std::int64_t p, std::int64_t p_prime, std::int64_t r1,
                                                 std::int64_t r2) {
  if (p < 1 || p_prime < 1) throw LatticeError(ErrorCode::kInvalidArgument, "p and p' must be positive");
  if (r1 < 0 || r2 < 0) throw LatticeError(ErrorCode::kInvalidArgument, "r1 and r2 must be nonnegative");
  // m = -b +- sqrt(b^2 - c) with b = p(r1 - 1) + p', c = 4pp'(r2 - 1).
  const i128 b = add128(mul128(p, r1 - 1), p_prime);
  const i128 c = mul128(mul128(4, mul128(p, p_prime)), r2 - 1);
  const i128 disc = add128(mul128(b, b), -c);
  std::vector<std::int64_t> out;
  if (disc < 0) return out;
  const i128 s = isqrt(disc);
  if (s * s != disc) return out;
  for (i128 m : {-b - s, -b + s})
    if (m > 0) out.push_back(to_int64(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TypeIVSolution> type_iv_search(std::int64_t p, std::int64_t p_prime, std::int64_t max_r) {
  if (p < 1 || p_prime < 1 || max_r < 1) throw LatticeError(ErrorCode::kInvalidArgument, "bounds must be positive");
  std::vector<TypeIVSolution> out;
  const i128 pq4 = mul128(4, mul128(p, p_prime));
  for (std::int64_t r2 = 2; r2 <= max_r; ++r2) {
    const i128 diff = p_prime - p;
    const i128 d4 = add128(mul128(diff, diff), mul128(pq4, 1 - r2));
    if (d4 < 0) break;  // decreasing in r2
    const i128 r = isqrt(d4);
    if (r * r != d4) continue;
    out.push_back({'A', 0, r2, to_int64(r), solve_weight_quadratic(p, p_prime, 0, r2)});
  }
  for (std::int64_t r1 = 2; r1 <= max_r; ++r1) {
    const i128 s = add128(mul128(r1 - 1, p), p_prime);
    const i128 d4 = add128(mul128(s, s), pq4);
    const i128 r = isqrt(d4);
    if (r * r != d4) continue;
    out.push_back({'B', r1, 0, to_int64(r), solve_weight_quadratic(p, p_prime, r1, 0)});
  }
  return out;
}

PairMomentum even_momentum(const Lattice& L, const Vec& a) {
  if (parity(L, a) == 0) return {a, false};
  return {scaled(a, 2), true};
}

}  // namespace latscreen
