#include "latscreen/enumeration.hpp"

#include <algorithm>

namespace latscreen {

namespace {

// Arithmetic for the two enumeration back ends: checked i128 first, exact
// big integers when the leading minors do not fit.
i128 mul(i128 a, i128 b) { return mul128(a, b); }
i128 add(i128 a, i128 b) { return add128(a, b); }
i128 root(i128 a) { return isqrt(a); }
i128 div_floor(i128 a, i128 b) { return floor_div(a, b); }
void load(i128& out, const Integer& v) { out = to_int64(v); }
std::int64_t small(i128 v) { return to_int64(v); }

Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer add(const Integer& a, const Integer& b) { return a + b; }
Integer root(const Integer& a) { return isqrt(a); }
Integer div_floor(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}
void load(Integer& out, const Integer& v) { out = v; }
std::int64_t small(const Integer& v) { return to_int64(v); }

template <typename T>
T div_ceil(const T& a, const T& b) {
  return -div_floor(T(-a), b);
}

// Bareiss intermediates of a positive definite Gram matrix. stage[k] is the
// trailing (d-k)x(d-k) block after eliminating k variables; it equals the
// order-k leading minor times the Schur complement.
template <typename T>
struct FractionFreeLdl {
  std::vector<std::vector<T>> stage;
  std::vector<T> prev_pivot;  // leading minor of order k, prev_pivot[0] = 1
};

template <typename T>
FractionFreeLdl<T> factor(const Lattice& L) {
  const std::size_t d = L.rank();
  FractionFreeLdl<T> f;
  f.prev_pivot.assign(d + 1, T(1));
  BigMatrix a = to_big(L.gram());
  Integer prev = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<T> block((d - k) * (d - k));
    for (std::size_t i = k; i < d; ++i)
      for (std::size_t j = k; j < d; ++j) load(block[(i - k) * (d - k) + (j - k)], a(i, j));
    f.stage.push_back(std::move(block));
    const Integer pivot = a(k, k);
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j) a(i, j) = (pivot * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = pivot;
    load(f.prev_pivot[k + 1], pivot);
  }
  return f;
}

template <typename T>
class Enumerator {
 public:
  Enumerator(const Lattice& L, std::int64_t bound, const VectorFilter* keep)
      : L_(L), bound_(bound), keep_(keep), f_(factor<T>(L)), x_(L.rank(), 0) {}

  std::vector<Vec> run() {
    if (L_.rank() > 0) descend(L_.rank() - 1);
    return std::move(out_);
  }

 private:
  // Level k: coordinates k+1..d-1 are fixed. With S = stage[k] (trailing block
  // from index k), the form restricted to x_k.. is
  //   (S_kk x_k^2 + 2 b x_k + c) / P_k
  // where P_k is the order-k leading minor. Require it to be <= bound.
  void descend(std::size_t k) {
    const std::size_t d = L_.rank();
    const std::size_t w = d - k;
    const auto& s = f_.stage[k];
    T b = 0;
    for (std::size_t j = k + 1; j < d; ++j) b = add(b, mul(s[j - k], T(x_[j])));
    T c = 0;
    for (std::size_t i = k + 1; i < d; ++i) {
      if (x_[i] == 0) continue;
      T row = 0;
      for (std::size_t j = k + 1; j < d; ++j) row = add(row, mul(s[(i - k) * w + (j - k)], T(x_[j])));
      c = add(c, mul(row, T(x_[i])));
    }
    const T a = s[0];
    const T t = mul(T(bound_), f_.prev_pivot[k]);
    const T disc = add(mul(b, b), T(-mul(a, add(c, T(-t)))));
    if (disc < 0) return;
    const T r = root(disc);
    const std::int64_t lo = small(div_ceil(T(-r - b), a));
    const std::int64_t hi = small(div_floor(T(r - b), a));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[k] = v;
      if (k == 0) {
        if (!is_canonical(x_)) continue;
        // prev_pivot[0] = 1, so the quadratic is the norm itself.
        const T n = add(mul(add(mul(a, T(v)), mul(T(2), b)), T(v)), c);
        if (keep_ == nullptr || (*keep_)(x_, small(n))) out_.push_back(x_);
      } else {
        descend(k - 1);
      }
    }
    x_[k] = 0;
  }

  const Lattice& L_;
  std::int64_t bound_;
  const VectorFilter* keep_;
  FractionFreeLdl<T> f_;
  Vec x_;
  std::vector<Vec> out_;
};

std::vector<Vec> run_enumeration(const Lattice& L, std::int64_t bound, const VectorFilter* keep) {
  try {
    return Enumerator<i128>(L, bound, keep).run();
  } catch (const LatticeError& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
  }
  return Enumerator<Integer>(L, bound, keep).run();
}

}  // namespace

EnumerationResult make_result(const Lattice& L, std::vector<Vec> vectors) {
  std::vector<std::pair<std::int64_t, Vec>> keyed;
  keyed.reserve(vectors.size());
  for (auto& v : vectors) {
    const std::int64_t n = norm(L, v);
    keyed.emplace_back(n, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end());
  EnumerationResult r;
  for (auto& [n, v] : keyed) {
    r.norms.push_back(n);
    r.vectors.push_back(std::move(v));
  }
  return r;
}

EnumerationResult enumerate_up_to_norm(const Lattice& L, std::int64_t bound) {
  if (bound < 1) throw LatticeError(ErrorCode::kInvalidArgument, "enumeration bound must be positive");
  return make_result(L, run_enumeration(L, bound, nullptr));
}

EnumerationResult enumerate_up_to_norm(const Lattice& L, std::int64_t bound, const VectorFilter& keep) {
  if (bound < 1) throw LatticeError(ErrorCode::kInvalidArgument, "enumeration bound must be positive");
  return make_result(L, run_enumeration(L, bound, &keep));
}

EnumerationResult enumerate_exact_norm(const Lattice& L, std::int64_t n) {
  if (n < 1) throw LatticeError(ErrorCode::kInvalidArgument, "norm must be positive");
  return enumerate_up_to_norm(L, n, [n](const Vec&, std::int64_t m) { return m == n; });
}

EnumerationResult filter_norm_divisors(const EnumerationResult& in, const Integer& det) {
  EnumerationResult r;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::int64_t n = in.norms[i];
    if (n % 2 == 0 && det % (n / 2) == 0) {
      r.vectors.push_back(in.vectors[i]);
      r.norms.push_back(n);
    }
  }
  return r;
}

}  // namespace latscreen
