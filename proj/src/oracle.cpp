#include "latscreen/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "latscreen/screeners.hpp"

namespace latscreen {

std::vector<std::int64_t> box_radii(const Lattice& L, std::int64_t bound) {
  const std::size_t d = L.rank();
  std::vector<std::int64_t> radii(d);
  for (std::size_t i = 0; i < d; ++i) {
    // (G^-1)_ii = det(G without row and column i) / det(G).
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0, rr = 0; r < d; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < d; ++c) {
        if (c == i) continue;
        minor(rr, cc++) = L.gram(r, c);
      }
      ++rr;
    }
    const Integer adj = d == 1 ? Integer(1) : determinant(minor);
    const Integer need = Integer(bound) * adj;
    Integer u = isqrt(need / L.det());
    while (u * u * L.det() < need) ++u;
    radii[i] = to_int64(u);
  }
  return radii;
}

namespace {

class BoxScan {
 public:
  BoxScan(const Lattice& L, std::int64_t bound, const VectorFilter* keep)
      : L_(L), bound_(bound), keep_(keep), radii_(box_radii(L, bound)), x_(L.rank(), 0), gx_(L.rank(), 0) {}

  std::vector<Vec> run() {
    if (L_.rank() > 0) level(0);
    return std::move(out_);
  }

 private:
  // Move coordinate k by delta, keeping norm_ and Gx in step.
  void shift(std::size_t k, std::int64_t delta) {
    norm_ += 2 * static_cast<i128>(delta) * gx_[k] + static_cast<i128>(delta) * delta * L_.gram(k, k);
    for (std::size_t i = 0; i < x_.size(); ++i) gx_[i] += static_cast<i128>(delta) * L_.gram(i, k);
    x_[k] += delta;
  }

  void level(std::size_t k) {
    const std::int64_t r = radii_[k];
    shift(k, -r - x_[k]);
    for (std::int64_t v = -r; v <= r; ++v) {
      if (v != -r) shift(k, 1);
      if (k + 1 < x_.size()) {
        level(k + 1);
      } else if (norm_ > 0 && norm_ <= bound_ && is_canonical(x_)) {
        const auto n = static_cast<std::int64_t>(norm_);
        if (!keep_ || (*keep_)(x_, n)) out_.push_back(x_);
      }
    }
    shift(k, -x_[k]);
  }

  const Lattice& L_;
  std::int64_t bound_;
  const VectorFilter* keep_;
  std::vector<std::int64_t> radii_;
  Vec x_;
  std::vector<i128> gx_;
  i128 norm_ = 0;
  std::vector<Vec> out_;
};

}  // namespace

EnumerationResult box_enumerate(const Lattice& L, std::int64_t bound) {
  return make_result(L, BoxScan(L, bound, nullptr).run());
}

EnumerationResult box_enumerate(const Lattice& L, std::int64_t bound, const VectorFilter& keep) {
  return make_result(L, BoxScan(L, bound, &keep).run());
}

EnumerationResult box_screeners(const Lattice& L) {
  const std::int64_t bound = to_int64(2 * L.det());
  return box_enumerate(L, bound, [&](const Vec& x, std::int64_t) { return is_screener(L, x); });
}

IntMatrix random_gram(std::mt19937_64& rng, std::size_t d, std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> diag(1, max_entry);
  std::uniform_int_distribution<std::int64_t> off(-max_entry, max_entry);
  for (;;) {
    IntMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      g(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < d; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (is_positive_definite(g)) return g;
  }
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d, std::int64_t max_entry) {
  IntMatrix u = IntMatrix::identity(d);
  if (d < 2) {
    if (d == 1 && std::bernoulli_distribution(0.5)(rng)) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> index(0, d - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  // col_j += c * col_i, skipping steps that would leave the entry bound.
  for (std::size_t step = 0; step < 4 * d; ++step) {
    const std::size_t i = index(rng), j = index(rng);
    const int c = coeff(rng);
    if (i == j || c == 0) continue;
    bool ok = true;
    for (std::size_t r = 0; r < d && ok; ++r) ok = std::abs(u(r, j) + c * u(r, i)) <= max_entry;
    if (!ok) continue;
    for (std::size_t r = 0; r < d; ++r) u(r, j) += c * u(r, i);
  }
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix ps(d, d);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < d; ++i) ps(perm[i], i) = flip(rng) ? -1 : 1;
  return u * ps;
}

IntMatrix transform_gram(const IntMatrix& g, const IntMatrix& u) { return u.transpose() * g * u; }

std::size_t OracleReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const OracleCase& c) { return !c.match; }));
}

OracleReport oracle_check(std::uint64_t seed, std::size_t max_rank, std::size_t cases, std::int64_t max_entry) {
  if (max_rank < 1 || max_entry < 1) throw LatticeError(ErrorCode::kInvalidArgument, "rank and entry bounds must be positive");
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration t) { return std::chrono::duration<double, std::milli>(t).count(); };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
  OracleReport report;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t d = rank_dist(rng);
    OracleCase oc;
    oc.gram = random_gram(rng, d, max_entry);
    const Lattice L(oc.gram);
    const auto t0 = clock::now();
    const ScreenerSet fast = all_screeners(L);
    const auto t1 = clock::now();
    const EnumerationResult box = box_screeners(L);
    const auto t2 = clock::now();
    oc.fast_count = fast.size();
    oc.box_count = box.size();
    oc.match = fast.screeners == box.vectors && fast.norms == box.norms;
    oc.fast_ms = ms(t1 - t0);
    oc.box_ms = ms(t2 - t1);
    report.cases.push_back(std::move(oc));
  }
  return report;
}

}  // namespace latscreen
