#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "latscreen/oracle.hpp"
#include "latscreen/pairs.hpp"
#include "latscreen/screeners.hpp"

using namespace latscreen;
using helpers::lat;

using PairList = std::vector<std::pair<std::int64_t, std::int64_t>>;

TEST(Pairs, Decompositions) {
  EXPECT_EQ(pair_decompositions(lat({{12}}), {1}), (PairList{{1, 6}, {2, 3}, {3, 2}, {6, 1}}));
  EXPECT_EQ(pair_decompositions(lat({{2}}), {1}), (PairList{{1, 1}}));
  EXPECT_EQ(pair_decompositions(helpers::A(2), {1, 2}), (PairList{{1, 3}, {3, 1}}));
  EXPECT_CODE(pair_decompositions(lat({{3}}), {1}), kOddNorm);
  EXPECT_CODE(pair_decompositions(helpers::A(2), {0, 0}), kZeroVector);
}

TEST(Pairs, TypeI) {
  const auto s = make_type_i(lat({{4}}), {1}, 2, 1);
  EXPECT_EQ(s.gamma, (RatVec{Rational(1, 4)}));
  EXPECT_EQ(s.central_charge, -2);
  EXPECT_EQ(s.m, 4);
  EXPECT_EQ(make_type_i(lat({{12}}), {1}, 3, 2).central_charge, 0);
  const auto eq = make_type_i(helpers::A(2), {1, 0}, 1, 1);
  EXPECT_EQ(eq.gamma, (RatVec{0, 0}));
  EXPECT_EQ(eq.central_charge, 2);
  // Imprimitive momentum with p = p': gamma = 0 still works.
  EXPECT_EQ(make_type_i(lat({{2}}), {2}, 2, 2).gamma, (RatVec{0}));
  EXPECT_CODE(make_type_i(lat({{2}}), {2}, 4, 1), kGammaUnavailable);
  EXPECT_CODE(make_type_i(lat({{4}}), {1}, 1, 1), kNormMismatch);
}

TEST(Pairs, CentralChargeGrid) {
  for (std::int64_t p = 1; p <= 12; ++p) {
    for (std::int64_t q = 1; q <= 12; ++q) {
      const auto s = make_type_i(Lattice(IntMatrix{{2 * p * q}}), {1}, p, q);
      EXPECT_EQ(s.gamma, (RatVec{Rational(p - q, 2 * p * q)}));
      EXPECT_EQ(s.central_charge, 1 - Rational(6 * (p - q) * (p - q), p * q)) << p << "," << q;
      EXPECT_EQ(s.weight_first, 1);
      EXPECT_EQ(s.weight_second, 1);
    }
  }
}

TEST(Pairs, TypeII) {
  EXPECT_FALSE(type_ii_feasible(lat({{12}}), {1}, 3, 2).feasible);
  EXPECT_FALSE(type_ii_feasible(lat({{4}}), {1}, 2, 1).feasible);
  EXPECT_FALSE(type_ii_feasible(lat({{8, 0}, {0, 2}}), {1, 0}, 2, 1).feasible);  // p = 2p'
  const Lattice L = lat({{12, 0}, {0, 2}});
  const auto f = type_ii_feasible(L, {1, 0}, 3, 2);
  ASSERT_TRUE(f.feasible) << f.reason;
  ASSERT_TRUE(f.pair && f.pair->beta);
  EXPECT_EQ(*f.pair->beta, (RatVec{0, 1}));
  EXPECT_EQ(f.m, 2);
  EXPECT_EQ(inner(L, Vec{1, 0}, f.pair->gamma), 1);
  EXPECT_EQ(f.pair->weight_first, 1);
  EXPECT_EQ(f.pair->weight_second, 1);
  EXPECT_FALSE(type_ii_feasible(L, {1, 0}, 2, 3).feasible);
}

TEST(Pairs, FeasiblePairsHaveWeightOneAndOrthogonalWitness) {
  std::mt19937_64 rng(314);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const Lattice L(random_gram(rng, 2 + i % 2, 8));
    for (const auto& a : all_screeners(L).screeners) {
      for (const auto& [p, q] : pair_decompositions(L, a)) {
        const auto t1 = make_type_i(L, a, p, q);
        EXPECT_TRUE(in_extended_dual(L, t1.gamma));
        const auto f = type_ii_feasible(L, a, p, q);
        if (!f.feasible) continue;
        ++checked;
        const PairSpec& s = *f.pair;
        EXPECT_EQ(s.weight_first, 1);
        EXPECT_EQ(s.weight_second, 1);
        EXPECT_EQ(inner(L, a, s.gamma), p - q);
        EXPECT_TRUE(in_extended_dual(L, s.gamma));
        RatVec v = to_rational(a);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] * Rational(p - q, p * q) - 2 * s.gamma[k];
        EXPECT_EQ(inner(L, *s.beta, v), 0);
        // beta is not a multiple of a.
        const RatVec ar = to_rational(a);
        bool parallel = true;
        for (std::size_t x = 0; x < a.size(); ++x)
          for (std::size_t y = 0; y < a.size(); ++y) parallel = parallel && ar[x] * (*s.beta)[y] == ar[y] * (*s.beta)[x];
        EXPECT_FALSE(parallel);
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Pairs, TypeIII) {
  const auto excluded = type_iii_feasible(lat({{4}}), {1}, 1, 3);
  EXPECT_FALSE(excluded.feasible);
  EXPECT_EQ(excluded.p, 2);
  EXPECT_NE(excluded.reason.find("3p'"), std::string::npos);

  const Lattice L = lat({{12, 0}, {0, 2}});
  const auto f = type_iii_feasible(L, {1, 0}, 1, 5);
  EXPECT_EQ(f.p, 6);
  EXPECT_EQ(f.m, 4);
  ASSERT_TRUE(f.feasible) << f.reason;
  EXPECT_EQ(inner(L, Vec{1, 0}, f.pair->gamma), -1);
  EXPECT_EQ(f.pair->weight_first, 1);
  EXPECT_EQ(f.pair->weight_second, 1);

  const auto frac = type_iii_feasible(L, {1, 0}, 2, 4);
  EXPECT_FALSE(frac.feasible);
  EXPECT_NE(frac.reason.find("integer"), std::string::npos);
  EXPECT_FALSE(type_iii_feasible(lat({{12}}), {1}, 1, 5).feasible);  // rank 1
}

TEST(Pairs, WeightQuadraticExamples) {
  EXPECT_EQ(solve_weight_quadratic(3, 1, 0, 1), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(solve_weight_quadratic(2, 1, 1, 0), (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(solve_weight_quadratic(1, 1, 1, 1).empty());
  for (std::int64_t p = 1; p <= 20; ++p)
    for (std::int64_t q = 1; q <= 20; ++q) EXPECT_EQ(solve_weight_quadratic(p, q, 0, 0), (std::vector<std::int64_t>{2 * p}));
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      EXPECT_EQ(solve_weight_quadratic(p, q, 0, 1), (std::vector<std::int64_t>{2 * (p - q)}));
}

TEST(Pairs, WeightQuadraticMatchesDirectSearch) {
  for (std::int64_t p = 1; p <= 6; ++p)
    for (std::int64_t q = 1; q <= 6; ++q)
      for (std::int64_t r1 = 0; r1 <= 6; ++r1)
        for (std::int64_t r2 = 0; r2 <= 6; ++r2) {
          std::vector<std::int64_t> direct;
          const std::int64_t top = 4 * p * q * std::max<std::int64_t>(r2, 1) + 2 * (p * std::max<std::int64_t>(r1, 1) + q);
          for (std::int64_t m = 1; m <= top; ++m)
            if (m * m + 2 * m * (p * (r1 - 1) + q) + 4 * p * q * (r2 - 1) == 0) direct.push_back(m);
          EXPECT_EQ(solve_weight_quadratic(p, q, r1, r2), direct);
        }
}

TEST(Pairs, TypeIVSearch) {
  EXPECT_TRUE(type_iv_search(1, 1, 10).empty());
  const auto s = type_iv_search(6, 1, 10);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].branch, 'A');
  EXPECT_EQ(s[0].r2, 2);
  EXPECT_EQ(s[0].r, 1);
  EXPECT_EQ(s[0].m, (std::vector<std::int64_t>{4, 6}));
  for (const auto& x : type_iv_search(2, 1, 10)) EXPECT_NE(x.branch, 'B');
  for (std::int64_t p = 1; p <= 10; ++p)
    for (std::int64_t q = 1; q <= 10; ++q) EXPECT_TRUE(type_iv_search(p, q, 1).empty());
}

TEST(Pairs, OddMomentumIsDoubled) {
  const Lattice L = lat({{2, 1}, {1, 3}});
  const auto m = even_momentum(L, {0, 1});
  EXPECT_TRUE(m.doubled);
  EXPECT_EQ(m.alpha, (Vec{0, 2}));
  EXPECT_EQ(norm(L, m.alpha), 12);
  EXPECT_FALSE(even_momentum(L, {1, 0}).doubled);
}
