#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "brute_force.hpp"
#include "latscreen/decomposition.hpp"
#include "latscreen/lattice.hpp"

namespace helpers {

using latscreen::IntMatrix;
using latscreen::Lattice;
using latscreen::Vec;

inline brute::Gram rows(const IntMatrix& m) {
  brute::Gram g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) g[i] = m.row(i);
  return g;
}

inline Lattice lat(std::initializer_list<std::initializer_list<std::int64_t>> g) { return Lattice(IntMatrix(g)); }

inline Lattice A(std::size_t n, std::int64_t s = 1) { return latscreen::catalog(latscreen::RootFamily::A, n, s); }
inline Lattice D(std::size_t n, std::int64_t s = 1) { return latscreen::catalog(latscreen::RootFamily::D, n, s); }
inline Lattice E(std::size_t n, std::int64_t s = 1) { return latscreen::catalog(latscreen::RootFamily::E, n, s); }

// B^T B for a random nonsingular B: positive definite at any rank, unlike
// rejection sampling of symmetric matrices.
inline IntMatrix product_gram(std::mt19937_64& rng, std::size_t d, std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> e(-max_entry, max_entry);
  for (;;) {
    IntMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) b(i, j) = e(rng);
    if (latscreen::determinant(b) == 0) continue;
    return b.transpose() * b;
  }
}

inline std::set<Vec> canonical_set(const std::vector<Vec>& vs) {
  std::set<Vec> s;
  for (const auto& v : vs) s.insert(latscreen::canonical(v));
  return s;
}

}  // namespace helpers

// Runs `stmt` and checks it throws LatticeError with the given code.
#define EXPECT_CODE(stmt, expected)                                              \
  do {                                                                           \
    try {                                                                        \
      stmt;                                                                      \
      ADD_FAILURE() << "no exception from " #stmt;                               \
    } catch (const latscreen::LatticeError& e_) {                                \
      EXPECT_EQ(e_.code(), latscreen::ErrorCode::expected) << e_.what();         \
    }                                                                            \
  } while (0)
