#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latscreen/lattice.hpp"

namespace latscreen {

enum class PairType { kI, kII, kIII, kIVa, kIVb };

std::string to_string(PairType t);

// Lattice data of a screening pair with momenta -alpha/p and m*alpha/(2 p p').
struct PairSpec {
  Vec alpha;
  std::int64_t p = 0;
  std::int64_t p_prime = 0;
  PairType type = PairType::kI;
  RatVec gamma;
  Rational central_charge;
  std::int64_t m = 0;  // second momentum is m * alpha / (2 p p')
  std::optional<std::int64_t> r;
  std::optional<RatVec> beta;  // Heisenberg direction for types II and III
  Rational weight_first;       // conformal weight of the first screening vector
  Rational weight_second;
};

// All (p, p') with <a,a> = 2 p p' and a/p, a/p' in the dual lattice, sorted by p.
// Throws kOddNorm for odd-norm input and kZeroVector for 0.
std::vector<std::pair<std::int64_t, std::int64_t>> pair_decompositions(const Lattice& L, const Vec& a);

// Type I: gamma with <a, gamma> = p - p'. Needs a primitive or p = p'.
PairSpec make_type_i(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t p_prime);

// Feasibility is a value: `reason` explains a negative answer.
struct Feasibility {
  bool feasible = false;
  std::string reason;
  std::int64_t p = 0;
  std::int64_t p_prime = 0;
  std::int64_t m = 0;
  std::optional<PairSpec> pair;
};

Feasibility type_ii_feasible(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t p_prime);

// p is derived as (r^2 - p'^2) / 4p'.
Feasibility type_iii_feasible(const Lattice& L, const Vec& a, std::int64_t p_prime, std::int64_t r);

// Positive integer roots m of m^2 + 2m(p(r1 - 1) + p') + 4pp'(r2 - 1) = 0, ascending.
std::vector<std::int64_t> solve_weight_quadratic(std::int64_t p, std::int64_t p_prime, std::int64_t r1,
                                                 std::int64_t r2);

struct TypeIVSolution {
  char branch = 'A';  // 'A': r1 = 0, r2 >= 2.  'B': r1 >= 2, r2 = 0.
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t r = 0;  // square root of the reduced discriminant
  std::vector<std::int64_t> m;
};

std::vector<TypeIVSolution> type_iv_search(std::int64_t p, std::int64_t p_prime, std::int64_t max_r = 50);

// Odd-norm momenta are doubled so that pair analysis sees an even vector.
struct PairMomentum {
  Vec alpha;
  bool doubled = false;
};
PairMomentum even_momentum(const Lattice& L, const Vec& a);

}  // namespace latscreen
