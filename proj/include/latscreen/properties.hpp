#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latscreen/screeners.hpp"

namespace latscreen {

// Outcome of a batch of structural checks on a computed screener set.
struct PropertyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const PropertyReport& other);
};

// Pairwise inner products lie in {0, +-N/2, +-N} (N the larger norm), with +-N only for +-equal vectors.
PropertyReport check_angle_trichotomy(const ScreenerSet& S);
// No multiple n*a with |n| >= 2 of a screener is a screener.
PropertyReport check_no_multiples(const ScreenerSet& S);
// <a,b> = -<b,b>/2 with <a,a> <= <b,b> forces a + b into the set.
PropertyReport check_sum_closure(const ScreenerSet& S);
// For orthogonal a, b: a +- b is a screener iff equal norms, the divisibility
// condition holds and a +- b is not in 2L.
PropertyReport check_orthogonal_sums(const ScreenerSet& S);
// lcm of half-norms divides Det.
PropertyReport check_norm_divisibility(const ScreenerSet& S);
// 2L inside L_Phi inside L, index^2 Det(L) = Det(L_Phi), and Det(L_Phi) | 4^d Det(L) when proper.
PropertyReport check_l_phi(const ScreenerSet& S);
// For an indecomposable lattice of rank >= 2: every even vector x with
// 2x/<x,x> in the dual and norm <= bound is a screener.
PropertyReport check_dual_condition_suffices(const ScreenerSet& S, std::int64_t bound);

// All of the above except the indecomposable-only check.
PropertyReport check_all_properties(const ScreenerSet& S);

}  // namespace latscreen
