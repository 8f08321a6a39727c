#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latscreen/lattice.hpp"

namespace latscreen {

// One representative per +-pair (first nonzero coordinate positive), sorted by
// (norm, coordinates).
struct EnumerationResult {
  std::vector<Vec> vectors;
  std::vector<std::int64_t> norms;

  std::size_t size() const { return vectors.size(); }
};

// All nonzero x with x^T G x <= bound. Fincke-Pohst recursion over the
// fraction-free LDL^T (Bareiss) form of G, so every bound test is an exact
// integer comparison.
EnumerationResult enumerate_up_to_norm(const Lattice& L, std::int64_t bound);

// Same search, keeping only vectors accepted by `keep(x, norm)`. The predicate
// runs at the leaves, so rejected vectors are never stored.
using VectorFilter = std::function<bool(const Vec&, std::int64_t)>;
EnumerationResult enumerate_up_to_norm(const Lattice& L, std::int64_t bound, const VectorFilter& keep);

// Vectors of norm exactly n.
EnumerationResult enumerate_exact_norm(const Lattice& L, std::int64_t n);

// Keep only vectors whose norm is 2k with k dividing `det`.
EnumerationResult filter_norm_divisors(const EnumerationResult& r, const Integer& det);

// Sort and build the parallel norm list; shared with the box oracle.
EnumerationResult make_result(const Lattice& L, std::vector<Vec> vectors);

}  // namespace latscreen
