#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latscreen/enumeration.hpp"
#include "latscreen/lattice.hpp"

namespace latscreen {

// Smallest u with u^2 >= bound * (G^-1)_ii, per coordinate.
std::vector<std::int64_t> box_radii(const Lattice& L, std::int64_t bound);

// Plain scan of the coordinate box given by box_radii. Independent of the
// Fincke-Pohst code; used as a reference.
EnumerationResult box_enumerate(const Lattice& L, std::int64_t bound);
EnumerationResult box_enumerate(const Lattice& L, std::int64_t bound, const VectorFilter& keep);

// Screeners by box scan up to norm 2 * Det.
EnumerationResult box_screeners(const Lattice& L);

// Random positive definite Gram: diagonal in [1, max_entry], off-diagonal in
// [-max_entry, max_entry]; non-definite draws are rejected and redrawn.
IntMatrix random_gram(std::mt19937_64& rng, std::size_t d, std::int64_t max_entry);

// Random unimodular matrix: elementary column operations kept within
// |entry| <= max_entry, then a signed permutation.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d, std::int64_t max_entry = 3);

// U^T G U.
IntMatrix transform_gram(const IntMatrix& g, const IntMatrix& u);

struct OracleCase {
  IntMatrix gram;
  std::size_t fast_count = 0;
  std::size_t box_count = 0;
  bool match = false;
  double fast_ms = 0;
  double box_ms = 0;
};

struct OracleReport {
  std::vector<OracleCase> cases;
  std::size_t mismatches() const;
};

// Ranks drawn uniformly from [1, max_rank].
OracleReport oracle_check(std::uint64_t seed, std::size_t max_rank, std::size_t cases, std::int64_t max_entry = 8);

}  // namespace latscreen
