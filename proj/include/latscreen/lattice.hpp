#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "latscreen/arith.hpp"
#include "latscreen/matrix.hpp"

namespace latscreen {

// Integer coordinates with respect to the lattice's implicit basis.
using Vec = std::vector<std::int64_t>;
// Rational coordinates in the same basis; used for dual and extended-dual vectors.
using RatVec = std::vector<Rational>;

// Positive definite integral lattice given by its Gram matrix. Construction
// validates symmetry and positive definiteness once; everything else assumes it.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const Integer& det() const { return det_; }
  bool even() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  Integer det_;
};

// 1-based index of the first leading principal minor that is <= 0, if any.
std::optional<std::size_t> first_nonpositive_minor(const IntMatrix& g);

// Throws kNotSymmetric for asymmetric input.
bool is_positive_definite(const IntMatrix& g);

std::int64_t inner(const Lattice& L, const Vec& x, const Vec& y);
std::int64_t norm(const Lattice& L, const Vec& x);
Rational inner(const Lattice& L, const Vec& x, const RatVec& v);
Rational inner(const Lattice& L, const RatVec& u, const RatVec& v);

// G x, exact.
Vec gram_times(const Lattice& L, const Vec& x);
RatVec gram_times(const Lattice& L, const RatVec& v);

int parity(const Lattice& L, const Vec& x);

Integer determinant(const Lattice& L);

// x/k in the dual lattice, i.e. k divides every entry of Gx.
bool in_dual(const Lattice& L, const Vec& x, std::int64_t k);

// (Gv)_j integral when the j-th basis vector has even norm, half-integral when odd.
bool in_extended_dual(const Lattice& L, const RatVec& v);

// Every coordinate of x divisible by n.
bool in_nL(const Vec& x, std::int64_t n);

// Unimodular matrix whose first column is the primitive vector x.
IntMatrix extend_to_basis(const Vec& x);
IntMatrix extend_to_basis(const Lattice& L, const Vec& x);

// L = Za (+) L' orthogonally. `basis` has columns a, b_2', ..., b_d' in the
// coordinates of L and is unimodular. `complement` has rank d - 1 (possibly 0).
struct OrthogonalSplit {
  Lattice line;
  Lattice complement;
  IntMatrix basis;
};
OrthogonalSplit orthogonal_split(const Lattice& L, const Vec& a);

struct QuotientInvariants {
  std::vector<Integer> divisors;
  Integer order;
};
QuotientInvariants quotient_invariants(const Lattice& L);

// Largest elementary divisor of G: the exponent of the discriminant group.
Integer discriminant_exponent(const Lattice& L);

// Gram matrix of the given linearly independent vectors.
Lattice sublattice_gram(const Lattice& L, const std::vector<Vec>& vs);

// Gram matrix of arbitrary vectors, no independence check.
IntMatrix gram_of(const Lattice& L, const std::vector<Vec>& vs);

// Exact G^{-1}.
RatMatrix gram_inverse(const Lattice& L);

// Vector helpers.
Vec scaled(const Vec& x, std::int64_t k);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec negated(const Vec& x);
bool is_zero(const Vec& x);
std::int64_t content(const Vec& x);
// First nonzero coordinate made positive.
Vec canonical(const Vec& x);
bool is_canonical(const Vec& x);
RatVec to_rational(const Vec& x);

}  // namespace latscreen
