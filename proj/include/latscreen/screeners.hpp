#pragma once

#include <cstdint>
#include <vector>

#include "latscreen/enumeration.hpp"
#include "latscreen/lattice.hpp"

namespace latscreen {

// x is a screener iff its norm N is even, x is not in 2L, and N divides every
// entry of 2Gx (so 2x/N lies in the dual lattice).
bool is_screener(const Lattice& L, const Vec& x);

// Canonical representatives (one per +-pair) of the full screener set, in
// enumeration order: by norm, then coordinates.
struct ScreenerSet {
  Lattice lattice;
  std::vector<Vec> screeners;
  std::vector<std::int64_t> norms;

  std::size_t size() const { return screeners.size(); }
  bool empty() const { return screeners.empty(); }
  // Both signs; size() * 2 vectors.
  std::vector<Vec> with_negatives() const;
};

// Norm bound used for the screener search. A screener's norm N satisfies
// (N/2) | exponent(L°/L), so 2 * exponent suffices and never exceeds 2 * Det.
std::int64_t screener_norm_bound(const Lattice& L);

ScreenerSet all_screeners(const Lattice& L);

struct ScreeningSystem {
  std::vector<Vec> vectors;
  Lattice span_gram;
};

// Greedy maximal independent subset in ScreenerSet order.
ScreeningSystem screening_system(const ScreenerSet& S);

struct SublatticeBasis {
  std::vector<Vec> basis;  // coordinates in L
  Lattice gram;
};

// Z-span of all screeners, basis from the row Hermite form.
SublatticeBasis z_phi(const ScreenerSet& S);

// L_Phi = Z Phi (+) L_2 where L = L_1 (+) L_2 and L_1 is the saturation of
// Z Phi. The basis lists the Z Phi part first.
struct LPhi {
  std::vector<Vec> basis;
  Lattice gram;
  Integer index;            // [L : L_Phi]
  std::size_t zphi_rank = 0;
};
LPhi l_phi(const Lattice& L, const ScreenerSet& S);

// Integer vector b with a . b = 1 from iterated extended gcd in index order.
// Throws kNotPrimitive when the coordinates of a share a factor.
Vec unit_pairing_coefficients(const Vec& a);

// gamma in L° with <gamma, a> = target, built as target * G^{-1} b.
// target = 0 always yields gamma = 0.
RatVec dual_with_pairing(const Lattice& L, const Vec& a, std::int64_t target);

struct GammaResult {
  RatVec gamma;
  Rational weight_minus_a_over_p;  // conformal weight of -a/p at r = 0
};

// gamma with <gamma, a> = p - q for a screener a of norm 2pq.
GammaResult gamma_for_screener(const Lattice& L, const Vec& a, std::int64_t p, std::int64_t q);

// r + <v,v>/2 - <gamma,v>.
Rational conformal_weight(const Lattice& L, const RatVec& v, const RatVec& gamma, std::int64_t r = 0);

// d - 12 <g,g>.
Rational central_charge(std::size_t d, const RatVec& g, const Lattice& L);

// Membership of an integer vector in the Z-span of linearly independent basis vectors.
bool in_span(const std::vector<Vec>& basis, const Vec& x);

}  // namespace latscreen
