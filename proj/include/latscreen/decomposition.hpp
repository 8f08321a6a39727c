#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latscreen/lattice.hpp"
#include "latscreen/screeners.hpp"

namespace latscreen {

enum class RootFamily { A, B, C, D, E, F, G };

char family_letter(RootFamily f);
// "A_3", "F_4", ...
std::string type_name(RootFamily f, std::size_t rank);

// sqrt(scale) * K for a simply laced root lattice K; basis vectors have norm 2 * scale.
struct Component {
  RootFamily family = RootFamily::A;
  std::size_t rank = 0;
  std::int64_t scale = 0;
  std::vector<Vec> basis;  // simple roots, coordinates in L
  std::int64_t root_count = 0;

  std::string name() const { return type_name(family, rank); }
};

// Gram matrix scale * K for K in {A_n (n >= 1), D_n (n >= 2), E_6, E_7, E_8}.
// D_n places alpha_1 and alpha_2 orthogonal, both attached to alpha_3, then a
// chain alpha_3 - ... - alpha_n. D_2 is taken to be A_2. E_6 and E_7 branch
// from the third and fourth chain nodes, E_8 from the fifth.
Lattice catalog(RootFamily family, std::size_t n, std::int64_t scale = 1);

// Lowest-norm-first reduction of a screener basis until vectors of different
// norms are orthogonal. Throws kNotABasis, kNotScreener, kNotEven or
// kInnerProductViolation.
std::vector<Vec> reduce_screener_basis(const Lattice& L, const std::vector<Vec>& basis);

// Splits each norm block of a reduced basis into indecomposable root lattices
// and names them by (rank, root count). Sorted by scale, rank, family.
std::vector<Component> recognize_components(const Lattice& L, const std::vector<Vec>& reduced);

// Simple system of `roots` (closed under negation) with respect to a generic
// linear functional: positive elements that are not a sum of two positive ones.
std::vector<Vec> simple_system(const std::vector<Vec>& roots);

struct ExtendedGroup {
  RootFamily family = RootFamily::A;
  std::size_t rank = 0;
  std::int64_t scale = 0;
  std::int64_t expected = 0;  // root count of the named system
  std::int64_t actual = 0;    // screeners supported on exactly this group
  std::vector<std::size_t> components;

  std::string name() const { return type_name(family, rank); }
};

struct ExtendedIdentification {
  ScreenerSet screeners;
  std::vector<Vec> screener_basis;
  std::vector<Vec> reduced_basis;
  std::vector<Component> components;
  std::vector<ExtendedGroup> groups;
  std::int64_t cross_screeners = 0;  // supported on more than one group

  bool consistent() const;
};

// Full pipeline for an even lattice generated by its screeners. Mismatches
// between predicted and computed screener counts are reported, not corrected.
ExtendedIdentification identify_extended_type(const Lattice& L);

enum class Rank2Kind { kType1, kType2 };
enum class Rank2Subtype { kNone, k2a, k2b, k2c };

std::string to_string(Rank2Kind k);
std::string to_string(Rank2Subtype s);

// Type1: Gram diag(2p, m), m != 2p. Type2: [[2p, -p], [-p, m]], m >= p.
// Columns of basis_change are the normal-form basis in L coordinates.
struct Rank2Form {
  Rank2Kind kind = Rank2Kind::kType1;
  std::int64_t p = 0;
  std::int64_t m = 0;
  Rank2Subtype subtype = Rank2Subtype::kNone;
  IntMatrix basis_change;

  IntMatrix gram() const;
  // Subtype 2b with odd p: the predicted list contains odd-norm vectors.
  bool odd_p_2b() const { return subtype == Rank2Subtype::k2b && p % 2 != 0; }
};

// nullopt when the lattice has no screeners. Throws kDimensionMismatch for rank != 2.
std::optional<Rank2Form> rank2_normal_form(const Lattice& L);

// Predicted screeners, canonical, in normal-form coordinates.
std::vector<Vec> rank2_screener_list(const Rank2Form& f);

// The predicted list mapped to L coordinates, canonical and sorted.
std::vector<Vec> rank2_predicted_in_lattice(const Rank2Form& f);

}  // namespace latscreen
