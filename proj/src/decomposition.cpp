#include "latscreen/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace latscreen {

namespace mp = boost::multiprecision;

char family_letter(RootFamily f) {
  switch (f) {
    case RootFamily::A: return 'A';
    case RootFamily::B: return 'B';
    case RootFamily::C: return 'C';
    case RootFamily::D: return 'D';
    case RootFamily::E: return 'E';
    case RootFamily::F: return 'F';
    case RootFamily::G: return 'G';
  }
  return '?';
}

std::string type_name(RootFamily f, std::size_t rank) {
  return std::string(1, family_letter(f)) + "_" + std::to_string(rank);
}

Lattice catalog(RootFamily family, std::size_t n, std::int64_t scale) {
  if (scale < 1) throw LatticeError(ErrorCode::kInvalidArgument, "scale must be positive");
  IntMatrix g(n, n);
  auto link = [&](std::size_t i, std::size_t j) {
    g(i - 1, j - 1) = -1;
    g(j - 1, i - 1) = -1;
  };
  switch (family) {
    case RootFamily::A:
      if (n < 1) throw LatticeError(ErrorCode::kInvalidArgument, "A_n needs n >= 1");
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case RootFamily::D:
      if (n < 2) throw LatticeError(ErrorCode::kInvalidArgument, "D_n needs n >= 2");
      if (n == 2) {
        link(1, 2);
        break;
      }
      link(1, 3);
      link(2, 3);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case RootFamily::E:
      if (n < 6 || n > 8) throw LatticeError(ErrorCode::kInvalidArgument, "E_n needs n in {6, 7, 8}");
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n == 6 ? 3 : n == 7 ? 4 : 5, n);
      break;
    default:
      throw LatticeError(ErrorCode::kInvalidArgument, "catalog covers only A, D and E");
  }
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = checked_mul(g(i, j), scale);
  return Lattice(std::move(g));
}

namespace {

void require_basis(const Lattice& L, const std::vector<Vec>& basis) {
  if (basis.size() != L.rank()) throw LatticeError(ErrorCode::kNotABasis, "wrong number of basis vectors");
  const Integer det = determinant(from_columns(basis, L.rank()));
  if (det != 1 && det != -1) throw LatticeError(ErrorCode::kNotABasis, "vectors do not form a Z-basis");
}

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<Vec> reduce_screener_basis(const Lattice& L, const std::vector<Vec>& basis) {
  if (!L.even()) throw LatticeError(ErrorCode::kNotEven, "screener basis reduction needs an even lattice");
  for (const auto& v : basis)
    if (v.size() != L.rank()) throw LatticeError(ErrorCode::kDimensionMismatch, "vector length mismatch");
  require_basis(L, basis);
  for (const auto& v : basis)
    if (!is_screener(L, v)) throw LatticeError(ErrorCode::kNotScreener, "basis vector is not a screener");

  std::vector<std::pair<std::int64_t, Vec>> u;
  for (const auto& v : basis) u.emplace_back(norm(L, v), v);
  while (true) {
    std::stable_sort(u.begin(), u.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    bool changed = false;
    for (std::size_t l = 0; l < u.size() && !changed; ++l) {
      for (std::size_t i = 0; i < l && !changed; ++i) {
        if (u[i].first >= u[l].first) continue;
        const std::int64_t ip = inner(L, u[i].second, u[l].second);
        if (ip == 0) continue;
        if (2 * ip != u[l].first && 2 * ip != -u[l].first) {
          throw LatticeError(ErrorCode::kInnerProductViolation,
                             "screeners of norms " + std::to_string(u[i].first) + " < " +
                                 std::to_string(u[l].first) + " have inner product " + std::to_string(ip));
        }
        Vec next = sub(u[l].second, scaled(u[i].second, sign(ip)));
        if (!is_screener(L, next)) throw LatticeError(ErrorCode::kNotScreener, "reduced vector is not a screener");
        u[l] = {norm(L, next), std::move(next)};
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<Vec> out;
  for (auto& [n, v] : u) out.push_back(std::move(v));
  return out;
}

std::vector<Vec> simple_system(const std::vector<Vec>& roots) {
  if (roots.empty()) return {};
  std::int64_t maxc = 0;
  for (const auto& r : roots)
    for (std::int64_t c : r) maxc = std::max(maxc, c < 0 ? -c : c);
  // f(v) = sum v_i M^i with M > 2 max|v_i| separates every difference of roots
  // from zero, so positivity is a total order compatible with addition.
  const std::int64_t base = 2 * maxc + 1;
  auto f = [&](const Vec& v) {
    i128 acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) acc = add128(mul128(acc, base), v[i]);
    return acc;
  };
  std::vector<Vec> pos;
  for (const auto& r : roots)
    if (f(r) > 0) pos.push_back(r);
  std::set<Vec> pos_set(pos.begin(), pos.end());
  std::vector<Vec> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos) {
      if (s == r) continue;
      Vec diff = sub(r, s);
      if (pos_set.count(diff) != 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(), [&](const Vec& a, const Vec& b) { return f(a) < f(b); });
  return simple;
}

namespace {

struct TypeMatch {
  RootFamily family;
  bool ok;
};

TypeMatch name_by_count(std::size_t n, std::int64_t count) {
  const auto nn = static_cast<std::int64_t>(n);
  if (count == nn * (nn + 1)) return {RootFamily::A, true};
  if (n >= 4 && count == 2 * nn * (nn - 1)) return {RootFamily::D, true};
  if ((n == 6 && count == 72) || (n == 7 && count == 126) || (n == 8 && count == 240)) return {RootFamily::E, true};
  return {RootFamily::A, false};
}

// Connected components of `vs` under the nonzero-inner-product relation.
std::vector<std::vector<std::size_t>> connected(const Lattice& K, const std::vector<Vec>& vs) {
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (inner(K, vs[i], vs[j]) != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < vs.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Component> recognize_components(const Lattice& L, const std::vector<Vec>& reduced) {
  std::map<std::int64_t, std::vector<Vec>> blocks;
  for (const auto& v : reduced) {
    const std::int64_t n = norm(L, v);
    if (n % 2 != 0) throw LatticeError(ErrorCode::kNotEven, "basis vector of odd norm");
    blocks[n].push_back(v);
  }
  std::vector<Component> out;
  for (const auto& [n, block] : blocks) {
    const Lattice K = sublattice_gram(L, block);
    const auto roots = enumerate_exact_norm(K, n);
    for (const auto& members : connected(K, roots.vectors)) {
      std::vector<Vec> comp;
      for (std::size_t idx : members) {
        comp.push_back(roots.vectors[idx]);
        comp.push_back(negated(roots.vectors[idx]));
      }
      const std::size_t r = rank(from_columns(comp, K.rank()));
      const auto count = static_cast<std::int64_t>(comp.size());
      const TypeMatch t = name_by_count(r, count);
      if (!t.ok) {
        throw LatticeError(ErrorCode::kUnrecognizedComponent,
                           "component of rank " + std::to_string(r) + " with " + std::to_string(count) +
                               " vectors of norm " + std::to_string(n) + " is not a simply laced root system");
      }
      Component c;
      c.family = t.family;
      c.rank = r;
      c.scale = n / 2;
      c.root_count = count;
      for (const auto& s : simple_system(comp)) {
        Vec x(L.rank(), 0);
        for (std::size_t i = 0; i < block.size(); ++i) x = add(x, scaled(block[i], s[i]));
        c.basis.push_back(std::move(x));
      }
      out.push_back(std::move(c));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.scale != b.scale) return a.scale < b.scale;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.family < b.family;
  });
  return out;
}

bool ExtendedIdentification::consistent() const {
  if (cross_screeners != 0) return false;
  for (const auto& g : groups)
    if (g.expected != g.actual) return false;
  return true;
}

namespace {

std::int64_t expected_count(RootFamily f, std::size_t rank) {
  const auto n = static_cast<std::int64_t>(rank);
  switch (f) {
    case RootFamily::A: return n * (n + 1);
    case RootFamily::B:
    case RootFamily::C: return 2 * n * n;
    case RootFamily::D: return 2 * n * (n - 1);
    case RootFamily::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case RootFamily::F: return 48;
    case RootFamily::G: return 12;
  }
  return 0;
}

}  // namespace

ExtendedIdentification identify_extended_type(const Lattice& L) {
  if (!L.even()) throw LatticeError(ErrorCode::kNotEven, "extended identification needs an even lattice");
  const std::size_t d = L.rank();
  ExtendedIdentification out{all_screeners(L), {}, {}, {}, {}, 0};
  const ScreenerSet& S = out.screeners;
  if (S.empty()) throw LatticeError(ErrorCode::kNotGeneratedByScreeners, "lattice has no screeners");
  const SublatticeBasis zp = z_phi(S);
  if (zp.basis.size() != d || mp::abs(determinant(from_columns(zp.basis, d))) != 1) {
    throw LatticeError(ErrorCode::kNotGeneratedByScreeners, "screeners do not generate the lattice");
  }
  out.screener_basis = simple_system(S.with_negatives());
  if (out.screener_basis.size() != d || mp::abs(determinant(from_columns(out.screener_basis, d))) != 1) {
    throw LatticeError(ErrorCode::kNoScreenerBasis, "simple screeners do not form a Z-basis");
  }
  out.reduced_basis = reduce_screener_basis(L, out.screener_basis);
  out.components = recognize_components(L, out.reduced_basis);

  // Merge same-scale A_1's; rename the rest per their full screener system.
  std::vector<std::size_t> group_of(out.components.size());
  std::map<std::int64_t, std::size_t> a1_group;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const Component& c = out.components[i];
    if (c.family == RootFamily::A && c.rank == 1) {
      auto it = a1_group.find(c.scale);
      if (it == a1_group.end()) {
        it = a1_group.emplace(c.scale, out.groups.size()).first;
        out.groups.push_back(ExtendedGroup{RootFamily::A, 0, c.scale, 0, 0, {}});
      }
      ExtendedGroup& g = out.groups[it->second];
      g.rank += 1;
      g.components.push_back(i);
      group_of[i] = it->second;
      continue;
    }
    ExtendedGroup g{c.family, c.rank, c.scale, 0, 0, {i}};
    if (c.family == RootFamily::A && c.rank == 2) {
      g.family = RootFamily::G;
    } else if (c.family == RootFamily::A && c.rank == 3) {
      g.family = RootFamily::C;
    } else if (c.family == RootFamily::D && c.rank == 4) {
      g.family = RootFamily::F;
    } else if (c.family == RootFamily::D) {
      g.family = RootFamily::C;
    }
    group_of[i] = out.groups.size();
    out.groups.push_back(std::move(g));
  }
  for (auto& g : out.groups) {
    if (g.family == RootFamily::A && g.rank >= 2 && g.components.size() == g.rank) g.family = RootFamily::B;
    g.expected = expected_count(g.family, g.rank);
  }

  for (const auto& x : S.screeners) {
    std::set<std::size_t> touched;
    for (std::size_t i = 0; i < out.components.size(); ++i)
      for (const auto& b : out.components[i].basis)
        if (inner(L, x, b) != 0) {
          touched.insert(group_of[i]);
          break;
        }
    if (touched.size() == 1) {
      out.groups[*touched.begin()].actual += 2;
    } else {
      out.cross_screeners += 2;
    }
  }
  std::stable_sort(out.groups.begin(), out.groups.end(), [](const ExtendedGroup& a, const ExtendedGroup& b) {
    if (a.scale != b.scale) return a.scale < b.scale;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.family < b.family;
  });
  return out;
}

std::string to_string(Rank2Kind k) { return k == Rank2Kind::kType1 ? "Type1" : "Type2"; }

std::string to_string(Rank2Subtype s) {
  switch (s) {
    case Rank2Subtype::kNone: return "none";
    case Rank2Subtype::k2a: return "2a";
    case Rank2Subtype::k2b: return "2b";
    case Rank2Subtype::k2c: return "2c";
  }
  return "none";
}

IntMatrix Rank2Form::gram() const {
  if (kind == Rank2Kind::kType1) return IntMatrix{{2 * p, 0}, {0, m}};
  return IntMatrix{{2 * p, -p}, {-p, m}};
}

namespace {

// Columns (c0, c1) <- (c0, c1) [[a, b], [c, d]].
void recombine(IntMatrix& u, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  for (std::size_t r = 0; r < 2; ++r) {
    const std::int64_t x = u(r, 0);
    const std::int64_t y = u(r, 1);
    u(r, 0) = checked_add(checked_mul(x, a), checked_mul(y, c));
    u(r, 1) = checked_add(checked_mul(x, b), checked_mul(y, d));
  }
}

}  // namespace

std::optional<Rank2Form> rank2_normal_form(const Lattice& L) {
  if (L.rank() != 2) throw LatticeError(ErrorCode::kDimensionMismatch, "rank-2 normal form needs a rank-2 lattice");
  const ScreenerSet S = all_screeners(L);
  if (S.empty()) return std::nullopt;
  const Vec& a1 = S.screeners.front();
  IntMatrix u = extend_to_basis(L, a1);
  const std::int64_t p = S.norms.front() / 2;
  auto gram_now = [&]() { return gram_of(L, {u.col(0), u.col(1)}); };
  IntMatrix g = gram_now();
  if (g(0, 1) % p != 0) throw LatticeError(ErrorCode::kInnerProductViolation, "<a_1, L> is not contained in pZ");
  const std::int64_t n = -g(0, 1) / p;

  Rank2Form f;
  if (n % 2 == 0) {
    recombine(u, 1, n / 2, 0, 1);  // a2 += (n/2) a1
    g = gram_now();
    f.kind = Rank2Kind::kType1;
    f.p = p;
    f.m = g(1, 1);
    if (f.m == 2 * p) {
      // diag(2p, 2p) is Type2 with p' = 2p, m = 2p in the basis (a1 - a2, a2).
      recombine(u, 1, 0, -1, 1);
      f.kind = Rank2Kind::kType2;
      f.p = 2 * p;
      f.m = 2 * p;
    }
  } else {
    recombine(u, 1, (n - 1) / 2, 0, 1);
    g = gram_now();
    std::int64_t pp = p;
    std::int64_t m = g(1, 1);
    while (m < pp) {
      recombine(u, 1, -1, 2, -1);  // (a1 + 2 a2, -a1 - a2)
      pp = 2 * m - pp;
    }
    f.kind = Rank2Kind::kType2;
    f.p = pp;
    f.m = m;
  }
  if (f.kind == Rank2Kind::kType2) {
    f.subtype = f.m == f.p ? Rank2Subtype::k2b : f.m == 2 * f.p ? Rank2Subtype::k2c : Rank2Subtype::k2a;
  }
  f.basis_change = u;
  if (gram_now() != f.gram()) throw LatticeError(ErrorCode::kInvalidArgument, "rank-2 reduction lost the normal form");
  return f;
}

std::vector<Vec> rank2_screener_list(const Rank2Form& f) {
  std::vector<Vec> out{{1, 0}};
  if (f.kind == Rank2Kind::kType1) {
    if (f.m % 2 == 0) out.push_back({0, 1});
  } else {
    out.push_back({1, 2});
    if (f.subtype == Rank2Subtype::k2b || f.subtype == Rank2Subtype::k2c) {
      out.push_back({0, 1});
      out.push_back({1, 1});
    }
    if (f.subtype == Rank2Subtype::k2c) {
      out.push_back({1, -1});
      out.push_back({2, 1});
    }
  }
  return out;
}

std::vector<Vec> rank2_predicted_in_lattice(const Rank2Form& f) {
  // Same order as all_screeners: by norm, then coordinates.
  const Lattice form(f.gram());
  std::vector<std::pair<std::int64_t, Vec>> keyed;
  for (const auto& v : rank2_screener_list(f)) {
    Vec x(2, 0);
    for (std::size_t r = 0; r < 2; ++r)
      x[r] = checked_add(checked_mul(f.basis_change(r, 0), v[0]), checked_mul(f.basis_change(r, 1), v[1]));
    keyed.emplace_back(norm(form, v), canonical(x));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vec> out;
  for (auto& [n, x] : keyed) out.push_back(std::move(x));
  return out;
}

}  // namespace latscreen
