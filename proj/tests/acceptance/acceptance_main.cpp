// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latscreen/decomposition.hpp"
#include "latscreen/enumeration.hpp"
#include "latscreen/oracle.hpp"
#include "latscreen/pairs.hpp"
#include "latscreen/properties.hpp"
#include "latscreen/screeners.hpp"

using namespace latscreen;

namespace {

// Time limits, seconds.
constexpr double kRootsOnlyLimit = 5.0;
constexpr double kExceptionalLimit = 30.0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

std::set<Vec> canon_set(const std::vector<Vec>& vs) {
  std::set<Vec> s;
  for (const auto& v : vs) s.insert(canonical(v));
  return s;
}

std::set<Vec> nonroots(const ScreenerSet& S) {
  std::set<Vec> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (S.norms[i] != 2) out.insert(S.screeners[i]);
  return out;
}

std::string type_of(const ExtendedIdentification& id) {
  std::string s;
  for (const auto& g : id.groups) s += (s.empty() ? "" : "+") + g.name();
  return s;
}

Lattice cat(RootFamily f, std::size_t n, std::int64_t s = 1) { return catalog(f, n, s); }

// Every screener set computed by criteria 1-6, for the property sweep. A deque
// keeps earlier references valid.
std::deque<ScreenerSet> g_computed;

const ScreenerSet& remember(ScreenerSet S) {
  g_computed.push_back(std::move(S));
  return g_computed.back();
}

Check roots_only() {
  Check c;
  for (std::size_t n : {4, 5, 6}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Lattice L = cat(RootFamily::A, n);
    const ScreenerSet S = remember(all_screeners(L));
    const auto oracle = box_screeners(L);
    const double t = seconds_since(t0);
    const auto roots = enumerate_exact_norm(L, 2);
    c.require(S.screeners == oracle.vectors, "A_" + std::to_string(n) + " differs from box oracle");
    c.require(canon_set(S.screeners) == canon_set(roots.vectors), "A_" + std::to_string(n) + " not just roots");
    c.require(S.with_negatives().size() == n * (n + 1), "A_" + std::to_string(n) + " count");
    c.require(t < kRootsOnlyLimit, "A_" + std::to_string(n) + " took " + std::to_string(t) + "s");
  }
  if (c.ok) c.detail << "A_4,A_5,A_6 equal their roots and the box oracle, each < 5 s";
  return c;
}

Check small_a() {
  Check c;
  const auto a2 = identify_extended_type(cat(RootFamily::A, 2));
  remember(a2.screeners);
  c.require(a2.screeners.with_negatives().size() == 12, "|Phi(A_2)| != 12");
  c.require(type_of(a2) == "G_2", "A_2 classified as " + type_of(a2));
  const auto a3 = identify_extended_type(cat(RootFamily::A, 3));
  remember(a3.screeners);
  c.require(a3.screeners.with_negatives().size() == 18, "|Phi(A_3)| != 18");
  const std::set<Vec> listed = canon_set({{1, 0, 1}, {1, 0, -1}, {1, 2, 1}});
  c.require(nonroots(a3.screeners) == listed, "A_3 nonroot screeners differ from the listed six");
  c.require(type_of(a3) == "C_3", "A_3 classified as " + type_of(a3));
  if (c.ok) c.detail << "A_2: 12, G_2; A_3: 18, nonroots {+-(a1+a3), +-(a1-a3), +-(a1+2a2+a3)}, C_3";
  return c;
}

// D_4 nonroots in the catalog basis (a3 central): over {i,j,k} = {1,2,4}.
std::set<Vec> d4_listed() {
  std::vector<Vec> out;
  const std::size_t idx[3] = {0, 1, 3};
  auto vec = [](std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
    Vec v(4, 0);
    for (auto [i, c] : terms) v[i] += c;
    return v;
  };
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      if (x == y) continue;
      const std::size_t i = idx[x], j = idx[y], k = idx[3 - x - y];
      out.push_back(vec({{i, 1}, {j, 1}}));
      out.push_back(vec({{i, 1}, {j, -1}}));
      out.push_back(vec({{i, 2}, {j, 1}, {2, 2}, {k, 1}}));
      out.push_back(vec({{i, 1}, {2, 2}, {j, 1}}));
    }
  return canon_set(out);
}

std::set<Vec> dn_listed(std::size_t n) {
  std::vector<Vec> out;
  Vec p(n, 0), m(n, 0);
  p[0] = p[1] = 1;
  m[0] = 1;
  m[1] = -1;
  out.push_back(p);
  out.push_back(m);
  for (std::size_t j = 3; j <= n; ++j) {
    Vec v = p;
    for (std::size_t i = 3; i <= j; ++i) v[i - 1] = 2;
    out.push_back(v);
  }
  return canon_set(out);
}

Check d_series() {
  Check c;
  struct Row {
    std::size_t n;
    std::size_t total;
    std::size_t nonroot;
    std::string type;
  };
  for (const Row& r : {Row{4, 48, 24, "F_4"}, Row{5, 50, 10, "C_5"}, Row{6, 72, 12, "C_6"}}) {
    const auto id = identify_extended_type(cat(RootFamily::D, r.n));
    remember(id.screeners);
    const std::string tag = "D_" + std::to_string(r.n);
    c.require(id.screeners.with_negatives().size() == r.total, tag + " count");
    c.require(2 * nonroots(id.screeners).size() == r.nonroot, tag + " nonroot count");
    c.require(type_of(id) == r.type, tag + " classified as " + type_of(id));
    if (r.n == 4) c.require(nonroots(id.screeners) == d4_listed(), "D_4 nonroot set differs from listed family");
    if (r.n == 5) c.require(nonroots(id.screeners) == dn_listed(5), "D_5 nonroot set differs from listed family");
  }
  if (c.ok) c.detail << "D_4: 48 F_4, D_5: 50 C_5, D_6: 72 C_6; D_4 and D_5 nonroot families exact";
  return c;
}

Check exceptional() {
  Check c;
  const std::pair<std::size_t, std::size_t> rows[] = {{6, 72}, {7, 126}, {8, 240}};
  double slowest = 0;
  for (auto [n, total] : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    const Lattice L = cat(RootFamily::E, n);
    const ScreenerSet S = remember(all_screeners(L));
    const double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    const std::string tag = "E_" + std::to_string(n);
    c.require(S.with_negatives().size() == total, tag + " count " + std::to_string(S.with_negatives().size()));
    for (std::int64_t m : S.norms) c.require(m == 2, tag + " has norm " + std::to_string(m));
    if (n >= 7) c.require(t < kExceptionalLimit, tag + " took " + std::to_string(t) + "s");
  }
  // Direct predicate sweeps over the candidate norms.
  const Lattice e6 = cat(RootFamily::E, 6), e7 = cat(RootFamily::E, 7), e8 = cat(RootFamily::E, 8);
  std::size_t hit6 = 0, hit4 = 0;
  for (const auto& v : enumerate_exact_norm(e6, 6).vectors) hit6 += is_screener(e6, v);
  for (const auto& v : enumerate_exact_norm(e7, 4).vectors) hit4 += is_screener(e7, v);
  c.require(hit6 == 0, "E_6 has norm-6 screeners");
  c.require(hit4 == 0, "E_7 has norm-4 screeners");
  c.require(2 * to_int64(e8.det()) == 2 && screener_norm_bound(e8) == 2, "E_8 bound is not 2");
  if (c.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", slowest);
    c.detail << "E_6/E_7/E_8: 72/126/240 all norm 2; no norm-6 (E_6) or norm-4 (E_7) screeners; slowest " << buf
             << " s";
  }
  return c;
}

Check rescaling() {
  Check c;
  for (std::int64_t p : {2, 3})
    for (auto [f, n] : {std::pair{RootFamily::A, std::size_t{2}}, std::pair{RootFamily::A, std::size_t{3}},
                        std::pair{RootFamily::D, std::size_t{4}}}) {
      const auto& a = remember(all_screeners(cat(f, n)));
      const auto& b = remember(all_screeners(cat(f, n, p)));
      const std::string tag = type_name(f, n) + " p=" + std::to_string(p);
      c.require(a.screeners == b.screeners, tag + " representatives differ");
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        c.require(b.norms[i] == p * a.norms[i], tag + " norm not scaled");
    }
  if (c.ok) c.detail << "A_2, A_3, D_4 at p = 2, 3: identical representatives, norms scaled by p";
  return c;
}

Check rank2() {
  Check c;
  std::mt19937_64 rng(2718);
  int flagged = 0, empty = 0;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    const Lattice L(random_gram(rng, 2, 20));
    const ScreenerSet& S = remember(all_screeners(L));
    const std::string tag = "case " + std::to_string(i);
    c.require(S.screeners == box_screeners(L).vectors, tag + ": all_screeners differs from box oracle");
    const auto f = rank2_normal_form(L);
    if (!f) {
      ++empty;
      c.require(S.empty(), tag + ": no normal form but screeners exist");
      continue;
    }
    c.require(transform_gram(L.gram(), f->basis_change) == f->gram(), tag + ": basis change");
    auto predicted = rank2_predicted_in_lattice(*f);
    if (f->odd_p_2b()) {
      ++flagged;
      std::erase_if(predicted, [&](const Vec& v) { return !is_screener(L, v); });
    }
    c.require(predicted == S.screeners, tag + ": list mismatch");
  }
  if (c.ok)
    c.detail << cases << " random 2x2 (entries <= 20): 0 mismatches, " << flagged << " odd-p 2b flagged, " << empty
             << " without screeners";
  return c;
}

Check properties() {
  Check c;
  std::size_t checks = 0;
  for (const auto& S : g_computed) {
    const auto r = check_all_properties(S);
    checks += r.checks;
    if (!r.ok()) c.require(false, r.failures.front());
  }
  if (c.ok) c.detail << checks << " checks over " << g_computed.size() << " screener sets, 0 failures";
  return c;
}

Check round_trip() {
  Check c;
  std::mt19937_64 rng(8080);
  const std::vector<std::pair<RootFamily, std::size_t>> kinds = {{RootFamily::A, 1}, {RootFamily::A, 2},
                                                                 {RootFamily::A, 3}, {RootFamily::A, 4},
                                                                 {RootFamily::D, 4}};
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1), count(1, 3);
  std::uniform_int_distribution<std::int64_t> scale(1, 3);
  const int cases = 60;
  int recovered = 0;
  for (int t = 0; t < cases; ++t) {
    std::vector<std::tuple<RootFamily, std::size_t, std::int64_t>> parts(count(rng));
    for (auto& p : parts) {
      const auto [f, n] = kinds[pick(rng)];
      p = {f, n, scale(rng)};
    }
    std::size_t d = 0;
    for (const auto& [f, n, s] : parts) d += n;
    IntMatrix g(d, d);
    std::size_t off = 0;
    std::map<std::int64_t, int> a1;
    std::multiset<std::string> expected;
    for (const auto& [f, n, s] : parts) {
      const Lattice K = cat(f, n, s);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(off + i, off + j) = K.gram(i, j);
      off += n;
      if (f == RootFamily::A && n == 1)
        ++a1[s];
      else
        expected.insert((f == RootFamily::D ? "F_4" : n == 2 ? "G_2" : n == 3 ? "C_3" : "A_4") + ("@" + std::to_string(s)));
    }
    for (auto [s, m] : a1) expected.insert((m == 1 ? std::string("A_1") : "B_" + std::to_string(m)) + "@" + std::to_string(s));
    const Lattice L(transform_gram(g, random_unimodular(rng, d)));
    const auto id = identify_extended_type(L);
    std::multiset<std::string> got;
    for (const auto& grp : id.groups) got.insert(grp.name() + "@" + std::to_string(grp.scale));
    if (got == expected && id.consistent())
      ++recovered;
    else
      c.require(false, "case " + std::to_string(t) + " misidentified");
  }
  if (c.ok) c.detail << recovered << "/" << cases << " scrambled sums recovered";
  return c;
}

Check pair_numerics() {
  Check c;
  c.require(make_type_i(cat(RootFamily::A, 1, 2), {1}, 2, 1).central_charge == -2, "c_{2,1} != -2");
  c.require(make_type_i(Lattice(IntMatrix{{12}}), {1}, 3, 2).central_charge == 0, "c_{3,2} != 0");
  for (std::int64_t p = 1; p <= 12; ++p)
    for (std::int64_t q = 1; q <= 12; ++q) {
      const auto s = make_type_i(Lattice(IntMatrix{{2 * p * q}}), {1}, p, q);
      c.require(s.central_charge == 1 - Rational(6 * (p - q) * (p - q), p * q),
                "grid entry " + std::to_string(p) + "," + std::to_string(q));
    }
  for (std::int64_t p = 1; p <= 12; ++p)
    for (std::int64_t q = 1; q <= 12; ++q) {
      c.require(solve_weight_quadratic(p, q, 0, 0) == std::vector<std::int64_t>{2 * p}, "m = 2p case");
      if (p > q) c.require(solve_weight_quadratic(p, q, 0, 1) == std::vector<std::int64_t>{2 * (p - q)}, "m = 2(p-p') case");
    }
  c.require(solve_weight_quadratic(2, 1, 1, 0) == std::vector<std::int64_t>{2}, "(2,1,1,0) -> 2");
  const auto iv = type_iv_search(6, 1, 10);
  c.require(iv.size() == 1 && iv[0].branch == 'A' && iv[0].r2 == 2 && iv[0].m == std::vector<std::int64_t>{4, 6},
            "type_iv_search(6,1,10)");
  if (c.ok) c.detail << "c_{2,1} = -2, c_{3,2} = 0, 144-entry grid exact; quadratic cases; type IV (6,1): A, r2=2, m={4,6}";
  return c;
}

Check oracle() {
  Check c;
  const auto r = oracle_check(7, 4, 200, 8);
  c.require(r.cases.size() >= 200, "fewer than 200 cases");
  c.require(r.mismatches() == 0, std::to_string(r.mismatches()) + " mismatches");
  if (c.ok) c.detail << r.cases.size() << " lattices (rank <= 4, entries <= 8, seed 7): 0 discrepancies";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Check()>>> criteria = {
      {1, roots_only}, {2, small_a},    {3, d_series},      {4, exceptional}, {5, rescaling},
      {6, rank2},      {7, properties}, {8, round_trip},    {9, pair_numerics}, {10, oracle},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    std::printf("%s criterion %d: %s\n", c.ok ? "PASS" : "FAIL", n, c.detail.str().c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
