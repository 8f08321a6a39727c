#include "latscreen/properties.hpp"

#include <set>
#include <sstream>

namespace latscreen {

namespace mp = boost::multiprecision;

void PropertyReport::merge(const PropertyReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string show(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::set<Vec> as_set(const ScreenerSet& S) { return {S.screeners.begin(), S.screeners.end()}; }

bool contains(const std::set<Vec>& s, const Vec& x) { return !is_zero(x) && s.count(canonical(x)) > 0; }

}  // namespace

PropertyReport check_angle_trichotomy(const ScreenerSet& S) {
  PropertyReport r;
  const Lattice& L = S.lattice;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      ++r.checks;
      const std::int64_t big = std::max(S.norms[i], S.norms[j]);
      const std::int64_t ip = inner(L, S.screeners[i], S.screeners[j]);
      if (ip != 0 && ip != big / 2 && ip != -big / 2) {
        r.failures.push_back("angle: <" + show(S.screeners[i]) + "," + show(S.screeners[j]) +
                             "> = " + std::to_string(ip));
      }
    }
  }
  return r;
}

PropertyReport check_no_multiples(const ScreenerSet& S) {
  PropertyReport r;
  const auto set = as_set(S);
  const std::int64_t top = S.norms.empty() ? 0 : S.norms.back();
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::int64_t n = 2; n * n * S.norms[i] <= top; ++n) {
      ++r.checks;
      if (contains(set, scaled(S.screeners[i], n))) {
        r.failures.push_back("multiple: " + std::to_string(n) + "*" + show(S.screeners[i]));
      }
    }
  }
  return r;
}

PropertyReport check_sum_closure(const ScreenerSet& S) {
  PropertyReport r;
  const Lattice& L = S.lattice;
  const auto set = as_set(S);
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (S.norms[i] > S.norms[j]) continue;
      for (int sign : {1, -1}) {
        const Vec b = sign > 0 ? S.screeners[j] : negated(S.screeners[j]);
        if (2 * inner(L, S.screeners[i], b) != -S.norms[j]) continue;
        ++r.checks;
        const Vec sum = add(S.screeners[i], b);
        if (!contains(set, sum)) r.failures.push_back("sum closure: " + show(sum) + " missing");
      }
    }
  }
  return r;
}

PropertyReport check_orthogonal_sums(const ScreenerSet& S) {
  PropertyReport r;
  const Lattice& L = S.lattice;
  const auto set = as_set(S);
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const Vec& a = S.screeners[i];
      const Vec& b = S.screeners[j];
      if (inner(L, a, b) != 0) continue;
      for (int sign : {1, -1}) {
        ++r.checks;
        const Vec x = sign > 0 ? add(a, b) : sub(a, b);
        bool predicted = S.norms[i] == S.norms[j] && !in_nL(x, 2);
        if (predicted)
          for (std::int64_t e : gram_times(L, x))
            if (e % S.norms[i] != 0) predicted = false;
        if (predicted != contains(set, x)) {
          r.failures.push_back("orthogonal sum: " + show(x) + (predicted ? " missing" : " unexpected"));
        }
      }
    }
  }
  return r;
}

PropertyReport check_norm_divisibility(const ScreenerSet& S) {
  PropertyReport r;
  Integer l = 1;
  for (std::int64_t n : S.norms) {
    ++r.checks;
    if (n % 2 != 0) {
      r.failures.push_back("odd screener norm " + std::to_string(n));
      continue;
    }
    l = mp::lcm(l, Integer(n / 2));
  }
  ++r.checks;
  if (S.lattice.det() % l != 0) r.failures.push_back("lcm of half-norms " + l.str() + " does not divide Det");
  return r;
}

PropertyReport check_l_phi(const ScreenerSet& S) {
  PropertyReport r;
  const Lattice& L = S.lattice;
  const std::size_t d = L.rank();
  const LPhi lp = l_phi(L, S);
  for (std::size_t j = 0; j < d; ++j) {
    ++r.checks;
    Vec e(d, 0);
    e[j] = 2;
    if (!in_span(lp.basis, e)) r.failures.push_back("2L not inside L_Phi: " + show(e));
  }
  ++r.checks;
  if (lp.index * lp.index * L.det() != lp.gram.det()) r.failures.push_back("index^2 Det(L) != Det(L_Phi)");
  if (lp.index > 1) {
    ++r.checks;
    const Integer bound = mp::pow(Integer(4), static_cast<unsigned>(d)) * L.det();
    if (bound % lp.gram.det() != 0) r.failures.push_back("Det(L_Phi) does not divide 4^d Det(L)");
  }
  return r;
}

PropertyReport check_dual_condition_suffices(const ScreenerSet& S, std::int64_t bound) {
  PropertyReport r;
  const Lattice& L = S.lattice;
  const auto set = as_set(S);
  auto candidates = enumerate_up_to_norm(L, bound, [&](const Vec& x, std::int64_t n) {
    if (n % 2 != 0) return false;
    for (std::int64_t e : gram_times(L, x))
      if ((2 * e) % n != 0) return false;
    return true;
  });
  for (const auto& x : candidates.vectors) {
    ++r.checks;
    if (!set.count(x)) r.failures.push_back("dual condition without screener: " + show(x));
  }
  return r;
}

PropertyReport check_all_properties(const ScreenerSet& S) {
  PropertyReport r;
  r.merge(check_angle_trichotomy(S));
  r.merge(check_no_multiples(S));
  r.merge(check_sum_closure(S));
  r.merge(check_orthogonal_sums(S));
  r.merge(check_norm_divisibility(S));
  r.merge(check_l_phi(S));
  return r;
}

}  // namespace latscreen
