#include "latscreen/matrix.hpp"

#include <algorithm>
#include <utility>

namespace latscreen {

namespace mp = boost::multiprecision;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RatMatrix to_rational(const BigMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t dim) {
  IntMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw LatticeError(ErrorCode::kDimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t dim) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw LatticeError(ErrorCode::kDimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Integer determinant(BigMatrix m) {
  if (!m.square()) throw LatticeError(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer determinant(const IntMatrix& m) { return determinant(to_big(m)); }

std::vector<Integer> leading_minors(const IntMatrix& m) {
  if (!m.square()) throw LatticeError(ErrorCode::kDimensionMismatch, "leading minors of non-square matrix");
  std::vector<Integer> out;
  const BigMatrix big = to_big(m);
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    BigMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = big(i, j);
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

std::size_t rank(const IntMatrix& input) {
  BigMatrix m = to_big(input);
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& input) {
  if (!input.square()) throw LatticeError(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw LatticeError(ErrorCode::kLinearlyDependent, "matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (det != 1 && det != -1) throw LatticeError(ErrorCode::kNotABasis, "matrix is not unimodular");
  const RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int64(mp::numerator(inv(i, j)));
  return out;
}

namespace {

// Row operation on (rows a, b) of both matrices: [a; b] <- [[s, t], [u, v]] [a; b].
void combine_rows(BigMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(a, j);
    Integer y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

Integer floor_div_big(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite_rows(const BigMatrix& input) {
  HermiteForm out{input, BigMatrix::identity(input.rows()), 0};
  BigMatrix& h = out.form;
  BigMatrix& u = out.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Fold every row below r into row r via 2x2 unimodular gcd steps.
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      auto [g, s, t] = ext_gcd<Integer>(h(r, c), h(i, c));
      Integer a = h(r, c) / g;
      Integer b = h(i, c) / g;
      combine_rows(h, r, i, s, t, -b, a);
      combine_rows(u, r, i, s, t, -b, a);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div_big(h(i, c), h(r, c));
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(r, j);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> smith_diagonal(BigMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (m(i, j) != 0 && (pi == rows || mp::abs(m(i, j)) < mp::abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      m.swap_rows(k, pi);
      m.swap_cols(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        Integer q = m(i, k) / m(k, k);
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j) m(i, j) -= q * m(k, j);
        if (m(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer q = m(k, j) / m(k, k);
        if (q != 0)
          for (std::size_t i = k; i < rows; ++i) m(i, j) -= q * m(i, k);
        if (m(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (m(i, j) % m(k, k) != 0) {
            for (std::size_t c = k; c < cols; ++c) m(k, c) += m(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Integer> diag;
  for (std::size_t k = 0; k < n; ++k) diag.push_back(mp::abs(m(k, k)));
  std::stable_sort(diag.begin(), diag.end(), [](const Integer& a, const Integer& b) {
    if (a == 0) return false;
    if (b == 0) return true;
    return a < b;
  });
  return diag;
}

namespace {

Integer round_div(const Integer& a, const Integer& b) {
  // b > 0; nearest integer to a / b, halves rounded down.
  Integer num = 2 * a + b;
  Integer den = 2 * b;
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

}  // namespace

ReducedGram lll_gram(const BigMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw LatticeError(ErrorCode::kDimensionMismatch, "Gram matrix must be square");
  BigMatrix g = input;
  BigMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = 1;
  if (n <= 1) return ReducedGram{g, h};

  // Integral Gram-Schmidt data: dd[i + 1] is the i-th leading minor, lam the
  // scaled coefficients.
  std::vector<Integer> dd(n + 1, 0);
  BigMatrix lam(n, n);
  dd[0] = 1;
  dd[1] = g(0, 0);

  auto sub_row = [&](std::size_t k, std::size_t l, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) h(k, c) -= q * h(l, c);
    for (std::size_t c = 0; c < n; ++c) g(k, c) -= q * g(l, c);
    for (std::size_t r = 0; r < n; ++r) g(r, k) -= q * g(r, l);
  };
  auto redi = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam(k, l)) <= dd[l + 1]) return;
    const Integer q = round_div(lam(k, l), dd[l + 1]);
    sub_row(k, l, q);
    lam(k, l) -= q * dd[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam(k, i) -= q * lam(l, i);
  };
  auto swapi = [&](std::size_t k, std::size_t kmax) {
    for (std::size_t c = 0; c < n; ++c) std::swap(h(k, c), h(k - 1, c));
    for (std::size_t c = 0; c < n; ++c) std::swap(g(k, c), g(k - 1, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, k), g(r, k - 1));
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam(k, j), lam(k - 1, j));
    const Integer l = lam(k, k - 1);
    const Integer b = (dd[k - 1] * dd[k + 1] + l * l) / dd[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam(i, k);
      lam(i, k) = (dd[k + 1] * lam(i, k - 1) - l * t) / dd[k];
      lam(i, k - 1) = (b * t + l * lam(i, k)) / dd[k + 1];
    }
    dd[k] = b;
  };

  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Integer u = g(k, j);
        for (std::size_t i = 0; i < j; ++i) u = (dd[i + 1] * u - lam(k, i) * lam(j, i)) / dd[i];
        if (j < k)
          lam(k, j) = u;
        else
          dd[k + 1] = u;
      }
      if (dd[k + 1] <= 0) throw LatticeError(ErrorCode::kNotPositiveDefinite, "Gram matrix is not positive definite");
    }
    redi(k, k - 1);
    if (4 * dd[k + 1] * dd[k - 1] < 3 * dd[k] * dd[k] - 4 * lam(k, k - 1) * lam(k, k - 1)) {
      swapi(k, kmax);
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) redi(k, l);
    ++k;
  }
  return ReducedGram{g, h};
}

}  // namespace latscreen
