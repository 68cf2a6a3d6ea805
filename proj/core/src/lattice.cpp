#include "bloch/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "bloch/errors.hpp"
#include "lll_core.hpp"

namespace bloch {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw UsageError("matrix shapes do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

namespace {

std::size_t columns(const IntMatrix& a) {
  const std::size_t c = a.empty() ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != c) throw UsageError("ragged matrix");
  }
  return c;
}

// Fraction-free elimination; returns the rank and (for square input) the
// determinant.
std::pair<std::size_t, Integer> bareiss(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = columns(m);
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  Integer det = 0;
  if (rows == cols && r == rows) det = rows == 0 ? Integer(1) : Integer(sign * m[rows - 1][cols - 1]);
  return {r, det};
}

class IntegerBasis {
 public:
  explicit IntegerBasis(const IntMatrix& rows) : rows_(rows), transform_(identity_matrix(rows.size())) {}

  std::size_t size() const { return rows_.size(); }
  void approx_row(std::size_t i, std::vector<long double>& out) const {
    out.resize(rows_[i].size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = rows_[i][j].convert_to<long double>();
  }
  void sub_multiple(std::size_t k, std::size_t j, long double q) {
    Integer qi;
    if (std::fabs(q) < 9.0e18L) {
      qi = static_cast<long long>(q);
    } else {
      qi = Integer(static_cast<double>(q));
    }
    for (std::size_t c = 0; c < rows_[k].size(); ++c) rows_[k][c] -= qi * rows_[j][c];
    for (std::size_t c = 0; c < transform_[k].size(); ++c) transform_[k][c] -= qi * transform_[j][c];
  }
  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(rows_[i], rows_[j]);
    std::swap(transform_[i], transform_[j]);
  }

  IntMatrix rows_;
  IntMatrix transform_;
};

}  // namespace

Integer determinant(const IntMatrix& a) {
  if (a.size() != columns(a)) throw UsageError("determinant of a non-square matrix");
  return bareiss(a).second;
}

std::size_t rank(const IntMatrix& a) { return bareiss(a).first; }

bool is_unimodular(const IntMatrix& a) {
  if (a.size() != columns(a)) return false;
  const Integer d = determinant(a);
  return d == 1 || d == -1;
}

LllResult lll_reduce(const IntMatrix& rows, double delta) {
  columns(rows);
  if (!(delta > 0.25 && delta < 1.0)) throw UsageError("LLL parameter must lie in (1/4, 1)");
  if (rank(rows) != rows.size()) throw DependentRows("LLL input rows are linearly dependent");
  IntegerBasis basis(rows);
  // A slightly stronger internal parameter keeps the output reduced for
  // `delta` despite rounding in the Gram-Schmidt data.
  detail::lll_core(basis, static_cast<long double>(std::min(delta + 0.01, 0.999)));
  return {std::move(basis.rows_), std::move(basis.transform_)};
}

RatLllResult lll_reduce(const RatMatrix& rows, double delta) {
  Integer common = 1;
  for (const auto& row : rows)
    for (const auto& x : row) common = mp::lcm(common, Integer(mp::denominator(x)));
  IntMatrix scaled;
  for (const auto& row : rows) {
    std::vector<Integer> out;
    for (const auto& x : row) out.push_back(Integer(mp::numerator(x)) * (common / Integer(mp::denominator(x))));
    scaled.push_back(std::move(out));
  }
  LllResult r = lll_reduce(scaled, delta);
  RatMatrix basis;
  for (const auto& row : r.basis) {
    std::vector<Rational> out;
    for (const auto& x : row) out.emplace_back(x, common);
    basis.push_back(std::move(out));
  }
  return {std::move(basis), std::move(r.transform)};
}

bool is_lll_reduced(const IntMatrix& rows, double delta) {
  const std::size_t n = rows.size();
  const std::size_t d = columns(rows);
  std::vector<std::vector<Rational>> star(n, std::vector<Rational>(d));
  std::vector<Rational> bn(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  auto dot = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> b(d);
    for (std::size_t c = 0; c < d; ++c) b[c] = Rational(rows[i][c]);
    star[i] = b;
    for (std::size_t j = 0; j < i; ++j) {
      if (bn[j] == 0) return false;
      mu[i][j] = dot(b, star[j]) / bn[j];
      for (std::size_t c = 0; c < d; ++c) star[i][c] -= mu[i][j] * star[j][c];
    }
    bn[i] = dot(star[i], star[i]);
  }
  const Rational eta(51, 100);
  const Rational dl = parse_rational(to_decimal(delta));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (mp::abs(mu[i][j]) > eta) return false;
    }
    if (bn[i] < (dl - mu[i][i - 1] * mu[i][i - 1]) * bn[i - 1]) return false;
  }
  return true;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] -= q * m[src][c];
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.size();
  const std::size_t c = columns(a);
  SmithForm s{a, identity_matrix(r), identity_matrix(c), 0};
  IntMatrix& D = s.D;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    bool found = true;
    for (;;) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (D[i][j] != 0 && (pi == r || mp::abs(D[i][j]) < mp::abs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) {
        found = false;
        break;
      }
      std::swap(D[t], D[pi]);
      std::swap(s.U[t], s.U[pi]);
      col_swap(D, t, pj);
      col_swap(s.V, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D[i][t] == 0) continue;
        const Integer q = D[i][t] / D[t][t];
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D[t][j] == 0) continue;
        const Integer q = D[t][j] / D[t][t];
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_axpy(D, t, bad, Integer(-1));
      row_axpy(s.U, t, bad, Integer(-1));
    }
    if (!found) break;
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
    ++s.rank;
  }
  return s;
}

}  // namespace bloch
