#pragma once

// Floating-point LLL (Schnorr-Euchner style) over an exact basis policy.
// The Gram-Schmidt data are long double and row k is recomputed from the
// exact row after every size-reduction pass, so rounding never accumulates
// across iterations.
//
// Basis must provide:
//   std::size_t size() const;
//   void approx_row(std::size_t i, std::vector<long double>& out) const;
//   void sub_multiple(std::size_t k, std::size_t j, long double q);  // b_k -= q b_j, q integral
//   void swap_rows(std::size_t i, std::size_t j);

#include <cmath>
#include <cstddef>
#include <vector>

#include "bloch/errors.hpp"

namespace bloch::detail {

inline long double dot(const std::vector<long double>& a, const std::vector<long double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class Basis>
void lll_core(Basis& basis, long double delta, std::size_t max_swaps = 2000000) {
  const std::size_t n = basis.size();
  if (n < 2) return;
  std::vector<std::vector<long double>> bf(n);
  for (std::size_t i = 0; i < n; ++i) basis.approx_row(i, bf[i]);
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  std::vector<std::vector<long double>> r(n, std::vector<long double>(n, 0));
  std::vector<long double> bstar(n, 0);

  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      long double v = dot(bf[k], bf[j]);
      for (std::size_t i = 0; i < j; ++i) v -= mu[j][i] * r[k][i];
      r[k][j] = v;
      mu[k][j] = v / bstar[j];
    }
    long double s = dot(bf[k], bf[k]);
    for (std::size_t j = 0; j < k; ++j) s -= mu[k][j] * r[k][j];
    bstar[k] = s;
  };

  bstar[0] = dot(bf[0], bf[0]);
  std::size_t swaps = 0;
  std::size_t k = 1;
  while (k < n) {
    for (int pass = 0;; ++pass) {
      if (pass > 200) throw PrecisionExhausted("size reduction does not settle");
      gso_row(k);
      bool changed = false;
      for (std::size_t jj = k; jj-- > 0;) {
        const long double m = mu[k][jj];
        if (std::fabs(m) <= 0.51L) continue;
        const long double q = std::nearbyint(m);
        basis.sub_multiple(k, jj, q);
        for (std::size_t i = 0; i < jj; ++i) mu[k][i] -= q * mu[jj][i];
        mu[k][jj] -= q;
        changed = true;
      }
      if (!changed) break;
      basis.approx_row(k, bf[k]);
    }
    const long double m = mu[k][k - 1];
    if (bstar[k] < (delta - m * m) * bstar[k - 1]) {
      if (++swaps > max_swaps) throw PrecisionExhausted("lattice reduction did not terminate");
      basis.swap_rows(k, k - 1);
      std::swap(bf[k], bf[k - 1]);
      if (k == 1) {
        bstar[0] = dot(bf[0], bf[0]);
      } else {
        --k;
      }
    } else {
      ++k;
    }
  }
}

}  // namespace bloch::detail
