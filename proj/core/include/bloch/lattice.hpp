#pragma once

// Exact integer lattices: LLL reduction with a recorded unimodular
// transform, and Smith normal form.

#include <cstddef>
#include <vector>

#include "bloch/numeric.hpp"

namespace bloch {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
Integer determinant(const IntMatrix& a);  // Bareiss, square input
std::size_t rank(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

struct LllResult {
  IntMatrix basis;
  IntMatrix transform;  // transform * input = basis, det = +-1
};

// Rows must be linearly independent (DependentRows otherwise).
LllResult lll_reduce(const IntMatrix& rows, double delta = 0.75);

struct RatLllResult {
  RatMatrix basis;
  IntMatrix transform;
};
// Rational rows: reduced after clearing the common denominator.
RatLllResult lll_reduce(const RatMatrix& rows, double delta = 0.75);

// Lovasz and size conditions (|mu| <= 1/2 + 1e-9), checked exactly.
bool is_lll_reduced(const IntMatrix& rows, double delta = 0.75);

struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
};

// U * A * V = D, diagonal with d1 | d2 | ... (nonnegative), U and V
// unimodular.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace bloch
