#pragma once

// Numerical delta: P(C) -> Lambda^2(C^*) (x) Q, delta[z] = z ^ (1 - z), computed
// modulo the multiplicative relations detected among the parameters.

#include <string>
#include <utility>
#include <vector>

#include "bloch/lattice.hpp"
#include "bloch/numeric.hpp"
#include "bloch/prebloch.hpp"

namespace bloch {

struct RelationLattice {
  // The values searched, followed by the -1 generator.
  std::vector<Complex<Mp>> generators;
  // Rows n with prod gen_k^n_k = 1; torsion shows up through the -1 generator.
  IntMatrix relations;
  // (ln|gen|, arg gen) per generator, rounded for reports.
  std::vector<std::pair<double, double>> log_data;
  int detection_bits = 0;
  // Exponents beyond 2^20 were needed; relations may be incomplete.
  bool height_exceeded = false;
};

// Integer relations among {values, -1}: LLL on scaled (ln|.|, arg) columns
// with an extra 2 pi row. Each candidate is re-verified at twice `bits`
// (capped by the working precision). The values must carry at least
// bits + 32 bits. Throws PrecisionExhausted when candidates keep failing
// verification.
RelationLattice find_relations(const std::vector<Complex<Mp>>& values, int bits);

enum class WedgeStatus { zero, nonzero, inconclusive };
std::string to_string(WedgeStatus s);

struct WedgeVerdict {
  WedgeStatus status = WedgeStatus::zero;
  // Frobenius norm of delta(e) projected off the relation lattice; 0 when
  // every exact coordinate vanishes.
  double residual_norm = 0;
  std::size_t free_rank = 0;  // rank of the torsion-free quotient
  RelationLattice lattice;
};

// Parameters must stay tol.deg away from 0 and 1 (DegenerateParameter).
// A nonzero result is re-run at twice the bits (when the working precision
// allows) and reported nonzero only if the residual is unchanged. A nonzero
// result with residual below wedge_tol (default 2^(16 - bits)) is
// inconclusive, as is a relation search that exhausts the precision.
WedgeVerdict delta_test(const PreBlochElt<Mp>& e, int bits, double wedge_tol = 0);

}  // namespace bloch
