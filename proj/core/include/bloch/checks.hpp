#pragma once

// Randomized property checks shared by `check` and `selftest`.

#include <array>
#include <cstddef>
#include <string>

#include "bloch/invariants.hpp"
#include "bloch/sampling.hpp"
#include "bloch/triangulation.hpp"

namespace bloch {

struct PropertyCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_residual = 0;
  double tolerance = 0;
  std::string note;

  bool pass() const { return failures == 0 && trials > 0; }
  void record(double residual) {
    ++trials;
    if (residual > max_residual) max_residual = residual;
    if (!(residual <= tolerance)) ++failures;
  }
};

// Alternating faces of a 5-tuple as a triangulation (coefficients +-1).
Triangulation hyperbolic_boundary(const std::array<ProjPoint1<double>, 5>& p);
Triangulation cr_boundary(const std::array<NullPoint<double>, 5>& p);
Triangulation flag_boundary(const std::array<Flag<double>, 5>& f);
Triangulation random_boundary(Geometry g, Sampler& s);

// |z_ab(h(T)) - X(T)| over the four coordinates.
PropertyCheck check_h_identity(Sampler& s, std::size_t trials, double tol = 1e-9);

// flag(lift_by_h(t)) = 4 hyperbolic(t) on random triangulations.
PropertyCheck check_four_times(Sampler& s, std::size_t trials, std::size_t tetrahedra = 5, double tol = 1e-9);

// Boundaries of random 5-tuples: |volume| <= opts.volume_tol and, when
// opts.compute_delta, delta status zero.
PropertyCheck check_boundary_vanishing(Geometry g, Sampler& s, std::size_t trials, const InvariantOptions& opts);

// fw01 under random auxiliary lines, relative to the default choice.
PropertyCheck check_pencil_independence(Sampler& s, std::size_t quadruples, std::size_t lines, double tol = 1e-10);

// The worked null quadruple against slope coordinates on the pencil.
PropertyCheck check_pencil_oracle(double tol = 1e-10);

// d d = 0, alternation, symmetrize as right inverse and chain map. Exact;
// the residual counts violated identities.
PropertyCheck check_chain_algebra(Sampler& s, std::size_t trials);

// Functional equations of D and the cross-ratio permutation law.
PropertyCheck check_dilog_identities(Sampler& s, std::size_t trials, double tol = 1e-10);
PropertyCheck check_cross_ratio_law(Sampler& s, std::size_t trials, double tol = 1e-10);

}  // namespace bloch
