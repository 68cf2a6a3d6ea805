#pragma once

// End-to-end pipelines: triangulation -> canonical pre-Bloch element ->
// volume and delta, for the hyperbolic, CR and flag flavors, plus the
// comparison used for cut-and-paste checks.

#include <optional>
#include <string>
#include <vector>

#include "bloch/prebloch.hpp"
#include "bloch/regulator.hpp"
#include "bloch/triangulation.hpp"
#include "bloch/wedge.hpp"

namespace bloch {

struct InvariantOptions {
  // Base (binary64) tolerances; scaled to the working precision.
  Tolerances tolerances{};
  bool compute_delta = true;
  // Detection bits for delta. The element is re-evaluated from the input at
  // 4 * delta_bits so that relations are exact far below the threshold.
  int delta_bits = 128;
  // Residual floor for a nonzero delta; 0 means 2^(16 - delta_bits).
  double wedge_tol = 0;
  // |volume difference| accepted by compare.
  double volume_tol = 1e-8;
};

template <class R>
struct InvariantResult {
  Geometry geometry = Geometry::hyperbolic;
  PreBlochElt<R> element;
  VolumeReport volume;
  std::optional<WedgeVerdict> delta;
  std::vector<std::string> warnings;
};

template <class R>
struct ComparisonReport {
  Geometry geometry = Geometry::hyperbolic;
  PreBlochElt<R> difference;
  VolumeReport volume;
  std::optional<WedgeVerdict> delta;
  bool equal = false;
  std::string verdict;
  std::vector<std::string> warnings;
};

// Tolerances of `base` at the working precision of R.
template <class R>
Tolerances working_tolerances(const Tolerances& base) {
  Tolerances t = base;
  t.bits = working_bits<R>();
  return t;
}

// Elements only (no volume or delta).
template <class R>
PreBlochElt<R> hyperbolic_element(const Triangulation& t, const Tolerances& tol);
template <class R>
PreBlochElt<R> fw_element(const Triangulation& t, const Tolerances& tol);
template <class R>
PreBlochElt<R> flag_element(const Triangulation& t, const Tolerances& tol);
// Dispatch on the geometry tag.
template <class R>
PreBlochElt<R> element_of(const Triangulation& t, const Tolerances& tol);

// Geometry must be hyperbolic or shapes (GeometryMismatch otherwise).
template <class R>
InvariantResult<R> hyperbolic_invariant(const Triangulation& t, const InvariantOptions& opts = {});
template <class R>
InvariantResult<R> fw_invariant(const Triangulation& t, const InvariantOptions& opts = {});
// Volume follows the flag convention (one quarter of the D sum).
template <class R>
InvariantResult<R> flag_invariant(const Triangulation& t, const InvariantOptions& opts = {});
template <class R>
InvariantResult<R> invariant(const Triangulation& t, const InvariantOptions& opts = {});

// delta of the element of `t` (or of a - b), evaluated at 4 * delta_bits.
WedgeVerdict delta_of(const Triangulation& t, const InvariantOptions& opts);
WedgeVerdict delta_of_difference(const Triangulation& a, const Triangulation& b, const InvariantOptions& opts);

// Vertexwise h. Requires hyperbolic vertex data; EmptyTriangulation for no
// tetrahedra.
Triangulation lift_by_h(const Triangulation& t);

// Same invariant family (hyperbolic and shapes are one family); otherwise
// GeometryMismatch. Equal iff |volume(a - b)| <= volume_tol and delta is
// zero: necessary conditions for equality in B(C) (x) Q.
template <class R>
ComparisonReport<R> compare(const Triangulation& a, const Triangulation& b, const InvariantOptions& opts = {});

}  // namespace bloch
