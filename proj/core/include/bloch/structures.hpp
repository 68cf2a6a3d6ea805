#pragma once

// CR sphere S^3 in CP^2 (null cone of the form x conj(z) + y conj(y) + z conj(x)),
// the tangent/secant pencil cross-ratio on it, flags of CP^2 with their
// tetrahedron coordinates z_ab, and the Veronese-type lift h: CP^1 -> flags.

#include <array>
#include <utility>

#include "bloch/errors.hpp"
#include "bloch/numeric.hpp"
#include "bloch/prebloch.hpp"
#include "bloch/projective.hpp"

namespace bloch {

// H(p,q) = p1 conj(q3) + p2 conj(q2) + p3 conj(q1).
template <class R>
Complex<R> hermitian(const Vec3<R>& p, const Vec3<R>& q);

template <class R>
R squared_norm(const Vec3<R>& v) {
  return norm(v[0]) + norm(v[1]) + norm(v[2]);
}

// A point with |H(p,p)| <= tol.null * |p|^2. Inputs off the cone by at most
// tol.admit (relative) are pushed onto it first; larger defects throw NotNull.
template <class R>
class NullPoint {
 public:
  explicit NullPoint(const ProjPoint2<R>& p, const Tolerances& tol = default_tolerances<R>());
  explicit NullPoint(const Vec3<R>& v, const Tolerances& tol = default_tolerances<R>())
      : NullPoint(ProjPoint2<R>(v), tol) {}

  const ProjPoint2<R>& point() const { return p_; }
  // Whether admission had to move the input.
  bool corrected() const { return corrected_; }

 private:
  ProjPoint2<R> p_;
  bool corrected_ = false;
};

// Incident pair f(x) = 0. Lines off by at most tol.admit (relative) are
// projected onto the annihilator of the point; larger defects throw
// NotIncident.
template <class R>
class Flag {
 public:
  Flag() = default;
  Flag(const ProjPoint2<R>& point, const ProjLine2<R>& line, const Tolerances& tol = default_tolerances<R>());

  const ProjPoint2<R>& point() const { return point_; }
  const ProjLine2<R>& line() const { return line_; }
  bool corrected() const { return corrected_; }

 private:
  ProjPoint2<R> point_;
  ProjLine2<R> line_;
  bool corrected_ = false;
};

template <class R>
using FlagTetra = std::array<Flag<R>, 4>;

// Polar line {q : H(q,p) = 0}, dual coordinates (conj p3, conj p2, conj p1).
template <class R>
ProjLine2<R> tangent_line(const NullPoint<R>& p);

// Line through p and q (dual coordinates p x q). Throws CoincidentPoints.
template <class R>
ProjLine2<R> secant_line(const ProjPoint2<R>& p, const ProjPoint2<R>& q,
                         const Tolerances& tol = default_tolerances<R>());

// Cross-ratio of the tangent at p0 and the secants p0p1, p0p2, p0p3 in the
// pencil at p0. Secants that coincide (three points on one chain) give the
// degenerate marker.
template <class R>
CrossRatio<R> fw01(const NullPoint<R>& p0, const NullPoint<R>& p1, const NullPoint<R>& p2,
                   const NullPoint<R>& p3, const Tolerances& tol = default_tolerances<R>());
template <class R>
CrossRatio<R> fw01(const NullPoint<R>& p0, const NullPoint<R>& p1, const NullPoint<R>& p2,
                   const NullPoint<R>& p3, const ProjLine2<R>& auxiliary,
                   const Tolerances& tol = default_tolerances<R>());

// (k, l) completing (a, b) to an even permutation of (0,1,2,3).
std::pair<int, int> even_completion(int a, int b);

// [fw(a,b)] over (a,b) in {01, 10, 23, 32}; degenerate terms are counted.
template <class R>
PreBlochElt<R> fw_sum(const std::array<NullPoint<R>, 4>& p, const Tolerances& tol = default_tolerances<R>());

// z_ab = f_a(x_k) det(x_a,x_b,x_l) / (f_a(x_l) det(x_a,x_b,x_k)).
// Throws DegenerateFlagTetra when a factor vanishes within tol.deg.
template <class R>
Complex<R> z_coordinate(const FlagTetra<R>& t, int a, int b, const Tolerances& tol = default_tolerances<R>());

// [z01] + [z10] + [z23] + [z32]; degenerate coordinates are counted.
template <class R>
PreBlochElt<R> flag_beta(const FlagTetra<R>& t, const Tolerances& tol = default_tolerances<R>());

// [x:y] -> ([x^2 : xy : y^2], [y^2/2 : -xy : x^2/2]).
template <class R>
Flag<R> h_map(const ProjPoint1<R>& p);

}  // namespace bloch
