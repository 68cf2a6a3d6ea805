#pragma once

// Homogeneous coordinates on CP^1, CP^2 and dual CP^2, the actions of
// GL(2,C) and GL(3,C) on them, and projective cross-ratios.
//
// All templates are instantiated for R = double and R = Mp.

#include <array>
#include <cstddef>

#include "bloch/errors.hpp"
#include "bloch/numeric.hpp"

namespace bloch {

struct PointTag {};
struct LineTag {};

// Nonzero vector of C^N up to scale. Stored divided by its largest-modulus
// coordinate (lowest index on ties), which is then exactly 1.
template <class R, std::size_t N, class Tag>
class Homogeneous {
 public:
  using Coords = std::array<Complex<R>, N>;

  Homogeneous() { v_[0] = Complex<R>(R(1)); }

  // Throws ZeroVector for the zero vector or non-finite input.
  explicit Homogeneous(Coords v) : v_(std::move(v)) { normalize(); }

  const Complex<R>& operator[](std::size_t i) const { return v_[i]; }
  const Coords& coords() const { return v_; }

  // Exact lexicographic order on (Re, Im) of the normalized coordinates.
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < N; ++i) {
      if (a.v_[i].re != b.v_[i].re) return a.v_[i].re < b.v_[i].re;
      if (a.v_[i].im != b.v_[i].im) return a.v_[i].im < b.v_[i].im;
    }
    return false;
  }
  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.v_ == b.v_; }

 private:
  void normalize();

  Coords v_{};
};

template <class R, std::size_t N, class Tag>
void Homogeneous<R, N, Tag>::normalize() {
  using std::isfinite;
  std::size_t best = 0;
  R best_norm(0);
  for (std::size_t i = 0; i < N; ++i) {
    if (!isfinite(v_[i].re) || !isfinite(v_[i].im)) throw ZeroVector("non-finite homogeneous coordinate");
    R n = norm(v_[i]);
    if (n > best_norm) {
      best_norm = n;
      best = i;
    }
  }
  if (best_norm == 0) throw ZeroVector("homogeneous coordinates are all zero");
  const Complex<R> pivot = v_[best];
  for (std::size_t i = 0; i < N; ++i) v_[i] = (i == best) ? Complex<R>(R(1)) : v_[i] / pivot;
}

template <class R>
using ProjPoint1 = Homogeneous<R, 2, PointTag>;
template <class R>
using ProjPoint2 = Homogeneous<R, 3, PointTag>;
template <class R>
using ProjLine2 = Homogeneous<R, 3, LineTag>;

template <class R>
using Mat2 = std::array<std::array<Complex<R>, 2>, 2>;
template <class R>
using Mat3 = std::array<std::array<Complex<R>, 3>, 3>;
template <class R>
using Vec3 = std::array<Complex<R>, 3>;

// Point z of C, or the point at infinity [1:0].
template <class R>
ProjPoint1<R> affine_point(const Complex<R>& z) {
  return ProjPoint1<R>({z, Complex<R>(R(1))});
}
template <class R>
ProjPoint1<R> infinity_point() {
  return ProjPoint1<R>({Complex<R>(R(1)), Complex<R>(R(0))});
}

// A cross-ratio value, or the marker for a degenerate quadruple.
template <class R>
class CrossRatio {
 public:
  static CrossRatio degenerate() { return CrossRatio(); }
  explicit CrossRatio(Complex<R> value) : value_(std::move(value)), degenerate_(false) {}

  bool is_degenerate() const { return degenerate_; }
  // Precondition: !is_degenerate().
  const Complex<R>& value() const { return value_; }

 private:
  CrossRatio() = default;
  Complex<R> value_{};
  bool degenerate_ = true;
};

// 2x2 determinant x_a y_b - x_b y_a of the stored representatives.
template <class R>
Complex<R> det2(const ProjPoint1<R>& a, const ProjPoint1<R>& b) {
  return a[0] * b[1] - b[0] * a[1];
}

// X = (d02 d13) / (d03 d12). Degenerate when two of the points coincide
// within tol.deg (which is exactly when X would be 0, 1 or infinity).
template <class R>
CrossRatio<R> cross_ratio(const ProjPoint1<R>& p0, const ProjPoint1<R>& p1, const ProjPoint1<R>& p2,
                          const ProjPoint1<R>& p3, const Tolerances& tol = default_tolerances<R>());

// Throws SingularMatrix when |det g| < tol.deg * max|g_ij|^2.
template <class R>
ProjPoint1<R> mobius_act(const Mat2<R>& g, const ProjPoint1<R>& p,
                         const Tolerances& tol = default_tolerances<R>());

// Points transform by g, lines by the inverse transpose, so f(x) = 0 is
// preserved.
template <class R>
ProjPoint2<R> sl3_act(const Mat3<R>& g, const ProjPoint2<R>& p,
                      const Tolerances& tol = default_tolerances<R>());
template <class R>
ProjLine2<R> sl3_act(const Mat3<R>& g, const ProjLine2<R>& f,
                     const Tolerances& tol = default_tolerances<R>());

template <class R>
Mat2<R> mat_mul(const Mat2<R>& a, const Mat2<R>& b);
template <class R>
Complex<R> det(const Mat2<R>& g);
template <class R>
Complex<R> det(const Mat3<R>& g);

// det of the column vectors a, b, c (representative dependent: only ratios
// of these values are meaningful).
template <class R>
Complex<R> det3(const Vec3<R>& a, const Vec3<R>& b, const Vec3<R>& c);
template <class R>
Complex<R> det3(const ProjPoint2<R>& a, const ProjPoint2<R>& b, const ProjPoint2<R>& c) {
  return det3(a.coords(), b.coords(), c.coords());
}

template <class R>
Vec3<R> cross(const Vec3<R>& a, const Vec3<R>& b);

// Bilinear pairing f(x) = sum f_i x_i.
template <class R>
Complex<R> pair(const ProjLine2<R>& f, const ProjPoint2<R>& x);

template <class R>
R max_abs(const Vec3<R>& v);

// Cross-ratio of four concurrent lines through `vertex`, read off on an
// auxiliary line not through the vertex. The value does not depend on the
// auxiliary line; the overload without one picks the coordinate line
// opposite the largest coordinate of the vertex.
//
// Throws NotConcurrent if some line misses the vertex by more than tol.inc.
template <class R>
CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>& vertex, const std::array<ProjLine2<R>, 4>& lines,
                                 const Tolerances& tol = default_tolerances<R>());
template <class R>
CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>& vertex, const std::array<ProjLine2<R>, 4>& lines,
                                 const ProjLine2<R>& auxiliary,
                                 const Tolerances& tol = default_tolerances<R>());

}  // namespace bloch
