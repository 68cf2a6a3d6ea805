#pragma once

#include <cmath>

#include "bloch/numeric.hpp"
#include "bloch/projective.hpp"

namespace test {

using C = bloch::Complex<double>;
using P1 = bloch::ProjPoint1<double>;
using P2 = bloch::ProjPoint2<double>;
using L2 = bloch::ProjLine2<double>;

inline double dist(const C& a, const C& b) { return bloch::abs(a - b); }
inline bool close(const C& a, const C& b, double tol) { return dist(a, b) <= tol; }

inline P1 at(double re, double im = 0) { return bloch::affine_point(C(re, im)); }
inline P1 inf() { return bloch::infinity_point<double>(); }
inline P2 p2(C a, C b, C c) { return P2({a, b, c}); }
inline L2 l2(C a, C b, C c) { return L2({a, b, c}); }

}  // namespace test
