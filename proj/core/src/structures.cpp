#include "bloch/structures.hpp"

#include <cmath>

namespace bloch {

template <class R>
Complex<R> hermitian(const Vec3<R>& p, const Vec3<R>& q) {
  return p[0] * conj(q[2]) + p[1] * conj(q[1]) + p[2] * conj(q[0]);
}

namespace {

// H(v,v), which is real: 2 Re(x conj z) + |y|^2.
template <class R>
R null_defect(const Vec3<R>& v) {
  return R(2) * (v[0].re * v[2].re + v[0].im * v[2].im) + norm(v[1]);
}

template <class R>
R two_norm(const Vec3<R>& v) {
  using std::sqrt;
  return sqrt(squared_norm(v));
}

}  // namespace

template <class R>
NullPoint<R>::NullPoint(const ProjPoint2<R>& p, const Tolerances& tol) : p_(p) {
  using std::abs;
  Vec3<R> v = p.coords();
  const R n2 = squared_norm(v);
  R g = null_defect(v);
  if (abs(g) <= tol.null_tol<R>() * n2) return;
  if (!(abs(g) <= R(tol.admit) * n2)) throw NotNull("point is not on the CR sphere");
  // Newton on the scale of the middle coordinate while that is well
  // conditioned; otherwise the defect is linear in x (or z) and one step is
  // exact up to rounding.
  for (int iter = 0; iter < 64 && !(abs(g) <= tol.null_tol<R>() * n2); ++iter) {
    const R y2 = norm(v[1]);
    if (y2 > abs(g)) {
      const R t = -g / (R(2) * y2);
      v[1] = (R(1) + t) * v[1];
    } else if (norm(v[2]) >= norm(v[0])) {
      v[0] = v[0] - (g / (R(2) * norm(v[2]))) * v[2];
    } else {
      v[2] = v[2] - (g / (R(2) * norm(v[0]))) * v[0];
    }
    g = null_defect(v);
  }
  if (!(abs(g) <= tol.null_tol<R>() * n2)) throw NotNull("null-cone correction did not converge");
  p_ = ProjPoint2<R>(v);
  corrected_ = true;
}

template <class R>
Flag<R>::Flag(const ProjPoint2<R>& point, const ProjLine2<R>& line, const Tolerances& tol)
    : point_(point), line_(line) {
  using std::abs;
  const Vec3<R>& x = point_.coords();
  Vec3<R> f = line_.coords();
  const R scale = two_norm(f) * two_norm(x);
  const Complex<R> r = pair(line_, point_);
  if (abs(r) <= tol.inc_tol<R>() * scale) return;
  if (!(abs(r) <= R(tol.admit) * scale)) throw NotIncident("line does not contain the flag point");
  const Complex<R> s = r / Complex<R>(squared_norm(x));
  for (int i = 0; i < 3; ++i) f[i] = f[i] - s * conj(x[i]);
  line_ = ProjLine2<R>(f);
  corrected_ = true;
}

template <class R>
ProjLine2<R> tangent_line(const NullPoint<R>& p) {
  const auto& v = p.point();
  return ProjLine2<R>({conj(v[2]), conj(v[1]), conj(v[0])});
}

template <class R>
ProjLine2<R> secant_line(const ProjPoint2<R>& p, const ProjPoint2<R>& q, const Tolerances& tol) {
  const Vec3<R> c = cross(p.coords(), q.coords());
  if (max_abs(c) <= tol.deg_tol<R>()) throw CoincidentPoints("secant through coincident points");
  return ProjLine2<R>(c);
}

namespace {

template <class R>
std::array<ProjLine2<R>, 4> fw_lines(const NullPoint<R>& p0, const NullPoint<R>& p1, const NullPoint<R>& p2,
                                     const NullPoint<R>& p3, const Tolerances& tol) {
  return {tangent_line(p0), secant_line(p0.point(), p1.point(), tol), secant_line(p0.point(), p2.point(), tol),
          secant_line(p0.point(), p3.point(), tol)};
}

}  // namespace

template <class R>
CrossRatio<R> fw01(const NullPoint<R>& p0, const NullPoint<R>& p1, const NullPoint<R>& p2, const NullPoint<R>& p3,
                   const Tolerances& tol) {
  return pencil_cross_ratio(p0.point(), fw_lines(p0, p1, p2, p3, tol), tol);
}

template <class R>
CrossRatio<R> fw01(const NullPoint<R>& p0, const NullPoint<R>& p1, const NullPoint<R>& p2, const NullPoint<R>& p3,
                   const ProjLine2<R>& auxiliary, const Tolerances& tol) {
  return pencil_cross_ratio(p0.point(), fw_lines(p0, p1, p2, p3, tol), auxiliary, tol);
}

std::pair<int, int> even_completion(int a, int b) {
  static constexpr int table[4][4][2] = {
      {{-1, -1}, {2, 3}, {3, 1}, {1, 2}},
      {{3, 2}, {-1, -1}, {0, 3}, {2, 0}},
      {{1, 3}, {3, 0}, {-1, -1}, {0, 1}},
      {{2, 1}, {0, 2}, {1, 0}, {-1, -1}},
  };
  if (a < 0 || a > 3 || b < 0 || b > 3 || a == b) throw UsageError("even_completion needs distinct indices in 0..3");
  return {table[a][b][0], table[a][b][1]};
}

namespace {

constexpr std::array<std::pair<int, int>, 4> kBetaPairs{{{0, 1}, {1, 0}, {2, 3}, {3, 2}}};

template <class R>
void add_or_count(PreBlochElt<R>& e, const Complex<R>& z) {
  try {
    e.add(z, Rational(1));
  } catch (const DegenerateParameter&) {
    e.add_degenerate();
  }
}

}  // namespace

template <class R>
PreBlochElt<R> fw_sum(const std::array<NullPoint<R>, 4>& p, const Tolerances& tol) {
  PreBlochElt<R> e(tol);
  for (const auto& [a, b] : kBetaPairs) {
    const auto [k, l] = even_completion(a, b);
    try {
      const CrossRatio<R> x = fw01(p[a], p[b], p[k], p[l], tol);
      if (x.is_degenerate()) {
        e.add_degenerate();
      } else {
        add_or_count(e, x.value());
      }
    } catch (const CoincidentPoints&) {
      e.add_degenerate();
    }
  }
  return e;
}

template <class R>
Complex<R> z_coordinate(const FlagTetra<R>& t, int a, int b, const Tolerances& tol) {
  const auto [k, l] = even_completion(a, b);
  const ProjLine2<R>& fa = t[a].line();
  const Complex<R> fk = pair(fa, t[k].point());
  const Complex<R> fl = pair(fa, t[l].point());
  const Complex<R> dl = det3(t[a].point(), t[b].point(), t[l].point());
  const Complex<R> dk = det3(t[a].point(), t[b].point(), t[k].point());
  const R eps = tol.deg_tol<R>();
  if (abs(fl) <= eps || abs(dk) <= eps) throw DegenerateFlagTetra("flags are not in generic position");
  return (fk * dl) / (fl * dk);
}

template <class R>
PreBlochElt<R> flag_beta(const FlagTetra<R>& t, const Tolerances& tol) {
  PreBlochElt<R> e(tol);
  for (const auto& [a, b] : kBetaPairs) {
    try {
      add_or_count(e, z_coordinate(t, a, b, tol));
    } catch (const DegenerateFlagTetra&) {
      e.add_degenerate();
    }
  }
  return e;
}

template <class R>
Flag<R> h_map(const ProjPoint1<R>& p) {
  const Complex<R>& x = p[0];
  const Complex<R>& y = p[1];
  const R half(0.5);
  return Flag<R>(ProjPoint2<R>({x * x, x * y, y * y}), ProjLine2<R>({half * (y * y), -(x * y), half * (x * x)}));
}

#define BLOCH_INSTANTIATE(R)                                                                                   \
  template Complex<R> hermitian(const Vec3<R>&, const Vec3<R>&);                                              \
  template class NullPoint<R>;                                                                                \
  template class Flag<R>;                                                                                     \
  template ProjLine2<R> tangent_line(const NullPoint<R>&);                                                    \
  template ProjLine2<R> secant_line(const ProjPoint2<R>&, const ProjPoint2<R>&, const Tolerances&);           \
  template CrossRatio<R> fw01(const NullPoint<R>&, const NullPoint<R>&, const NullPoint<R>&,                  \
                              const NullPoint<R>&, const Tolerances&);                                        \
  template CrossRatio<R> fw01(const NullPoint<R>&, const NullPoint<R>&, const NullPoint<R>&,                  \
                              const NullPoint<R>&, const ProjLine2<R>&, const Tolerances&);                   \
  template PreBlochElt<R> fw_sum(const std::array<NullPoint<R>, 4>&, const Tolerances&);                      \
  template Complex<R> z_coordinate(const FlagTetra<R>&, int, int, const Tolerances&);                         \
  template PreBlochElt<R> flag_beta(const FlagTetra<R>&, const Tolerances&);                                  \
  template Flag<R> h_map(const ProjPoint1<R>&);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
