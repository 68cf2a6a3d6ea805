#include "bloch/projective.hpp"

#include <algorithm>

namespace bloch {

template <class R>
CrossRatio<R> cross_ratio(const ProjPoint1<R>& p0, const ProjPoint1<R>& p1, const ProjPoint1<R>& p2,
                          const ProjPoint1<R>& p3, const Tolerances& tol) {
  const std::array<const ProjPoint1<R>*, 4> p{&p0, &p1, &p2, &p3};
  const R eps = tol.deg_tol<R>();
  std::array<std::array<Complex<R>, 4>, 4> d{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      d[i][j] = det2(*p[i], *p[j]);
      if (abs(d[i][j]) <= eps) return CrossRatio<R>::degenerate();
    }
  }
  return CrossRatio<R>((d[0][2] * d[1][3]) / (d[0][3] * d[1][2]));
}

template <class R>
Complex<R> det(const Mat2<R>& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

template <class R>
Complex<R> det(const Mat3<R>& g) {
  return det3<R>({g[0][0], g[1][0], g[2][0]}, {g[0][1], g[1][1], g[2][1]}, {g[0][2], g[1][2], g[2][2]});
}

template <class R>
Mat2<R> mat_mul(const Mat2<R>& a, const Mat2<R>& b) {
  Mat2<R> c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

namespace {

template <class R, std::size_t N>
R max_entry_norm(const std::array<std::array<Complex<R>, N>, N>& g) {
  R m(0);
  for (const auto& row : g)
    for (const auto& x : row) m = std::max(m, norm(x));
  return m;
}

template <class R, std::size_t N>
void require_invertible(const std::array<std::array<Complex<R>, N>, N>& g, const Tolerances& tol) {
  using std::sqrt;
  const R scale = max_entry_norm(g);
  if (scale == 0) throw SingularMatrix("zero matrix");
  // |det| is homogeneous of degree N in the entries, scale = max|g_ij|^2.
  R bound = tol.deg_tol<R>() * scale;
  if constexpr (N == 3) bound *= sqrt(scale);
  if (!(abs(det(g)) >= bound)) throw SingularMatrix("matrix is singular within tolerance");
}

}  // namespace

template <class R>
ProjPoint1<R> mobius_act(const Mat2<R>& g, const ProjPoint1<R>& p, const Tolerances& tol) {
  require_invertible(g, tol);
  return ProjPoint1<R>({g[0][0] * p[0] + g[0][1] * p[1], g[1][0] * p[0] + g[1][1] * p[1]});
}

template <class R>
ProjPoint2<R> sl3_act(const Mat3<R>& g, const ProjPoint2<R>& p, const Tolerances& tol) {
  require_invertible(g, tol);
  Vec3<R> out{};
  for (int i = 0; i < 3; ++i) out[i] = g[i][0] * p[0] + g[i][1] * p[1] + g[i][2] * p[2];
  return ProjPoint2<R>(out);
}

template <class R>
ProjLine2<R> sl3_act(const Mat3<R>& g, const ProjLine2<R>& f, const Tolerances& tol) {
  require_invertible(g, tol);
  // g^{-T} f up to the scalar 1/det: the row vector f . adj(g). The columns of
  // g are g_c; adj(g) rows are cross products of pairs of columns.
  const Vec3<R> c0{g[0][0], g[1][0], g[2][0]};
  const Vec3<R> c1{g[0][1], g[1][1], g[2][1]};
  const Vec3<R> c2{g[0][2], g[1][2], g[2][2]};
  const std::array<Vec3<R>, 3> adj_rows{cross(c1, c2), cross(c2, c0), cross(c0, c1)};
  // (g^{-1})_{ij} = adj_rows[i][j] / det, and f' = g^{-T} f has
  // f'_i = sum_j (g^{-1})_{ji} f_j.
  Vec3<R> out{};
  for (int i = 0; i < 3; ++i) out[i] = adj_rows[0][i] * f[0] + adj_rows[1][i] * f[1] + adj_rows[2][i] * f[2];
  return ProjLine2<R>(out);
}

template <class R>
Complex<R> det3(const Vec3<R>& a, const Vec3<R>& b, const Vec3<R>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
         c[0] * (a[1] * b[2] - a[2] * b[1]);
}

template <class R>
Vec3<R> cross(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class R>
Complex<R> pair(const ProjLine2<R>& f, const ProjPoint2<R>& x) {
  return f[0] * x[0] + f[1] * x[1] + f[2] * x[2];
}

template <class R>
R max_abs(const Vec3<R>& v) {
  R m(0);
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

template <class R>
CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>& vertex, const std::array<ProjLine2<R>, 4>& lines,
                                 const ProjLine2<R>& auxiliary, const Tolerances& tol) {
  for (const auto& l : lines) {
    if (!(abs(pair(l, vertex)) <= tol.inc_tol<R>())) {
      throw NotConcurrent("line does not pass through the pencil vertex");
    }
  }
  if (abs(pair(auxiliary, vertex)) <= tol.inc_tol<R>()) {
    throw DegenerateParameter("auxiliary line passes through the pencil vertex");
  }
  // Intersections with the auxiliary line are points q_i = l_i x A on a
  // common line; det(q_i, q_j, vertex) is, up to a common factor, the 2x2
  // determinant of their coordinates on that line.
  std::array<ProjPoint2<R>, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = ProjPoint2<R>(cross(lines[i].coords(), auxiliary.coords()));
  const R eps = tol.deg_tol<R>();
  std::array<std::array<Complex<R>, 4>, 4> d{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      d[i][j] = det3(q[i], q[j], vertex);
      if (abs(d[i][j]) <= eps) return CrossRatio<R>::degenerate();
    }
  }
  return CrossRatio<R>((d[0][2] * d[1][3]) / (d[0][3] * d[1][2]));
}

template <class R>
CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>& vertex, const std::array<ProjLine2<R>, 4>& lines,
                                 const Tolerances& tol) {
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (vertex[i] == Complex<R>(R(1))) {
      pivot = i;
      break;
    }
  }
  Vec3<R> a{};
  a[pivot] = Complex<R>(R(1));
  return pencil_cross_ratio(vertex, lines, ProjLine2<R>(a), tol);
}

#define BLOCH_INSTANTIATE(R)                                                                              \
  template CrossRatio<R> cross_ratio(const ProjPoint1<R>&, const ProjPoint1<R>&, const ProjPoint1<R>&,  \
                                     const ProjPoint1<R>&, const Tolerances&);                           \
  template ProjPoint1<R> mobius_act(const Mat2<R>&, const ProjPoint1<R>&, const Tolerances&);           \
  template ProjPoint2<R> sl3_act(const Mat3<R>&, const ProjPoint2<R>&, const Tolerances&);              \
  template ProjLine2<R> sl3_act(const Mat3<R>&, const ProjLine2<R>&, const Tolerances&);                \
  template Mat2<R> mat_mul(const Mat2<R>&, const Mat2<R>&);                                             \
  template Complex<R> det(const Mat2<R>&);                                                              \
  template Complex<R> det(const Mat3<R>&);                                                              \
  template Complex<R> det3(const Vec3<R>&, const Vec3<R>&, const Vec3<R>&);                             \
  template Vec3<R> cross(const Vec3<R>&, const Vec3<R>&);                                               \
  template Complex<R> pair(const ProjLine2<R>&, const ProjPoint2<R>&);                                  \
  template R max_abs(const Vec3<R>&);                                                                   \
  template CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>&, const std::array<ProjLine2<R>, 4>&,   \
                                            const ProjLine2<R>&, const Tolerances&);                    \
  template CrossRatio<R> pencil_cross_ratio(const ProjPoint2<R>&, const std::array<ProjLine2<R>, 4>&,   \
                                            const Tolerances&);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
