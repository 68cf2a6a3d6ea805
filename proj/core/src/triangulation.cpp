#include "bloch/triangulation.hpp"

#include "bloch/errors.hpp"

namespace bloch {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::hyperbolic:
      return "hyperbolic";
    case Geometry::cr:
      return "cr";
    case Geometry::flag:
      return "flag";
    case Geometry::shapes:
      return "shapes";
  }
  return "hyperbolic";
}

Geometry parse_geometry(const std::string& s) {
  if (s == "hyperbolic") return Geometry::hyperbolic;
  if (s == "cr") return Geometry::cr;
  if (s == "flag") return Geometry::flag;
  if (s == "shapes") return Geometry::shapes;
  throw SchemaError("unknown geometry \"" + s + "\"");
}

namespace {

template <class R, std::size_t N>
std::array<Complex<R>, N> read_vector(const std::vector<CText>& v, std::size_t index) {
  if (v.size() != N) throw GeometryError(index, "expected " + std::to_string(N) + " homogeneous coordinates");
  std::array<Complex<R>, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i].value<R>();
  return out;
}

void require_four(const std::vector<std::vector<CText>>& v, std::size_t index, const char* what) {
  if (v.size() != 4) throw GeometryError(index, std::string("expected 4 ") + what);
}

}  // namespace

template <class R>
std::array<ProjPoint1<R>, 4> hyperbolic_vertices(const Tetrahedron& t, std::size_t index) {
  require_four(t.vertices, index, "vertices");
  std::array<ProjPoint1<R>, 4> out;
  try {
    for (std::size_t i = 0; i < 4; ++i) out[i] = ProjPoint1<R>(read_vector<R, 2>(t.vertices[i], index));
  } catch (const ZeroVector& e) {
    throw GeometryError(index, e.what());
  }
  return out;
}

template <class R>
std::array<NullPoint<R>, 4> cr_vertices(const Tetrahedron& t, std::size_t index, const Tolerances& tol) {
  require_four(t.vertices, index, "vertices");
  try {
    auto point = [&](std::size_t i) {
      return NullPoint<R>(ProjPoint2<R>(read_vector<R, 3>(t.vertices[i], index)), tol);
    };
    return {point(0), point(1), point(2), point(3)};
  } catch (const ZeroVector& e) {
    throw GeometryError(index, e.what());
  } catch (const NotNull& e) {
    throw GeometryError(index, e.what());
  }
}

template <class R>
FlagTetra<R> flag_vertices(const Tetrahedron& t, std::size_t index, const Tolerances& tol) {
  require_four(t.vertices, index, "flag points");
  require_four(t.lines, index, "flag lines");
  FlagTetra<R> out;
  try {
    for (std::size_t i = 0; i < 4; ++i) {
      out[i] = Flag<R>(ProjPoint2<R>(read_vector<R, 3>(t.vertices[i], index)),
                       ProjLine2<R>(read_vector<R, 3>(t.lines[i], index)), tol);
    }
  } catch (const ZeroVector& e) {
    throw GeometryError(index, e.what());
  } catch (const NotIncident& e) {
    throw GeometryError(index, e.what());
  }
  return out;
}

template <class R>
Complex<R> shape_parameter(const Tetrahedron& t, std::size_t /*index*/) {
  return t.shape.value<R>();
}

void validate(const Triangulation& t) {
  if (t.tetrahedra.empty()) throw EmptyTriangulation("triangulation has no tetrahedra");
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    const Tetrahedron& tet = t.tetrahedra[i];
    if (tet.coeff == 0) throw GeometryError(i, "coefficient is zero");
    switch (t.geometry) {
      case Geometry::hyperbolic:
        hyperbolic_vertices<double>(tet, i);
        break;
      case Geometry::cr:
        cr_vertices<double>(tet, i);
        break;
      case Geometry::flag:
        flag_vertices<double>(tet, i);
        break;
      case Geometry::shapes:
        shape_parameter<double>(tet, i);
        break;
    }
  }
}

namespace {

template <std::size_t N, class Tag>
std::vector<CText> texts(const Homogeneous<double, N, Tag>& p) {
  std::vector<CText> out;
  for (std::size_t i = 0; i < N; ++i) out.push_back(CText::of(p[i]));
  return out;
}

}  // namespace

Tetrahedron hyperbolic_tetrahedron(const std::array<ProjPoint1<double>, 4>& v, const Rational& coeff) {
  Tetrahedron t;
  t.coeff = coeff;
  for (const auto& p : v) t.vertices.push_back(texts(p));
  return t;
}

Tetrahedron cr_tetrahedron(const std::array<ProjPoint2<double>, 4>& v, const Rational& coeff) {
  Tetrahedron t;
  t.coeff = coeff;
  for (const auto& p : v) t.vertices.push_back(texts(p));
  return t;
}

Tetrahedron flag_tetrahedron(const FlagTetra<double>& f, const Rational& coeff) {
  Tetrahedron t;
  t.coeff = coeff;
  for (const auto& fl : f) {
    t.vertices.push_back(texts(fl.point()));
    t.lines.push_back(texts(fl.line()));
  }
  return t;
}

Tetrahedron shape_tetrahedron(const Complex<double>& z, const Rational& coeff) {
  Tetrahedron t;
  t.coeff = coeff;
  t.shape = CText::of(z);
  return t;
}

#define BLOCH_INSTANTIATE(R)                                                                               \
  template std::array<ProjPoint1<R>, 4> hyperbolic_vertices(const Tetrahedron&, std::size_t);             \
  template std::array<NullPoint<R>, 4> cr_vertices(const Tetrahedron&, std::size_t, const Tolerances&);   \
  template FlagTetra<R> flag_vertices(const Tetrahedron&, std::size_t, const Tolerances&);                 \
  template Complex<R> shape_parameter(const Tetrahedron&, std::size_t);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
