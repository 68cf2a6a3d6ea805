#pragma once

// Parsed input cycles: geometry-tagged tetrahedra with rational
// coefficients. Real numbers are kept as the decimal text they were given in
// and read at whatever precision a pipeline runs at.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bloch/numeric.hpp"
#include "bloch/projective.hpp"
#include "bloch/structures.hpp"

namespace bloch {

enum class Geometry { hyperbolic, cr, flag, shapes };

std::string to_string(Geometry g);
Geometry parse_geometry(const std::string& s);  // SchemaError

// Complex number as decimal text.
struct CText {
  std::string re = "0";
  std::string im = "0";

  template <class R>
  Complex<R> value() const {
    return {from_string<R>(re), from_string<R>(im)};
  }
  static CText of(double re, double im = 0) { return {to_decimal(re), to_decimal(im)}; }
  template <class R>
  static CText of(const Complex<R>& z) {
    return {to_decimal(z.re), to_decimal(z.im)};
  }
  friend bool operator==(const CText&, const CText&) = default;
};

struct Tetrahedron {
  Rational coeff{1};
  // hyperbolic: 4 homogeneous pairs; cr: 4 triples; flag: 4 point triples.
  std::vector<std::vector<CText>> vertices;
  // flag only: the 4 line triples.
  std::vector<std::vector<CText>> lines;
  // shapes only.
  CText shape;

  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

struct Triangulation {
  Geometry geometry = Geometry::hyperbolic;
  std::vector<Tetrahedron> tetrahedra;
  nlohmann::json metadata;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.geometry == b.geometry && a.tetrahedra == b.tetrahedra && a.metadata == b.metadata;
  }
};

// Typed views of one tetrahedron. Violations of the geometry's invariant
// (zero vectors, points off the CR sphere, non-incident flags) throw
// GeometryError carrying `index`.
template <class R>
std::array<ProjPoint1<R>, 4> hyperbolic_vertices(const Tetrahedron& t, std::size_t index);
template <class R>
std::array<NullPoint<R>, 4> cr_vertices(const Tetrahedron& t, std::size_t index,
                                        const Tolerances& tol = default_tolerances<R>());
template <class R>
FlagTetra<R> flag_vertices(const Tetrahedron& t, std::size_t index, const Tolerances& tol = default_tolerances<R>());
template <class R>
Complex<R> shape_parameter(const Tetrahedron& t, std::size_t index);

// Structural and geometric checks at binary64 (EmptyTriangulation,
// SchemaError, GeometryError).
void validate(const Triangulation& t);

// Builders used by tests, checks and benchmarks.
Tetrahedron hyperbolic_tetrahedron(const std::array<ProjPoint1<double>, 4>& v, const Rational& coeff = 1);
Tetrahedron cr_tetrahedron(const std::array<ProjPoint2<double>, 4>& v, const Rational& coeff = 1);
Tetrahedron flag_tetrahedron(const FlagTetra<double>& f, const Rational& coeff = 1);
Tetrahedron shape_tetrahedron(const Complex<double>& z, const Rational& coeff = 1);

}  // namespace bloch
