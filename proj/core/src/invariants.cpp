#include "bloch/invariants.hpp"

#include <cmath>

#include "bloch/errors.hpp"
#include "bloch/structures.hpp"

namespace bloch {

namespace {

template <class R>
void add_param(PreBlochElt<R>& e, const Complex<R>& z, const Rational& coeff) {
  try {
    e.add(z, coeff);
  } catch (const DegenerateParameter&) {
    e.add_degenerate();
  }
}

bool hyperbolic_family(Geometry g) { return g == Geometry::hyperbolic || g == Geometry::shapes; }

void require_nonempty(const Triangulation& t) {
  if (t.tetrahedra.empty()) throw EmptyTriangulation("triangulation has no tetrahedra");
}

}  // namespace

template <class R>
PreBlochElt<R> hyperbolic_element(const Triangulation& t, const Tolerances& tol) {
  if (!hyperbolic_family(t.geometry)) {
    throw GeometryMismatch("hyperbolic invariant needs hyperbolic or shapes data, got " + to_string(t.geometry));
  }
  require_nonempty(t);
  PreBlochElt<R> e(tol);
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    const Tetrahedron& tet = t.tetrahedra[i];
    if (t.geometry == Geometry::shapes) {
      add_param(e, shape_parameter<R>(tet, i), tet.coeff);
      continue;
    }
    const auto v = hyperbolic_vertices<R>(tet, i);
    const CrossRatio<R> x = cross_ratio(v[0], v[1], v[2], v[3], tol);
    if (x.is_degenerate()) {
      e.add_degenerate();
    } else {
      add_param(e, x.value(), tet.coeff);
    }
  }
  return e;
}

template <class R>
PreBlochElt<R> fw_element(const Triangulation& t, const Tolerances& tol) {
  if (t.geometry != Geometry::cr) throw GeometryMismatch("FW invariant needs cr data, got " + to_string(t.geometry));
  require_nonempty(t);
  PreBlochElt<R> e(tol);
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    const Tetrahedron& tet = t.tetrahedra[i];
    e += tet.coeff * fw_sum(cr_vertices<R>(tet, i, tol), tol);
  }
  return e;
}

template <class R>
PreBlochElt<R> flag_element(const Triangulation& t, const Tolerances& tol) {
  if (t.geometry != Geometry::flag) {
    throw GeometryMismatch("flag invariant needs flag data, got " + to_string(t.geometry));
  }
  require_nonempty(t);
  PreBlochElt<R> e(tol);
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    const Tetrahedron& tet = t.tetrahedra[i];
    e += tet.coeff * flag_beta(flag_vertices<R>(tet, i, tol), tol);
  }
  return e;
}

template <class R>
PreBlochElt<R> element_of(const Triangulation& t, const Tolerances& tol) {
  switch (t.geometry) {
    case Geometry::hyperbolic:
    case Geometry::shapes:
      return hyperbolic_element<R>(t, tol);
    case Geometry::cr:
      return fw_element<R>(t, tol);
    case Geometry::flag:
      return flag_element<R>(t, tol);
  }
  throw GeometryMismatch("unknown geometry");
}

namespace {

int delta_precision(const InvariantOptions& opts) {
  if (opts.delta_bits < 53) throw UsageError("delta needs at least 53 bits");
  return 4 * opts.delta_bits;
}

template <class R>
std::size_t corrected_vertices(const Triangulation& t) {
  std::size_t n = 0;
  const Tolerances tol = default_tolerances<R>();
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    if (t.geometry == Geometry::cr) {
      for (const auto& p : cr_vertices<R>(t.tetrahedra[i], i, tol)) n += p.corrected() ? 1 : 0;
    } else if (t.geometry == Geometry::flag) {
      for (const auto& f : flag_vertices<R>(t.tetrahedra[i], i, tol)) n += f.corrected() ? 1 : 0;
    }
  }
  return n;
}

template <class R>
InvariantResult<R> assemble(const Triangulation& t, PreBlochElt<R> e, const InvariantOptions& opts) {
  InvariantResult<R> r;
  r.geometry = t.geometry;
  r.volume = t.geometry == Geometry::flag ? flag_volume(e) : volume(e);
  if (e.degenerate_count() > 0) {
    r.warnings.push_back(std::to_string(e.degenerate_count()) + " degenerate terms dropped");
  }
  if (t.geometry == Geometry::cr || t.geometry == Geometry::flag) {
    const std::size_t fixed = corrected_vertices<R>(t);
    if (fixed > 0) {
      r.warnings.push_back(std::to_string(fixed) +
                           (t.geometry == Geometry::cr ? " vertices projected onto the CR sphere"
                                                       : " flag lines projected to incidence"));
    }
  }
  if (opts.compute_delta) {
    r.delta = delta_of(t, opts);
  }
  r.element = std::move(e);
  return r;
}

}  // namespace

WedgeVerdict delta_of(const Triangulation& t, const InvariantOptions& opts) {
  PrecisionScope scope(delta_precision(opts));
  const PreBlochElt<Mp> e = element_of<Mp>(t, working_tolerances<Mp>(opts.tolerances));
  return delta_test(e, opts.delta_bits, opts.wedge_tol);
}

WedgeVerdict delta_of_difference(const Triangulation& a, const Triangulation& b, const InvariantOptions& opts) {
  PrecisionScope scope(delta_precision(opts));
  const Tolerances tol = working_tolerances<Mp>(opts.tolerances);
  const PreBlochElt<Mp> e = element_of<Mp>(a, tol) - element_of<Mp>(b, tol);
  return delta_test(e, opts.delta_bits, opts.wedge_tol);
}

template <class R>
InvariantResult<R> hyperbolic_invariant(const Triangulation& t, const InvariantOptions& opts) {
  return assemble(t, hyperbolic_element<R>(t, working_tolerances<R>(opts.tolerances)), opts);
}

template <class R>
InvariantResult<R> fw_invariant(const Triangulation& t, const InvariantOptions& opts) {
  return assemble(t, fw_element<R>(t, working_tolerances<R>(opts.tolerances)), opts);
}

template <class R>
InvariantResult<R> flag_invariant(const Triangulation& t, const InvariantOptions& opts) {
  return assemble(t, flag_element<R>(t, working_tolerances<R>(opts.tolerances)), opts);
}

template <class R>
InvariantResult<R> invariant(const Triangulation& t, const InvariantOptions& opts) {
  return assemble(t, element_of<R>(t, working_tolerances<R>(opts.tolerances)), opts);
}

Triangulation lift_by_h(const Triangulation& t) {
  require_nonempty(t);
  if (t.geometry != Geometry::hyperbolic) {
    throw GeometryMismatch("lift by h needs hyperbolic vertex data, got " + to_string(t.geometry));
  }
  Triangulation out;
  out.geometry = Geometry::flag;
  out.metadata = t.metadata;
  for (std::size_t i = 0; i < t.tetrahedra.size(); ++i) {
    const auto v = hyperbolic_vertices<double>(t.tetrahedra[i], i);
    const FlagTetra<double> f{h_map(v[0]), h_map(v[1]), h_map(v[2]), h_map(v[3])};
    out.tetrahedra.push_back(flag_tetrahedron(f, t.tetrahedra[i].coeff));
  }
  return out;
}

template <class R>
ComparisonReport<R> compare(const Triangulation& a, const Triangulation& b, const InvariantOptions& opts) {
  const bool same = hyperbolic_family(a.geometry) ? hyperbolic_family(b.geometry) : a.geometry == b.geometry;
  if (!same) {
    throw GeometryMismatch("cannot compare " + to_string(a.geometry) + " with " + to_string(b.geometry));
  }
  const Tolerances tol = working_tolerances<R>(opts.tolerances);
  ComparisonReport<R> r;
  r.geometry = a.geometry;
  r.difference = element_of<R>(a, tol) - element_of<R>(b, tol);
  r.volume = a.geometry == Geometry::flag ? flag_volume(r.difference) : volume(r.difference);
  if (r.difference.degenerate_count() > 0) {
    r.warnings.push_back(std::to_string(r.difference.degenerate_count()) + " degenerate terms dropped");
  }
  const bool volume_ok = std::fabs(r.volume.volume) <= opts.volume_tol;
  if (opts.compute_delta) r.delta = delta_of_difference(a, b, opts);
  if (!volume_ok) {
    r.verdict = "different";
  } else if (!r.delta || r.delta->status == WedgeStatus::zero) {
    r.equal = true;
    r.verdict = "equal (necessary conditions)";
  } else if (r.delta->status == WedgeStatus::nonzero) {
    r.verdict = "different";
  } else {
    r.verdict = "inconclusive";
  }
  return r;
}

#define BLOCH_INSTANTIATE(R)                                                                              \
  template PreBlochElt<R> hyperbolic_element(const Triangulation&, const Tolerances&);                   \
  template PreBlochElt<R> fw_element(const Triangulation&, const Tolerances&);                           \
  template PreBlochElt<R> flag_element(const Triangulation&, const Tolerances&);                         \
  template PreBlochElt<R> element_of(const Triangulation&, const Tolerances&);                           \
  template InvariantResult<R> hyperbolic_invariant(const Triangulation&, const InvariantOptions&);       \
  template InvariantResult<R> fw_invariant(const Triangulation&, const InvariantOptions&);               \
  template InvariantResult<R> flag_invariant(const Triangulation&, const InvariantOptions&);             \
  template InvariantResult<R> invariant(const Triangulation&, const InvariantOptions&);                  \
  template ComparisonReport<R> compare(const Triangulation&, const Triangulation&, const InvariantOptions&);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
