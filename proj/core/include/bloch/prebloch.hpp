#pragma once

// Pre-Bloch elements: rational combinations of cross-ratio parameters, each
// stored at a canonical representative of its six-element orbit. Chains of
// CP^1 points map into them through the cross-ratio.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bloch/chain.hpp"
#include "bloch/numeric.hpp"
#include "bloch/projective.hpp"

namespace bloch {

template <class R>
struct CanonicalParam {
  Complex<R> value;
  int sign = 1;
};

// Canonical representative of the orbit of z under z -> 1/(1-z) (even) and
// z -> 1/z (odd, sign -1). For non-real z: move to the upper half plane by
// z -> 1/z first if needed, then take the lexicographically least (Re, Im)
// of {z, 1/(1-z), (z-1)/z}. For real z: the even-orbit member in (0,1).
// Values with |Im z| <= tol.deg * |z| count as real.
//
// Throws DegenerateParameter when z is within tol.deg of 0 or 1.
template <class R>
CanonicalParam<R> canonical_cross_ratio(const Complex<R>& z, const Tolerances& tol = default_tolerances<R>());

template <class R>
class PreBlochElt {
 public:
  struct Term {
    Complex<R> param;
    Rational coeff;
  };

  explicit PreBlochElt(Tolerances tol = default_tolerances<R>()) : tol_(tol) {}

  // Canonicalizes z and merges it (coefficient times orbit sign).
  void add(const Complex<R>& z, const Rational& coeff);
  // z must already be canonical.
  void add_canonical(const Complex<R>& z, const Rational& coeff);
  void add_degenerate(std::size_t n = 1) { degenerate_ += n; }

  // Sorted by (Re, Im) of the parameter; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t degenerate_count() const { return degenerate_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Tolerances& tolerances() const { return tol_; }

  PreBlochElt& operator+=(const PreBlochElt& o);
  PreBlochElt& operator-=(const PreBlochElt& o);
  PreBlochElt& operator*=(const Rational& s);
  friend PreBlochElt operator+(PreBlochElt a, const PreBlochElt& b) { return a += b; }
  friend PreBlochElt operator-(PreBlochElt a, const PreBlochElt& b) { return a -= b; }
  friend PreBlochElt operator*(const Rational& s, PreBlochElt a) { return a *= s; }

 private:
  Tolerances tol_;
  std::vector<Term> terms_;
  std::size_t degenerate_ = 0;
};

// Same keys (within param_tol in both coordinates) with identical
// coefficients. Degeneracy counters are ignored.
template <class R>
bool approx_equal(const PreBlochElt<R>& a, const PreBlochElt<R>& b, double param_tol = 1e-9);

// Cross-ratio of each 4-tuple, canonicalized; degenerate tuples are counted
// and dropped. Throws UsageError unless the chain has degree 3 (or is empty).
template <class R>
PreBlochElt<R> to_prebloch(const Chain<ProjPoint1<R>>& c, const Tolerances& tol = default_tolerances<R>());

// (c0, g1 c0, g1 g2 c0, ...) with the cusp appended when given. Orbit points
// within tol.deg of an earlier one are identified with it, so repeats vanish.
template <class R>
Chain<ProjPoint1<R>> ev_simplex(const std::vector<Mat2<R>>& gens, const ProjPoint1<R>& c0,
                                const std::optional<ProjPoint1<R>>& cusp = std::nullopt,
                                const Tolerances& tol = default_tolerances<R>());

// to_prebloch of the boundary of (t0, ..., t4).
template <class R>
PreBlochElt<R> five_term(const std::array<ProjPoint1<R>, 5>& pts, const Tolerances& tol = default_tolerances<R>());

// Chain of the alternating faces of a 5-tuple as a list of 4-tuples with
// coefficients +-1 (face i omits vertex i). Shared by the boundary checks of
// every geometry.
template <class P>
std::vector<std::pair<std::array<P, 4>, int>> five_faces(const std::array<P, 5>& pts) {
  std::vector<std::pair<std::array<P, 4>, int>> out;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<P, 4> face;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j != i) face[k++] = pts[j];
    }
    out.emplace_back(face, i % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace bloch
