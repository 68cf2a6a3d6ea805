#pragma once

// Dilogarithm, the Bloch-Wigner function D, and volumes of pre-Bloch
// elements (sum of coefficient * D(parameter)).

#include <cstddef>

#include "bloch/numeric.hpp"
#include "bloch/prebloch.hpp"

namespace bloch {

// Principal branch of Li2, absolute error about 2^(8 - working bits).
// li2(1) = pi^2/6.
template <class R>
Complex<R> li2(const Complex<R>& z);

// D(z) = Im Li2(z) + arg(1 - z) ln|z|; exactly 0 on the real line.
// Throws DegenerateParameter within tol.deg of 0 or 1.
template <class R>
R bloch_wigner(const Complex<R>& z, const Tolerances& tol = default_tolerances<R>());

struct VolumeReport {
  double volume = 0;
  std::size_t term_count = 0;
  std::size_t degenerate_terms = 0;
  int precision_bits = 53;
};

// Full-precision sum behind VolumeReport::volume.
template <class R>
R volume_value(const PreBlochElt<R>& e);

template <class R>
VolumeReport volume(const PreBlochElt<R>& e);

// Flag-structure convention: one quarter of the hyperbolic volume sum.
template <class R>
VolumeReport flag_volume(const PreBlochElt<R>& e);

}  // namespace bloch
