#include "bloch/prebloch.hpp"

#include <algorithm>

namespace bloch {

namespace {

template <class R>
bool lex_less(const Complex<R>& a, const Complex<R>& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

template <class R>
bool key_close(const Complex<R>& a, const Complex<R>& b, const R& tol) {
  using std::abs;
  using std::max;
  const R scale = max(R(1), max(abs(a.re) + abs(a.im), abs(b.re) + abs(b.im)));
  return abs(a.re - b.re) <= tol * scale && abs(a.im - b.im) <= tol * scale;
}

}  // namespace

template <class R>
CanonicalParam<R> canonical_cross_ratio(const Complex<R>& z_in, const Tolerances& tol) {
  using std::abs;
  const R eps = tol.deg_tol<R>();
  const Complex<R> one(R(1));
  if (abs(z_in) <= eps || abs(z_in - one) <= eps) {
    throw DegenerateParameter("cross-ratio parameter at 0 or 1");
  }
  Complex<R> z = z_in;
  int sign = 1;
  if (abs(z.im) <= eps * abs(z)) {
    // Flat simplex. Even orbit of real z: z, 1/(1-z), (z-1)/z. If z < 0 then
    // 1/(1-z) is in (0,1), if z > 1 then (z-1)/z is.
    const R x = z.re;
    R c;
    if (x < 0) {
      c = R(1) / (R(1) - x);
    } else if (x > 1) {
      c = (x - R(1)) / x;
    } else {
      c = x;
    }
    return {Complex<R>(c), 1};
  }
  if (z.im < 0) {
    z = one / z;
    sign = -1;
  }
  const Complex<R> a = one / (one - z);
  const Complex<R> b = (z - one) / z;
  Complex<R> best = z;
  if (lex_less(a, best)) best = a;
  if (lex_less(b, best)) best = b;
  return {best, sign};
}

template <class R>
void PreBlochElt<R>::add(const Complex<R>& z, const Rational& coeff) {
  if (coeff == 0) return;
  const CanonicalParam<R> c = canonical_cross_ratio(z, tol_);
  add_canonical(c.value, c.sign > 0 ? coeff : Rational(-coeff));
}

template <class R>
void PreBlochElt<R>::add_canonical(const Complex<R>& z, const Rational& coeff) {
  if (coeff == 0) return;
  const R tol = tol_.key_tol<R>();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (key_close(it->param, z, tol)) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), z,
                              [](const Term& t, const Complex<R>& v) { return lex_less(t.param, v); });
  terms_.insert(pos, Term{z, coeff});
}

template <class R>
PreBlochElt<R>& PreBlochElt<R>::operator+=(const PreBlochElt& o) {
  for (const auto& t : o.terms_) add_canonical(t.param, t.coeff);
  degenerate_ += o.degenerate_;
  return *this;
}

template <class R>
PreBlochElt<R>& PreBlochElt<R>::operator-=(const PreBlochElt& o) {
  for (const auto& t : o.terms_) add_canonical(t.param, -t.coeff);
  degenerate_ += o.degenerate_;
  return *this;
}

template <class R>
PreBlochElt<R>& PreBlochElt<R>::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

template <class R>
bool approx_equal(const PreBlochElt<R>& a, const PreBlochElt<R>& b, double param_tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  const R tol(param_tol);
  for (const auto& ta : a.terms()) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& tb = b.terms()[j];
      if (!used[j] && ta.coeff == tb.coeff && key_close(ta.param, tb.param, tol)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <class R>
PreBlochElt<R> to_prebloch(const Chain<ProjPoint1<R>>& c, const Tolerances& tol) {
  if (!c.is_zero() && c.degree() != 3) throw UsageError("to_prebloch needs a chain of 4-tuples");
  PreBlochElt<R> out(tol);
  for (const auto& [t, coeff] : c.terms()) {
    const CrossRatio<R> x = cross_ratio(t[0], t[1], t[2], t[3], tol);
    if (x.is_degenerate()) {
      out.add_degenerate();
      continue;
    }
    out.add(x.value(), coeff);
  }
  return out;
}

template <class R>
Chain<ProjPoint1<R>> ev_simplex(const std::vector<Mat2<R>>& gens, const ProjPoint1<R>& c0,
                                const std::optional<ProjPoint1<R>>& cusp, const Tolerances& tol) {
  using std::abs;
  std::vector<ProjPoint1<R>> pts{c0};
  const R eps = tol.deg_tol<R>();
  auto snap = [&](const ProjPoint1<R>& p) {
    for (const auto& q : pts) {
      if (abs(det2(p, q)) <= eps) return q;
    }
    return p;
  };
  Mat2<R> acc{{{Complex<R>(R(1)), Complex<R>(R(0))}, {Complex<R>(R(0)), Complex<R>(R(1))}}};
  for (const auto& g : gens) {
    acc = mat_mul(acc, g);
    pts.push_back(snap(mobius_act(acc, c0, tol)));
  }
  if (cusp) pts.push_back(snap(*cusp));
  return Chain<ProjPoint1<R>>::simplex(pts);
}

template <class R>
PreBlochElt<R> five_term(const std::array<ProjPoint1<R>, 5>& pts, const Tolerances& tol) {
  const auto simplex = Chain<ProjPoint1<R>>::simplex(Tuple<ProjPoint1<R>>(pts.begin(), pts.end()));
  if (simplex.is_zero()) return PreBlochElt<R>(tol);
  return to_prebloch(boundary(simplex), tol);
}

#define BLOCH_INSTANTIATE(R)                                                                                  \
  template CanonicalParam<R> canonical_cross_ratio(const Complex<R>&, const Tolerances&);                    \
  template class PreBlochElt<R>;                                                                             \
  template bool approx_equal(const PreBlochElt<R>&, const PreBlochElt<R>&, double);                          \
  template PreBlochElt<R> to_prebloch(const Chain<ProjPoint1<R>>&, const Tolerances&);                       \
  template Chain<ProjPoint1<R>> ev_simplex(const std::vector<Mat2<R>>&, const ProjPoint1<R>&,                \
                                           const std::optional<ProjPoint1<R>>&, const Tolerances&);          \
  template PreBlochElt<R> five_term(const std::array<ProjPoint1<R>, 5>&, const Tolerances&);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
