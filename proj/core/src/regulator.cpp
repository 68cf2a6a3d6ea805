#include "bloch/regulator.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace bloch {

namespace {

// B_{2k} / (2k+1)! for k = 1..n, exact. Bernoulli numbers come from the
// tangent numbers T_k (integer recurrence):
//   B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> bernoulli_coefficients(std::size_t n) {
  std::vector<Integer> t(n + 1);
  if (n >= 1) t[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) t[k] = Integer(static_cast<unsigned long>(k - 1)) * t[k - 1];
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = k; j <= n; ++j)
      t[j] = Integer(static_cast<unsigned long>(j - k)) * t[j - 1] + Integer(static_cast<unsigned long>(j - k + 2)) * t[j];
  std::vector<Rational> out;
  out.reserve(n);
  Integer fact = 1;  // (2k+1)!
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= static_cast<unsigned long>(2 * k);
    fact *= static_cast<unsigned long>(2 * k + 1);
    const Integer four_k = Integer(1) << static_cast<unsigned>(2 * k);
    Rational b(Integer(static_cast<unsigned long>(2 * k)) * t[k], four_k * (four_k - 1));
    if (k % 2 == 0) b = -b;
    out.push_back(b / Rational(fact));
  }
  return out;
}

template <class R>
R rational_to(const Rational& q) {
  if constexpr (std::is_same_v<R, double>) {
    return to_double(q);
  } else {
    return Mp(mp::numerator(q)) / Mp(mp::denominator(q));
  }
}

// Coefficient tables per precision; grown on demand.
template <class R>
std::vector<R> coefficient_table(std::size_t n) {
  static std::mutex lock;
  static std::map<int, std::vector<R>> tables;
  std::lock_guard<std::mutex> guard(lock);
  auto& table = tables[working_bits<R>()];
  if (table.size() < n) {
    const auto exact = bernoulli_coefficients(n);
    table.clear();
    for (const auto& q : exact) table.push_back(rational_to<R>(q));
  }
  return table;
}

template <class R>
R cutoff() {
  return scale2(R(1), -working_bits<R>() - 8);
}

// sum z^k / k^2, for |z| <= 1/2.
template <class R>
Complex<R> li2_series(const Complex<R>& z) {
  const R eps = cutoff<R>();
  Complex<R> sum;
  Complex<R> power = z;
  for (long k = 1; k < 100000; ++k) {
    const R k2 = R(k) * R(k);
    const Complex<R> term(power.re / k2, power.im / k2);
    sum += term;
    if (norm(power) <= eps * eps) break;
    power *= z;
  }
  return sum;
}

// Li2(z) = u - u^2/4 + sum_k B_2k/(2k+1)! u^(2k+1), u = -log(1 - z).
// Converges fast for |u| < 2 pi; used on |z| <= 1, Re z <= 1/2.
template <class R>
Complex<R> li2_bernoulli(const Complex<R>& z) {
  const Complex<R> one(R(1));
  const Complex<R> u = -log(one - z);
  const Complex<R> u2 = u * u;
  Complex<R> sum = u - R(0.25) * u2;
  Complex<R> power = u * u2;
  const R eps = cutoff<R>();
  std::vector<R> c = coefficient_table<R>(32);
  for (std::size_t k = 1;; ++k) {
    if (k > c.size()) c = coefficient_table<R>(2 * c.size());
    const Complex<R> term = c[k - 1] * power;
    sum += term;
    if (abs(term) <= eps && k > 1) break;
    if (k > 4096) break;
    power *= u2;
  }
  return sum;
}

// |z| <= 1.
template <class R>
Complex<R> li2_unit(const Complex<R>& z) {
  const Complex<R> one(R(1));
  if (norm(z) <= R(0.25)) return li2_series(z);
  if (z.re > R(0.5)) {
    // Reflection: Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z).
    const Complex<R> w = one - z;
    const R p = pi<R>();
    const Complex<R> base = norm(w) <= R(0.25) ? li2_series(w) : li2_bernoulli(w);
    return Complex<R>(p * p / R(6)) - log(z) * log(w) - base;
  }
  return li2_bernoulli(z);
}

}  // namespace

template <class R>
Complex<R> li2(const Complex<R>& z) {
  const Complex<R> one(R(1));
  if (z == Complex<R>()) return Complex<R>();
  if (z == one) {
    const R p = pi<R>();
    return Complex<R>(p * p / R(6));
  }
  if (norm(z) <= R(1)) return li2_unit(z);
  // Inversion: Li2(z) = -pi^2/6 - log(-z)^2/2 - Li2(1/z).
  const R p = pi<R>();
  const Complex<R> l = log(-z);
  return Complex<R>(-p * p / R(6)) - R(0.5) * (l * l) - li2_unit(one / z);
}

template <class R>
R bloch_wigner(const Complex<R>& z, const Tolerances& tol) {
  using std::log;
  const R eps = tol.deg_tol<R>();
  const Complex<R> one(R(1));
  if (abs(z) <= eps || abs(z - one) <= eps) throw DegenerateParameter("D evaluated at 0 or 1");
  if (z.im == 0) return R(0);
  // D(z) = -D(1/z) keeps |z| <= 1, where the two summands do not cancel.
  if (norm(z) > R(1)) return -bloch_wigner(one / z, tol);
  return li2(z).im + arg(one - z) * log(abs(z));
}

template <class R>
R volume_value(const PreBlochElt<R>& e) {
  R sum(0);
  for (const auto& t : e.terms()) sum += rational_to<R>(t.coeff) * bloch_wigner(t.param, e.tolerances());
  return sum;
}

template <class R>
VolumeReport volume(const PreBlochElt<R>& e) {
  VolumeReport r;
  r.volume = to_double(volume_value(e));
  r.term_count = e.size();
  r.degenerate_terms = e.degenerate_count();
  r.precision_bits = working_bits<R>();
  return r;
}

template <class R>
VolumeReport flag_volume(const PreBlochElt<R>& e) {
  VolumeReport r = volume(e);
  r.volume = to_double(volume_value(e) / R(4));
  return r;
}

#define BLOCH_INSTANTIATE(R)                                        \
  template Complex<R> li2(const Complex<R>&);                      \
  template R bloch_wigner(const Complex<R>&, const Tolerances&);   \
  template R volume_value(const PreBlochElt<R>&);                  \
  template VolumeReport volume(const PreBlochElt<R>&);             \
  template VolumeReport flag_volume(const PreBlochElt<R>&);

BLOCH_INSTANTIATE(double)
BLOCH_INSTANTIATE(Mp)

#undef BLOCH_INSTANTIATE

}  // namespace bloch
