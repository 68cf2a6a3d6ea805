#pragma once

// Scalar types shared by every module: binary64 or MPFR reals, a small
// complex type over either, exact GMP rationals for coefficients, and the
// tolerance set that scales with the working precision.

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace bloch {

namespace mp = boost::multiprecision;

// Runtime-precision software float. The precision is process-global (see
// PrecisionScope); expression templates are off so `auto` is safe.
using Mp = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class R>
inline constexpr bool is_real_v = std::is_same_v<R, double> || std::is_same_v<R, Mp>;

// Sets the default MPFR precision for the lifetime of the object. Values
// created inside the scope carry (at least) `bits` of mantissa.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
  int saved_bits_ = 0;
};

// Mantissa bits of the working type: 53 for double, the current default
// for Mp.
template <class R>
int working_bits();
template <>
inline int working_bits<double>() { return 53; }
template <>
int working_bits<Mp>();

template <class R>
R pi();
template <>
inline double pi<double>() { return 3.14159265358979323846; }
template <>
Mp pi<Mp>();

inline double to_double(double x) { return x; }
inline double to_double(const Mp& x) { return x.convert_to<double>(); }
inline long double to_long_double(double x) { return x; }
inline long double to_long_double(const Mp& x) { return x.convert_to<long double>(); }

// x * 2^e without going through a (possibly underflowing) double.
inline double scale2(double x, int e) { return std::ldexp(x, e); }
inline Mp scale2(const Mp& x, int e) { return mp::ldexp(x, e); }

template <class R>
R from_string(const std::string& text);

// Shortest decimal string that reads back to the same value (double), or a
// full-precision scientific string (Mp).
std::string to_decimal(double x);
std::string to_decimal(const Mp& x);

std::string to_string(const Rational& q);
// Accepts "p", "p/q" and plain decimals ("0.25"), all read exactly.
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);

template <class R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(R r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const R& s, const Complex& a) { return {s * a.re, s * a.im}; }
  // Smith's algorithm: avoids overflow in |b|^2.
  friend Complex operator/(const Complex& a, const Complex& b) {
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      R r = b.im / b.re;
      R d = b.re + b.im * r;
      return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    R r = b.re / b.im;
    R d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
Complex<R> conj(const Complex<R>& z) { return {z.re, -z.im}; }

template <class R>
R norm(const Complex<R>& z) { return z.re * z.re + z.im * z.im; }

template <class R>
R abs(const Complex<R>& z) {
  using std::abs;
  using std::sqrt;
  R a = abs(z.re), b = abs(z.im);
  if (a < b) std::swap(a, b);
  if (a == 0) return a;
  R t = b / a;
  return a * sqrt(1 + t * t);
}

template <class R>
R arg(const Complex<R>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

// Principal branch.
template <class R>
Complex<R> log(const Complex<R>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class R>
Complex<R> polar(const R& r, const R& theta) {
  using std::cos;
  using std::sin;
  return {r * cos(theta), r * sin(theta)};
}

// Tolerances in binary64 units. At p > 53 bits every value is scaled by
// 2^(53-p), so the same relative slack is kept at every precision.
struct Tolerances {
  int bits = 53;
  double deg = 1e-12;    // degeneracy (vanishing determinants, parameters at 0/1)
  double inc = 1e-10;    // incidence f.x = 0 and concurrency
  double null = 1e-10;   // |H(p,p)| for points of the CR sphere
  double key = 1e-9;     // merging canonical pre-Bloch parameters
  double admit = 1e-6;   // largest input defect repaired by projection

  template <class R>
  R scaled(double base) const {
    return bits > 53 ? scale2(R(base), 53 - bits) : R(base);
  }
  template <class R> R deg_tol() const { return scaled<R>(deg); }
  template <class R> R inc_tol() const { return scaled<R>(inc); }
  template <class R> R null_tol() const { return scaled<R>(null); }
  template <class R> R key_tol() const { return scaled<R>(key); }
};

// Defaults for the current working precision of R.
template <class R>
Tolerances default_tolerances() {
  Tolerances t;
  t.bits = working_bits<R>();
  return t;
}

}  // namespace bloch
