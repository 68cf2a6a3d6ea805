#include "bloch/numeric.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ios>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "bloch/errors.hpp"

namespace bloch {

namespace {

// Requested bit count of the innermost PrecisionScope, 0 outside any scope.
int g_requested_bits = 0;

unsigned digits10_for_bits(int bits) {
  // Boost maps digits10 d to 1000 d / 301 + 2 bits; pick the smallest d that
  // reaches `bits`.
  unsigned d = 1;
  while (static_cast<int>(mp::detail::digits10_2_2(d)) < bits) ++d;
  return d;
}

}  // namespace

PrecisionScope::PrecisionScope(int bits) : saved_digits10_(Mp::default_precision()) {
  if (bits < 2) throw UsageError("precision must be at least 2 bits");
  Mp::default_precision(digits10_for_bits(bits));
  saved_bits_ = g_requested_bits;
  g_requested_bits = bits;
}

PrecisionScope::~PrecisionScope() {
  Mp::default_precision(saved_digits10_);
  g_requested_bits = saved_bits_;
}

template <>
int working_bits<Mp>() {
  if (g_requested_bits > 0) return g_requested_bits;
  return static_cast<int>(mp::detail::digits10_2_2(Mp::default_precision()));
}

template <>
Mp pi<Mp>() {
  return boost::math::constants::pi<Mp>();
}

template <>
double from_string<double>(const std::string& text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a decimal number: '" + text + "'");
  }
  if (!std::isfinite(v)) throw ParseError("not a finite number: '" + text + "'");
  return v;
}

template <>
Mp from_string<Mp>(const std::string& text) {
  // Validate with the binary64 grammar first; MPFR accepts a looser syntax.
  (void)from_string<double>(text);
  return Mp(text);
}

std::string to_decimal(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return std::string(buf.data(), ptr);
}

std::string to_decimal(const Mp& x) {
  return x.str(0, std::ios_base::scientific);
}

std::string to_string(const Rational& q) {
  return q.str();
}

Rational parse_rational(const std::string& raw) {
  std::string text = raw;
  if (text.empty()) throw ParseError("empty rational");
  auto all_digits = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  // GMP reads a leading 0 as octal.
  auto decimal = [](const std::string& s) {
    const bool neg = !s.empty() && s[0] == '-';
    std::size_t i = neg ? 1 : 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    const Integer n(s.substr(i));
    return neg ? Integer(-n) : n;
  };

  if (auto e = text.find_first_of("eE"); e != std::string::npos && text.find('/') == std::string::npos) {
    const std::string expo = text.substr(e + 1);
    if (!all_digits(expo, true) || expo.size() > 6) throw ParseError("malformed exponent in '" + raw + "'");
    const long k = std::stol(expo);
    Rational q = parse_rational(text.substr(0, e));
    Integer p = 1;
    for (long i = 0; i < std::labs(k); ++i) p *= 10;
    return k >= 0 ? Rational(q * Rational(p)) : Rational(q / Rational(p));
  }
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num, true) || !all_digits(den, false)) {
      throw ParseError("malformed rational '" + raw + "'");
    }
    const Integer d = decimal(den);
    if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
    return Rational(decimal(strip_plus(num)), d);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string digits = strip_plus(neg ? whole.substr(1) : whole);
    if (digits.empty()) digits = "0";
    if (!all_digits(digits, false) || (!frac.empty() && !all_digits(frac, false))) {
      throw ParseError("malformed decimal coefficient '" + raw + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer n = decimal(digits + frac);
    Rational q(n, scale);
    return neg ? Rational(-q) : q;
  }
  if (!all_digits(text, true)) throw ParseError("malformed rational '" + raw + "'");
  return Rational(decimal(strip_plus(text)));
}

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace bloch
