#pragma once

// Exact scalars: GMP rationals and complex rationals re + im*i.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yangian {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Unsigned "p" or "p/q".
inline Rational parse_unsigned_rational(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw Error("malformed rational literal '" + std::string(whole) + "'");
  Integer n(std::string(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(whole) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace detail

inline Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q = detail::parse_unsigned_rational(body, s);
  return neg ? Rational(-q) : q;
}

/// Complex rational re + im*i. Spectral parameters live here.
struct CRational {
  Rational re;
  Rational im;

  CRational() = default;
  CRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by intent
  CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CRational(long r) : re(r) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  CRational& operator+=(const CRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRational& operator-=(const CRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CRational& operator*=(const CRational& o) {
    if (is_real() && o.is_real()) {
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  CRational& operator/=(const CRational& o) {
    if (o.is_zero()) throw Error("division by zero");
    Rational norm = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
  friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
  friend CRational operator-(const CRational& a) { return CRational(Rational(-a.re), Rational(-a.im)); }

  friend bool operator==(const CRational& a, const CRational& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

inline CRational pow(const CRational& base, unsigned k) {
  CRational r(1);
  for (unsigned i = 0; i < k; ++i) r *= base;
  return r;
}

/// Orders by real part descending, then imaginary part descending.
inline bool real_part_greater(const CRational& a, const CRational& b) {
  if (a.re != b.re) return a.re > b.re;
  return a.im > b.im;
}

/// Lexicographic (re, im); used only for canonical multiset storage.
inline bool lex_less(const CRational& a, const CRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

/// "3/2", "1-1/2i", "2i". The imaginary coefficient is always written out.
inline std::string to_string(const CRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im = to_string(z.im) + "i";
  if (sgn(z.re) == 0) return im;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

inline std::ostream& operator<<(std::ostream& os, const CRational& z) { return os << to_string(z); }

/// Accepts "re", "re+imi", "re-imi", "imi", "i", "-i", "1/2-i". Whitespace is not allowed.
inline CRational parse_complex(std::string_view s) {
  if (s.empty()) throw Error("empty complex literal");
  if (s.back() != 'i') return CRational(parse_rational(s));

  std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return CRational(std::move(re), std::move(im));
}

}  // namespace yangian
