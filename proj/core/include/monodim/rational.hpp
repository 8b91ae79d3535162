#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "monodim/errors.hpp"

namespace monodim {

using Rational = boost::rational<long long>;

/// Gaussian rational a + b*i. All algebraic identity checks in the Clifford
/// module run over this field so that "equals" means equals, not "close".
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(long long n) : re(n) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re, Rational im = Rational(0)) : re(re), im(im) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  bool is_zero() const { return re == Rational(0) && im == Rational(0); }
  bool is_real() const { return im == Rational(0); }

  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == Rational(0)) throw internal_error("GaussRat: division by zero");
    GaussRat c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// i^e for e >= 0.
inline GaussRat i_pow(long long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat::i();
    case 2: return GaussRat(-1);
    default: return -GaussRat::i();
  }
}

std::string to_string(const Rational& r);
std::string to_string(const GaussRat& z);

}  // namespace monodim
