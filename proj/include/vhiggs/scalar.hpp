#pragma once

// Exact scalar types: rationals, the quadratic extension Q(sqrt c), and
// Gaussian rationals Q(i) used by the exact point model.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vhiggs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error type thrown by every module for invalid input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or a decimal such as "-1.25"; the result is reduced.
Rational parse_rational(std::string_view text);

/// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& q);

bool is_rational_square(const Rational& q);

/// Square root of a rational square; throws otherwise.
Rational rational_sqrt(const Rational& q);

/// Writes q = s^2 * k with k a squarefree integer (sign kept in k).
/// Returns {s, k}. Uses trial division, fine for the sizes met here.
std::pair<Rational, Integer> split_square(const Rational& q);

/// Element u + v*sqrt(radicand) of Q(sqrt c).
///
/// Elements with v == 0 are plain rationals and combine with any radicand.
/// Mixing two different radicands throws. The radicand is kept as a
/// squarefree integer different from 1 so that the norm u^2 - c v^2 of a
/// nonzero element never vanishes.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(int v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(Rational v) : rational_(std::move(v)) {}  // NOLINT
  QuadNumber(Rational u, Rational v, Integer radicand);

  /// sqrt(q) as an element of Q(sqrt q) (or of Q when q is a square).
  static QuadNumber sqrt_of(const Rational& q);

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  const Integer& radicand() const { return radicand_; }
  bool is_rational() const { return surd_ == 0; }

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator*(QuadNumber a, const QuadNumber& b) { return a *= b; }
  friend QuadNumber operator/(QuadNumber a, const QuadNumber& b) { return a /= b; }
  QuadNumber operator-() const;
  friend bool operator==(const QuadNumber& a, const QuadNumber& b);

  QuadNumber conjugate() const;
  Rational norm() const;
  std::string str() const;

 private:
  const Integer& common_radicand(const QuadNumber& o) const;

  Rational rational_;
  Rational surd_;
  Integer radicand_ = 0;
};

/// Exact complex number with rational real and imaginary parts.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw Error("division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussRational conj() const { return {re, -im}; }
};

}  // namespace vhiggs
