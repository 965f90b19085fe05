#pragma once

// Dense univariate polynomials over an exact field.
//
// Coefficients are stored lowest degree first with no trailing zeros, so the
// zero polynomial is the empty list and structural equality is equality of
// polynomials. F must be a field type constructible from int with the usual
// arithmetic operators and ==; Rational, QuadNumber and GaussRational qualify.

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "vhiggs/scalar.hpp"

namespace vhiggs {

/// Degree of the zero polynomial. Stands for minus infinity.
inline constexpr int kZeroDegree = -1;

/// Order of vanishing, with a sentinel for the zero polynomial.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

template <class F>
class BasicPoly {
 public:
  using Scalar = F;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit BasicPoly(int value) : c_{F(value)} { trim(); }

  static BasicPoly constant(F value) { return BasicPoly(std::vector<F>{std::move(value)}); }

  /// coeff * z^k
  static BasicPoly monomial(F coeff, int k) {
    std::vector<F> c(static_cast<size_t>(k) + 1, F(0));
    c.back() = std::move(coeff);
    return BasicPoly(std::move(c));
  }

  static BasicPoly identity() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<size_t>(i)];
  }
  const F& leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Lowest index with nonzero coefficient, i.e. the order of vanishing at 0.
  int low_order() const {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!(c_[i] == F(0))) return static_cast<int>(i);
    }
    return kInfiniteOrder;
  }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Substitutes another polynomial for the variable.
  BasicPoly compose(const BasicPoly& inner) const {
    BasicPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  BasicPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = F(static_cast<int>(i)) * c_[i];
    return BasicPoly(std::move(d));
  }

  BasicPoly monic() const {
    if (is_zero()) return {};
    F inv = F(1) / leading();
    return *this * inv;
  }

  /// Coefficient list reversed inside a window of `length` slots.
  BasicPoly reversed(int length) const {
    if (degree() >= length) throw Error("reversal window shorter than the polynomial");
    std::vector<F> r(static_cast<size_t>(length), F(0));
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(length) - 1 - i] = c_[i];
    return BasicPoly(std::move(r));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& o) {
    *this = *this * o;
    return *this;
  }
  BasicPoly& operator*=(const F& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(BasicPoly a, const F& s) { return a *= s; }
  friend BasicPoly operator*(const F& s, BasicPoly a) { return a *= s; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F(0)) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPoly(std::move(r));
  }
  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

using Poly = BasicPoly<Rational>;
using QuadPoly = BasicPoly<QuadNumber>;

template <class F>
BasicPoly<F> pow(const BasicPoly<F>& p, int k) {
  BasicPoly<F> r = BasicPoly<F>::constant(F(1));
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

/// Quotient and remainder of Euclidean division; throws on division by zero.
template <class F>
std::pair<BasicPoly<F>, BasicPoly<F>> divmod(const BasicPoly<F>& a, const BasicPoly<F>& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {BasicPoly<F>(), a};
  std::vector<F> quot(static_cast<size_t>(da - db) + 1, F(0));
  const F inv = F(1) / b.leading();
  for (int k = da - db; k >= 0; --k) {
    F q = rem[static_cast<size_t>(k + db)] * inv;
    if (q == F(0)) continue;
    quot[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<size_t>(k + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
    }
  }
  rem.resize(static_cast<size_t>(db));
  return {BasicPoly<F>(std::move(quot)), BasicPoly<F>(std::move(rem))};
}

template <class F>
BasicPoly<F> operator%(const BasicPoly<F>& a, const BasicPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
bool divides(const BasicPoly<F>& d, const BasicPoly<F>& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

/// a / b, which must divide exactly.
template <class F>
BasicPoly<F> exact_div(const BasicPoly<F>& a, const BasicPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
BasicPoly<F> gcd(BasicPoly<F> a, BasicPoly<F> b) {
  while (!b.is_zero()) {
    BasicPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns {g, s, t} with s*a + t*b = g, g monic (or zero).
template <class F>
struct Bezout {
  BasicPoly<F> g, s, t;
};

template <class F>
Bezout<F> extended_gcd(const BasicPoly<F>& a, const BasicPoly<F>& b) {
  using P = BasicPoly<F>;
  P r0 = a, r1 = b;
  P s0 = P::constant(F(1)), s1;
  P t0, t1 = P::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {P(), P(), P()};
  F inv = F(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Largest v with prime^v | p; kInfiniteOrder for p = 0.
template <class F>
int valuation(const BasicPoly<F>& p, const BasicPoly<F>& prime) {
  if (p.is_zero()) return kInfiniteOrder;
  if (prime.degree() < 1) throw Error("valuation at a constant");
  int v = 0;
  BasicPoly<F> cur = p;
  while (true) {
    auto [q, r] = divmod(cur, prime);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

/// Human-readable form in the variable `var`, highest degree first.
std::string to_string(const Poly& p, char var = 'z');

/// Same, for polynomials over Q(sqrt c); the surd is written sqrt(c).
std::string to_string(const QuadPoly& p, char var = 'z');

/// Embeds Q[z] into Q(sqrt c)[z].
QuadPoly to_quad(const Poly& p);

/// Poly with integer coefficients from a list of ints.
Poly poly_of(std::initializer_list<long> coeffs);

/// Multiplies by the lcm of denominators and divides by the content,
/// returning the primitive integer polynomial with positive leading
/// coefficient, together with the rational factor: p = factor * result.
std::pair<Rational, std::vector<Integer>> primitive_part(const Poly& p);

}  // namespace vhiggs
