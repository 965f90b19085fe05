#include "vhiggs/scalar.hpp"

#include <cctype>

namespace vhiggs {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw Error("malformed rational: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    Integer num;
    if (num.set_str(digits, 10) != 0) throw Error("malformed rational: " + s);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (s.front() == '+') s.erase(0, 1);
  if (q.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
  if (q.get_den() == 0) throw Error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw Error("not a rational square: " + to_string(q));
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

std::pair<Rational, Integer> split_square(const Rational& q) {
  if (q == 0) return {Rational(0), Integer(0)};
  // q = n/d = (n*d)/d^2
  Integer m = q.get_num() * q.get_den();
  Integer sign = m < 0 ? -1 : 1;
  m = abs(m);
  Integer square_root = 1;
  Integer core = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    unsigned count = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) square_root *= p;
    if (count % 2 == 1) core *= p;
  }
  core *= m;
  Rational s(square_root, q.get_den());
  s.canonicalize();
  return {s, sign * core};
}

QuadNumber::QuadNumber(Rational u, Rational v, Integer radicand)
    : rational_(std::move(u)), surd_(std::move(v)) {
  if (radicand == 0) surd_ = 0;
  if (surd_ == 0) return;
  auto [s, k] = split_square(Rational(radicand));
  if (k == 1) {
    rational_ += surd_ * s;
    surd_ = 0;
    return;
  }
  surd_ *= s;
  radicand_ = k;
}

QuadNumber QuadNumber::sqrt_of(const Rational& q) {
  if (q == 0) return QuadNumber();
  auto [s, k] = split_square(q);
  if (k == 1) return QuadNumber(s);
  return QuadNumber(0, s, k);
}

const Integer& QuadNumber::common_radicand(const QuadNumber& o) const {
  if (surd_ == 0) return o.radicand_;
  if (o.surd_ != 0 && o.radicand_ != radicand_) {
    throw Error("mixing quadratic extensions Q(sqrt " + radicand_.get_str() + ") and Q(sqrt " +
                o.radicand_.get_str() + ")");
  }
  return radicand_;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  Integer c = common_radicand(o);
  rational_ += o.rational_;
  surd_ += o.surd_;
  radicand_ = surd_ == 0 ? Integer(0) : c;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) { return *this += -o; }

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  Integer c = common_radicand(o);
  Rational u = rational_ * o.rational_ + surd_ * o.surd_ * Rational(c);
  Rational v = rational_ * o.surd_ + surd_ * o.rational_;
  rational_ = std::move(u);
  surd_ = std::move(v);
  radicand_ = surd_ == 0 ? Integer(0) : c;
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
  Rational n = o.norm();
  if (n == 0) throw Error("division by zero in quadratic field");
  QuadNumber inv = o.conjugate();
  inv.rational_ /= n;
  inv.surd_ /= n;
  return *this *= inv;
}

QuadNumber QuadNumber::operator-() const {
  QuadNumber r = *this;
  r.rational_ = -r.rational_;
  r.surd_ = -r.surd_;
  return r;
}

bool operator==(const QuadNumber& a, const QuadNumber& b) {
  if (a.rational_ != b.rational_ || a.surd_ != b.surd_) return false;
  return a.surd_ == 0 || a.radicand_ == b.radicand_;
}

QuadNumber QuadNumber::conjugate() const {
  QuadNumber r = *this;
  r.surd_ = -r.surd_;
  return r;
}

Rational QuadNumber::norm() const {
  return rational_ * rational_ - surd_ * surd_ * Rational(radicand_);
}

std::string QuadNumber::str() const {
  if (surd_ == 0) return to_string(rational_);
  std::string s = rational_ == 0 ? "" : to_string(rational_) + "+";
  return s + "(" + to_string(surd_) + ")*sqrt(" + radicand_.get_str() + ")";
}

}  // namespace vhiggs
