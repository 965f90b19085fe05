#include "vhiggs/poly.hpp"

namespace vhiggs {

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) out += to_string(mag);
    if (i >= 1) {
      if (!unit) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_string(const QuadPoly& p, char var) {
  if (p.is_zero()) return "0";
  bool rational = true;
  for (const auto& c : p.coeffs()) rational = rational && c.is_rational();
  if (rational) {
    std::vector<Rational> q;
    for (const auto& c : p.coeffs()) q.push_back(c.rational_part());
    return to_string(Poly(std::move(q)), var);
  }
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const QuadNumber& c = p.coeffs()[static_cast<size_t>(i)];
    if (c == QuadNumber(0)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (i >= 1) {
      out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QuadPoly to_quad(const Poly& p) {
  std::vector<QuadNumber> c(p.coeffs().begin(), p.coeffs().end());
  return QuadPoly(std::move(c));
}

Poly poly_of(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

std::pair<Rational, std::vector<Integer>> primitive_part(const Poly& p) {
  if (p.is_zero()) return {Rational(0), {}};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  Rational factor(content, den_lcm);
  factor.canonicalize();
  return {factor, std::move(ints)};
}

}  // namespace vhiggs
