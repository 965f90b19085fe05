#include "vhiggs/algebra.hpp"

#include <algorithm>

namespace vhiggs::algebra {

Poly poly_gcd(const Poly& p, const Poly& q) { return gcd(p, q); }

QuadPoly SquareRoot::full_root() const {
  QuadNumber s = QuadNumber::sqrt_of(radicand);
  std::vector<QuadNumber> c;
  c.reserve(root.coeffs().size());
  for (const auto& a : root.coeffs()) c.push_back(QuadNumber(a) * s);
  return QuadPoly(std::move(c));
}

std::optional<SquareRoot> exact_sqrt(const Poly& p) {
  if (p.is_zero()) throw Error("exact_sqrt of the zero polynomial");
  auto parts = yun_squarefree(p);
  Poly root = Poly::constant(1);
  for (size_t i = 0; i < parts.size(); ++i) {
    const int multiplicity = static_cast<int>(i) + 1;
    if (parts[i].degree() <= 0) continue;
    if (multiplicity % 2 == 1) return std::nullopt;
    root *= pow(parts[i], multiplicity / 2);
  }
  Rational c = p.leading();
  return SquareRoot{root, c, is_rational_square(c)};
}

Section::Section(Poly p, int d) : poly(std::move(p)), bound(d) {
  if (poly.degree() > bound) {
    throw Error("section of degree " + std::to_string(poly.degree()) + " exceeds bound " +
                std::to_string(bound));
  }
}

Section chart_swap(const Section& s) {
  if (s.bound < 0) return s;
  return Section(s.chart1(), s.bound);
}

Section operator+(const Section& a, const Section& b) {
  if (a.bound != b.bound) throw Error("adding sections of different line bundles");
  return Section(a.poly + b.poly, a.bound);
}

Section operator-(const Section& a, const Section& b) {
  if (a.bound != b.bound) throw Error("subtracting sections of different line bundles");
  return Section(a.poly - b.poly, a.bound);
}

Section operator*(const Section& a, const Section& b) {
  return Section(a.poly * b.poly, a.bound + b.bound);
}

Section operator*(const Rational& c, const Section& a) { return Section(a.poly * c, a.bound); }

namespace {

// Removes from a row the largest polynomial factor coprime to the prime;
// that factor is a unit of the local ring.
void strip_unit_content(std::vector<Poly>& row, size_t from, const Poly& prime) {
  Poly g;
  for (size_t j = from; j < row.size(); ++j) g = gcd(g, row[j]);
  if (g.degree() < 1) return;
  int v = valuation(g, prime);
  Poly unit = exact_div(g, pow(prime, v));
  if (unit.degree() < 1) return;
  for (size_t j = from; j < row.size(); ++j) row[j] = exact_div(row[j], unit);
}

}  // namespace

std::vector<int> snf_over_dvr(const PolyMatrix& m, const Poly& prime) {
  if (prime.degree() < 1 || prime.leading() != 1 || !is_irreducible(prime)) {
    throw Error("snf_over_dvr: prime must be monic irreducible, got " + to_string(prime));
  }
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m) {
    if (r.size() != cols) throw Error("snf_over_dvr: ragged matrix");
  }

  PolyMatrix a = m;
  std::vector<int> vals;
  for (size_t t = 0; t < rows && t < cols; ++t) {
    size_t pi = rows, pj = cols;
    int best = kInfiniteOrder;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        int v = valuation(a[i][j], prime);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;  // remaining block is zero
    std::swap(a[t], a[pi]);
    for (auto& r : a) std::swap(r[t], r[pj]);

    const Poly power = pow(prime, best);
    const Poly unit = exact_div(a[t][t], power);
    // Row operations clear the pivot column: row_i <- unit*row_i - w*row_t
    // with a[i][t] = w * prime^best. Scaling by a unit is invertible locally.
    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t].is_zero()) continue;
      const Poly w = exact_div(a[i][t], power);
      for (size_t j = t; j < cols; ++j) a[i][j] = unit * a[i][j] - w * a[t][j];
      strip_unit_content(a[i], t + 1, prime);
    }
    // The pivot column is now zero below the pivot, so clearing the pivot
    // row by column operations leaves every other row untouched.
    for (size_t j = t + 1; j < cols; ++j) a[t][j] = Poly();
    vals.push_back(best);
  }
  while (vals.size() < rows) vals.push_back(kFree);
  std::sort(vals.begin(), vals.end());
  return vals;
}

int torsion_length(const std::vector<int>& valuations) {
  int total = 0;
  for (int v : valuations) {
    if (v != kFree) total += v;
  }
  return total;
}

}  // namespace vhiggs::algebra
