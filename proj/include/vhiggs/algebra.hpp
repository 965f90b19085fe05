#pragma once

// Exact algebra on the projective line: gcd, factorization over Q, square
// roots, sections of O(d) on two charts and Smith normal form over the local
// ring at a prime of Q[z].

#include <optional>
#include <vector>

#include "vhiggs/poly.hpp"

namespace vhiggs::algebra {

/// Monic gcd with gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

struct Factor {
  Poly factor;  // monic, irreducible over Q
  int multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Monic squarefree parts by Yun's algorithm: element i-1 is the product of
/// the irreducible factors of multiplicity exactly i (possibly 1).
std::vector<Poly> yun_squarefree(const Poly& p);

/// Irreducible factors of a squarefree polynomial over Q, monic, in canonical
/// order (by degree, then coefficients).
std::vector<Poly> factor_squarefree(const Poly& p);

/// Complete factorization over Q: p = lc(p) * prod factor^multiplicity.
/// Throws on the zero polynomial.
std::vector<Factor> squarefree_decomposition(const Poly& p);

bool is_irreducible(const Poly& p);

/// p = radicand * root^2 with root monic.
struct SquareRoot {
  Poly root;
  Rational radicand;
  bool radicand_is_square;  // sqrt(radicand) lies in Q

  /// root * sqrt(radicand), an exact square root of p over Q(sqrt radicand).
  QuadPoly full_root() const;
};

/// Absent when some irreducible factor of p has odd multiplicity.
std::optional<SquareRoot> exact_sqrt(const Poly& p);

/// Global section of O(bound) on P^1, stored on the chart z = [1 : z].
/// The other chart w = 1/z sees w^bound * poly(1/w).
struct Section {
  Poly poly;
  int bound = 0;

  Section() = default;
  Section(Poly p, int d);

  static Section zero(int d) { return Section(Poly(), d); }

  /// Representative on the chart at infinity.
  Poly chart1() const { return poly.reversed(bound + 1); }
  bool is_zero() const { return poly.is_zero(); }

  friend bool operator==(const Section&, const Section&) = default;
};

Section chart_swap(const Section& s);

Section operator+(const Section& a, const Section& b);
Section operator-(const Section& a, const Section& b);
Section operator*(const Section& a, const Section& b);
Section operator*(const Rational& c, const Section& a);

/// Valuation meaning "the generator is free" in snf_over_dvr output.
inline constexpr int kFree = kInfiniteOrder;

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Invariant factors of the module coker(M) over the localization of Q[z]
/// at `prime`. M has one row per generator and one column per relation.
/// Returns one valuation per generator, nondecreasing, kFree for free
/// summands. Throws if `prime` is not monic irreducible.
std::vector<int> snf_over_dvr(const PolyMatrix& m, const Poly& prime);

/// Sum of the finite valuations returned by snf_over_dvr.
int torsion_length(const std::vector<int>& valuations);

}  // namespace vhiggs::algebra
