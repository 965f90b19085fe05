#pragma once

// Random valid Higgs pairs for property tests.
//
// Every traceless commuting pair on P^1 used here has the shape
// phi_k = f_k * psi with psi traceless; commuting is then automatic.

#include "oracles.hpp"
#include "vhiggs/higgs_pair.hpp"

namespace vhiggs::testing {

using higgs::HiggsPair;
using higgs::PolyMat;

struct PairShape {
  int max_twist = 3;
  int max_entry_degree = 3;
  long max_height = 10;
};

inline Poly bounded_poly(Rng& rng, int bound, int cap, long height) {
  if (bound < 0) return Poly();
  return rng.poly(std::min(bound, cap), height);
}

inline long height(const Poly& p) {
  long h = 0;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return std::numeric_limits<long>::max();
    h = std::max(h, mpz_class(abs(c.get_num())).get_si());
  }
  return h;
}

inline bool within(const HiggsPair& p, const PairShape& s) {
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Poly& e = p.phi(k)(i, j);
        if (e.degree() > s.max_entry_degree || height(e) > s.max_height) return false;
      }
  return true;
}

/// A valid traceless commuting pair; rejection keeps degrees and heights in shape.
inline HiggsPair random_pair(Rng& rng, const PairShape& shape = {}) {
  while (true) {
    HiggsPair p;
    p.twist.m1 = static_cast<int>(rng.integer(0, shape.max_twist));
    p.twist.m2 = static_cast<int>(rng.integer(0, p.twist.m1));
    p.e1 = static_cast<int>(rng.integer(-2, 2));
    p.e2 = static_cast<int>(rng.integer(-2, 2));
    const int d = static_cast<int>(rng.integer(0, p.twist.m2));
    const int cap = shape.max_entry_degree;
    const long h = 3;
    PolyMat psi;
    psi(0, 0) = bounded_poly(rng, d, cap, h);
    psi(1, 1) = -psi(0, 0);
    psi(0, 1) = bounded_poly(rng, p.e1 - p.e2 + d, cap, h);
    psi(1, 0) = bounded_poly(rng, p.e2 - p.e1 + d, cap, h);
    for (int k = 0; k < 2; ++k) {
      Poly f = rng.integer(0, 4) == 0 ? Poly() : bounded_poly(rng, p.twist.degree(k) - d, cap, h);
      PolyMat& phi = k == 0 ? p.phi1 : p.phi2;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) phi(i, j) = f * psi(i, j);
    }
    if (within(p, shape)) return p;
  }
}

/// Random automorphism of E = O(e1) + O(e2) with constant determinant: a
/// constant invertible matrix when e1 = e2, otherwise triangular with the
/// off-diagonal entry of degree |e1 - e2|.
inline PolyMat random_gauge(Rng& rng, int e1, int e2) {
  auto unit = [&] {
    Rational q(0);
    while (q == 0) q = rng.rational(5);
    return q;
  };
  if (e1 == e2) {
    while (true) {
      Mat2<Rational> g = Mat2<Rational>::of(rng.rational(5), rng.rational(5), rng.rational(5),
                                            rng.rational(5));
      if (g.det() == 0) continue;
      PolyMat out;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = Poly::constant(g(i, j));
      return out;
    }
  }
  PolyMat g = PolyMat::of(Poly::constant(unit()), Poly(), Poly(), Poly::constant(unit()));
  if (e1 > e2) {
    g(0, 1) = rng.poly(e1 - e2, 5);
  } else {
    g(1, 0) = rng.poly(e2 - e1, 5);
  }
  return g;
}

/// g phi g^-1 for g with constant nonzero determinant.
inline HiggsPair gauge_transform(const HiggsPair& p, const PolyMat& g) {
  const Poly det = g.det();
  if (det.degree() != 0) throw Error("gauge needs a constant determinant");
  const Rational inv = 1 / det.coeffs()[0];
  const PolyMat gi = g.adjugate().map([&](const Poly& x) { return x * inv; });
  HiggsPair out = p;
  out.phi1 = g * p.phi1 * gi;
  out.phi2 = g * p.phi2 * gi;
  return out;
}

}  // namespace vhiggs::testing
