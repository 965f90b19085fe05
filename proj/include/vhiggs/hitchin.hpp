#pragma once

// The Hitchin morphism, its base, and the point model on the commuting
// variety of traceless 2x2 pairs.
//
// Invariants are normalized so that the cone coordinates are
// (lambda1^2, lambda2^2, lambda1*lambda2) on the nose:
//   b1 = -det phi1,  b2 = -det phi2,  b3 = tr(phi1 phi2) / 2.
// For traceless 2x2 matrices tr(phi_i^2) = -2 det phi_i, so this is tr(phi^2)/2.

#include <complex>

#include "vhiggs/higgs_pair.hpp"

namespace vhiggs::hitchin {

using algebra::Section;
using higgs::HiggsPair;

/// b = (b1, b2, b3) in H^0(O(2m1) + O(2m2) + O(m1+m2)) with b3^2 = b1 b2.
struct SpectralDatum {
  Section b1;
  Section b2;
  Section b3;

  int m1() const { return b1.bound / 2; }
  int m2() const { return b2.bound / 2; }
  bool is_zero() const { return b1.is_zero() && b2.is_zero() && b3.is_zero(); }

  /// The datum with b1 and b2 exchanged (twist summands swapped).
  SpectralDatum swapped() const { return {b2, b1, b3}; }

  friend bool operator==(const SpectralDatum&, const SpectralDatum&) = default;
};

/// Checks the bound pattern (2 m1, 2 m2, m1 + m2) with m1 >= m2 >= 0.
bool has_base_bounds(const SpectralDatum& b);

/// b3^2 == b1 b2 identically, checked on both charts. Requires the bound
/// pattern; throws otherwise.
bool base_membership(const SpectralDatum& b);

/// Throws Error("not SL(2)") for nonzero traces and Error for invalid pairs.
SpectralDatum hitchin_map(const HiggsPair& pair);

/// phi1^2 = b1 id, phi2^2 = b2 id and phi1 phi2 = b3 id as polynomial identities.
bool cayley_hamilton_check(const HiggsPair& pair, const SpectralDatum& b);

// ---- point model -----------------------------------------------------------

template <class S>
struct PointPair {
  Mat2<S> phi1;
  Mat2<S> phi2;
};

template <class S>
struct ConePoint {
  S x;
  S y;
  S z;

  bool on_cone() const { return z * z == x * y; }
  bool is_origin() const { return x == S(0) && y == S(0) && z == S(0); }
  friend bool operator==(const ConePoint&, const ConePoint&) = default;
};

using ExactPointPair = PointPair<GaussRational>;
using NumericPointPair = PointPair<std::complex<double>>;

/// Cone coordinates (-det phi1, -det phi2, tr(phi1 phi2)/2); the Z/2 quotient
/// of eigenvalue pairs never needs a square root this way.
template <class S>
ConePoint<S> point_spectral_data(const PointPair<S>& pair) {
  return {-pair.phi1.det(), -pair.phi2.det(), (pair.phi1 * pair.phi2).trace() / S(2)};
}

/// dim of C[X,Y]/(X^2 - x, Y^2 - y, XY - z): 3 at the origin, 2 elsewhere.
/// Throws if the point is off the cone.
template <class S>
int universal_fiber_dim(const ConePoint<S>& c) {
  if (!c.on_cone()) throw Error("point is not on the cone z^2 = xy");
  return c.is_origin() ? 3 : 2;
}

enum class PointClass { zero, polystable_diagonalizable, nilpotent_nonzero };

const char* to_string(PointClass c);

/// Exact classification of a traceless commuting pair; throws if the pair
/// is not traceless or does not commute.
PointClass classify_point_pair(const ExactPointPair& pair);

void require_point_model(const ExactPointPair& pair);

NumericPointPair to_numeric(const ExactPointPair& pair);

}  // namespace vhiggs::hitchin
