#include "vhiggs/hitchin.hpp"

namespace vhiggs::hitchin {

bool has_base_bounds(const SpectralDatum& b) {
  if (b.b1.bound < 0 || b.b2.bound < 0 || b.b1.bound % 2 != 0 || b.b2.bound % 2 != 0) return false;
  const int m1 = b.m1();
  const int m2 = b.m2();
  return m1 >= m2 && b.b3.bound == m1 + m2;
}

bool base_membership(const SpectralDatum& b) {
  if (!has_base_bounds(b)) throw Error("spectral datum bounds must be (2 m1, 2 m2, m1 + m2)");
  const bool chart0 = b.b3.poly * b.b3.poly == b.b1.poly * b.b2.poly;
  const bool chart1 = b.b3.chart1() * b.b3.chart1() == b.b1.chart1() * b.b2.chart1();
  return chart0 && chart1;
}

SpectralDatum hitchin_map(const HiggsPair& pair) {
  higgs::require_valid(pair);
  if (!higgs::is_traceless(pair)) throw Error("not SL(2)");
  const int m1 = pair.twist.m1;
  const int m2 = pair.twist.m2;
  const Rational half(1, 2);
  return {Section(-pair.phi1.det(), 2 * m1), Section(-pair.phi2.det(), 2 * m2),
          Section((pair.phi1 * pair.phi2).trace() * half, m1 + m2)};
}

bool cayley_hamilton_check(const HiggsPair& pair, const SpectralDatum& b) {
  using higgs::PolyMat;
  return pair.phi1 * pair.phi1 == PolyMat::scalar(b.b1.poly) &&
         pair.phi2 * pair.phi2 == PolyMat::scalar(b.b2.poly) &&
         pair.phi1 * pair.phi2 == PolyMat::scalar(b.b3.poly);
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::zero: return "zero";
    case PointClass::polystable_diagonalizable: return "polystable_diagonalizable";
    case PointClass::nilpotent_nonzero: return "nilpotent_nonzero";
  }
  return "?";
}

void require_point_model(const ExactPointPair& pair) {
  if (!(pair.phi1.trace() == GaussRational(0)) || !(pair.phi2.trace() == GaussRational(0))) {
    throw Error("point pair is not traceless");
  }
  if (!is_zero_matrix(commutator(pair.phi1, pair.phi2))) throw Error("point pair does not commute");
}

PointClass classify_point_pair(const ExactPointPair& pair) {
  require_point_model(pair);
  const bool zero1 = is_zero_matrix(pair.phi1);
  const bool zero2 = is_zero_matrix(pair.phi2);
  if (zero1 && zero2) return PointClass::zero;
  // A traceless 2x2 matrix with nonzero determinant has distinct eigenvalues
  // +-lambda, so it is diagonalizable and everything commuting with it is
  // diagonal in the same basis.
  if (!(pair.phi1.det() == GaussRational(0)) || !(pair.phi2.det() == GaussRational(0))) {
    return PointClass::polystable_diagonalizable;
  }
  return PointClass::nilpotent_nonzero;
}

NumericPointPair to_numeric(const ExactPointPair& pair) {
  auto conv = [](const Mat2<GaussRational>& m) {
    Mat2<std::complex<double>> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = {m(i, j).re.get_d(), m(i, j).im.get_d()};
    return r;
  };
  return {conv(pair.phi1), conv(pair.phi2)};
}

}  // namespace vhiggs::hitchin
