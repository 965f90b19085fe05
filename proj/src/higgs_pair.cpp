#include "vhiggs/higgs_pair.hpp"

namespace vhiggs::higgs {

Section HiggsPair::section(int k, int i, int j) const {
  const int bound = entry_bound(k, i, j);
  const Poly& p = phi(k)(i, j);
  if (bound < 0) {
    if (!p.is_zero()) throw Error("nonzero entry in a negative-degree slot");
    return Section::zero(bound);
  }
  return Section(p, bound);
}

ValidationReport validate(const HiggsPair& pair) {
  ValidationReport report;
  if (pair.twist.m2 < 0 || pair.twist.m1 < pair.twist.m2) {
    report.violations.push_back(
        {"twist", "expected m1 >= m2 >= 0, got m1 = " + std::to_string(pair.twist.m1) +
                      ", m2 = " + std::to_string(pair.twist.m2)});
  }
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const int bound = pair.entry_bound(k, i, j);
        const Poly& p = pair.phi(k)(i, j);
        if (!p.is_zero() && p.degree() > bound) {
          report.violations.push_back(
              {"degree", "phi" + std::to_string(k + 1) + "[" + std::to_string(i) + "][" +
                             std::to_string(j) + "] = " + to_string(p) + " exceeds O(" +
                             std::to_string(bound) + ")"});
        }
      }
    }
  }
  PolyMat c = commutator(pair.phi1, pair.phi2);
  if (!is_zero_matrix(c)) {
    report.violations.push_back({"commuting", "[phi1, phi2] = [[" + to_string(c(0, 0)) + ", " +
                                                  to_string(c(0, 1)) + "], [" + to_string(c(1, 0)) +
                                                  ", " + to_string(c(1, 1)) + "]] != 0"});
  }
  return report;
}

void require_valid(const HiggsPair& pair) {
  auto report = validate(pair);
  if (report.ok()) return;
  std::string msg = "invalid Higgs pair:";
  for (const auto& v : report.violations) msg += " " + v.kind + ": " + v.detail + ";";
  throw Error(msg);
}

std::pair<Section, Section> trace(const HiggsPair& pair) {
  return {Section(pair.phi1.trace(), pair.twist.m1), Section(pair.phi2.trace(), pair.twist.m2)};
}

bool is_traceless(const HiggsPair& pair) {
  return pair.phi1.trace().is_zero() && pair.phi2.trace().is_zero();
}

bool is_sl2(const HiggsPair& pair) { return pair.e1 + pair.e2 == 0 && is_traceless(pair); }

HiggsPair conjugate(const HiggsPair& pair, const Mat2<Rational>& g) {
  Rational d = g.det();
  if (d == 0) throw Error("conjugation by a singular matrix");
  Mat2<Rational> inv = g.adjugate();
  auto lift = [](const Mat2<Rational>& m) {
    PolyMat r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = Poly::constant(m(i, j));
    return r;
  };
  Mat2<Rational> scaled_inv = inv.map([&](const Rational& x) { return Rational(x / d); });
  PolyMat gp = lift(g);
  PolyMat gi = lift(scaled_inv);
  HiggsPair out = pair;
  out.phi1 = gp * pair.phi1 * gi;
  out.phi2 = gp * pair.phi2 * gi;
  return out;
}

HiggsPair twist_by(const HiggsPair& pair, int k) {
  HiggsPair out = pair;
  out.e1 += k;
  out.e2 += k;
  return out;
}

}  // namespace vhiggs::higgs
