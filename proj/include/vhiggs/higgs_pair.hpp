#pragma once

// V-twisted Higgs pairs on P^1 with E = O(e1) + O(e2) and V = O(m1) + O(m2).
//
// In the frame {v1, v2} of V the Higgs field is phi = phi1 (x) v1 + phi2 (x) v2,
// and phi ^ phi = 0 becomes [phi1, phi2] = 0. Entry (i, j) of phi_k is a map
// O(e_j) -> O(e_i + m_k), i.e. a section of O(e_i - e_j + m_k).

#include <string>
#include <utility>
#include <vector>

#include "vhiggs/algebra.hpp"
#include "vhiggs/mat2.hpp"

namespace vhiggs::higgs {

using algebra::Section;
using PolyMat = Mat2<Poly>;

struct TwistBundle {
  int m1 = 0;
  int m2 = 0;

  int degree(int k) const { return k == 0 ? m1 : m2; }
  friend bool operator==(const TwistBundle&, const TwistBundle&) = default;
};

struct HiggsPair {
  int e1 = 0;
  int e2 = 0;
  TwistBundle twist;
  PolyMat phi1;
  PolyMat phi2;

  int e(int i) const { return i == 0 ? e1 : e2; }
  const PolyMat& phi(int k) const { return k == 0 ? phi1 : phi2; }

  /// Line bundle degree of entry (i, j) of phi_k.
  int entry_bound(int k, int i, int j) const { return e(i) - e(j) + twist.degree(k); }

  /// Entry as a section; throws if it violates its degree bound.
  Section section(int k, int i, int j) const;

  friend bool operator==(const HiggsPair&, const HiggsPair&) = default;
};

struct Violation {
  std::string kind;  // "twist", "degree" or "commuting"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Degree bounds of every entry, the twist normalization m1 >= m2 >= 0 and
/// the commuting condition [phi1, phi2] = 0.
ValidationReport validate(const HiggsPair& pair);

/// Throws Error listing the violations unless validate(pair) is ok.
void require_valid(const HiggsPair& pair);

/// (tr phi1, tr phi2) as sections of O(m1) and O(m2).
std::pair<Section, Section> trace(const HiggsPair& pair);

/// e1 + e2 = 0 and both traces vanish.
bool is_sl2(const HiggsPair& pair);

bool is_traceless(const HiggsPair& pair);

/// g phi g^-1 for a constant invertible g. Only meaningful (bounds preserved)
/// when e1 = e2, or g upper/lower triangular compatibly with the splitting.
HiggsPair conjugate(const HiggsPair& pair, const Mat2<Rational>& g);

/// Tensoring E by O(k): shifts e1, e2 by k and leaves phi unchanged.
HiggsPair twist_by(const HiggsPair& pair, int k);

}  // namespace vhiggs::higgs
