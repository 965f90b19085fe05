#pragma once

// Stability of V-twisted Higgs pairs through their invariant line
// subbundles, and the deformation quantities computable from sections.

#include <array>
#include <vector>

#include "vhiggs/higgs_pair.hpp"
#include "vhiggs/spectral.hpp"

namespace vhiggs::higgs {

/// Saturated line subbundle O(degree) -> E spanned by `generator`, with
/// phi_k generator = eigen[k] generator for the trace-free parts of phi_k.
struct LineSubbundle {
  int degree;
  std::array<QuadPoly, 2> generator;
  std::array<QuadPoly, 2> eigen;
};

/// An eigen-section would need more than one quadratic extension of Q.
class UndecidedOverQ : public Error {
 public:
  using Error::Error;
};

struct LineSubbundleReport {
  bool all = false;  // both phi_k scalar: every line subbundle is invariant
  std::vector<LineSubbundle> lines;
};

LineSubbundleReport invariant_line_subbundles(const HiggsPair& pair);

enum class Stability { stable, strictly_semistable, unstable };

const char* to_string(Stability s);

Stability stability_verdict(const HiggsPair& pair);

/// dim over Q of { xi in H^0(End E) : [phi1, xi] = [phi2, xi] = 0 }.
int endomorphism_algebra_dim(const HiggsPair& pair);

struct EulerCharacteristics {
  long chi_end_v;       // chi(End E (x) V)
  long chi_end;         // chi(End E)
  long chi_end_wedge;   // chi(End E (x) det V)
  long defect;          // chi_end_v - chi_end - chi_end_wedge
};

/// Riemann-Roch on a curve of genus g with E = O(e1) + O(e2) and V = O(m1) + O(m2).
EulerCharacteristics euler_identity_check(int e1, int e2, int m1, int m2, int genus);

}  // namespace vhiggs::higgs
