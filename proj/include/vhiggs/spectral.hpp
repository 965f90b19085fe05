#pragma once

// Classification of the spectral curve Y_b cut out by X^2 - b1, Y^2 - b2,
// XY - b3 in the total space of V, and of its flat modification.
//
// Zeros of b are handled as irreducible factors over Q. Points of the finite
// chart are factors p(z); the point at infinity is the factor w of the chart
// w = 1/z and is the only point reported on that chart.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vhiggs/hitchin.hpp"

namespace vhiggs::spectral {

using hitchin::SpectralDatum;

enum class Chart { finite, infinity };

const char* to_string(Chart c);

struct ZeroPoint {
  Chart chart;
  Poly factor;              // monic irreducible; w itself on the chart at infinity
  std::array<int, 3> orders;  // vanishing orders of b1, b2, b3 (kInfiniteOrder for 0)

  int min_order() const { return std::min({orders[0], orders[1], orders[2]}); }
};

struct ZeroLocus {
  std::vector<ZeroPoint> finite;
  std::vector<ZeroPoint> infinity;

  bool empty() const { return finite.empty() && infinity.empty(); }
  std::vector<ZeroPoint> all() const;
};

/// Common zeros of (b1, b2, b3) on both charts with exact orders. Throws
/// Error("not in B'") for b = 0, and Error if 2 n3 != n1 + n2 at some zero.
ZeroLocus zero_locus(const SpectralDatum& b);

struct Reducibility {
  enum class Verdict { yes, no, undecided };

  Verdict verdict = Verdict::no;
  /// When yes: a = (a1, a2) with a1^2 = b1, a2^2 = b2, a1 a2 = b3, over Q or
  /// over a single quadratic extension Q(sqrt c).
  std::array<QuadPoly, 2> a;
  std::string obstruction;
};

const char* to_string(Reducibility::Verdict v);

/// Y_b is reducible iff b = a^2 for a section a of V.
Reducibility is_reducible(const SpectralDatum& b);

/// gcd(b1, b2, b3, b1', b2', b3') nonconstant on some chart, i.e. some
/// common zero where every component vanishes to order >= 2.
bool has_multiple_zero(const SpectralDatum& b);

bool is_etale(const SpectralDatum& b);

struct EtaleGenus {
  int value;      // 2g - 1
  bool possible;  // false for g = 0: no connected etale double cover of P^1
};

EtaleGenus etale_genus(int g);

/// Valuations (snf_over_dvr format) of F = O<1, X, Y> / (b3 X - b1 Y, b3 Y - b2 X)
/// localized at `prime` on the given chart. No zero-locus check.
std::vector<int> module_valuations(const SpectralDatum& b, Chart chart, const Poly& prime);

/// Length of the torsion part T_x of F_x. Throws if the point is not a
/// common zero of b.
int local_torsion_length(const SpectralDatum& b, Chart chart, const Poly& factor);

/// c_xx X^2 + c_yy Y^2 + c_xy XY + c_x X + c_y Y + c_1 with coefficients in Q[z].
struct LocalGenerator {
  Poly xx, yy, xy, x, y, one;

  std::string str(char var) const;
};

struct LocalEquations {
  Chart chart;
  Poly factor;
  bool swapped;   // b1 and b2 exchanged so that n >= m
  int n;          // ord of f1 (kInfiniteOrder if f1 = 0)
  int m;          // ord of f3
  std::array<Poly, 3> f;  // f1, f2, f3 after the swap
  Poly g1, g3;            // exact units with f1 = p^n g1, f3 = p^m g3 (1 when f = 0)
  int truncation;         // K
  Poly g1_truncated, g3_truncated;  // units modulo p^K
  std::array<LocalGenerator, 4> generators;
};

/// Equations of the flat spectral curve near a zero of b:
///   X^2 - f1, Y^2 - f2, XY - f3, g3 X - p^(n-m) g1 Y.
/// truncation = 0 selects the default K = n + 1; smaller positive K throws.
LocalEquations local_equations(const SpectralDatum& b, Chart chart, const Poly& factor,
                               int truncation = 0);

/// Rank over Q[z]/(p) of the Jacobian of the four generators with respect to
/// (X, Y, z) at the point X = Y = 0 above the zero.
int jacobian_rank(const LocalEquations& eq);

struct TorsionEntry {
  ZeroPoint point;
  int length;
  int jacobian_rank;
};

enum class Smoothness { smooth, singular, not_applicable };

const char* to_string(Smoothness s);

struct SpectralCurveReport {
  ZeroLocus zeros;
  Reducibility reducible;
  bool etale;
  bool multiple_zero;
  Smoothness smooth;
  std::vector<TorsionEntry> torsion;
  std::optional<EtaleGenus> genus;
};

/// Throws Error("cone relation violated") unless b lies in the Hitchin base.
SpectralCurveReport spectral_report(const SpectralDatum& b, int genus = 0, int truncation = 0);

}  // namespace vhiggs::spectral
