#include "vhiggs/stability.hpp"

#include <algorithm>

#include "vhiggs/hitchin.hpp"
#include "vhiggs/linalg.hpp"

namespace vhiggs::higgs {

namespace {

using QuadMat = Mat2<QuadPoly>;

QuadMat to_quad(const PolyMat& m) {
  QuadMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = vhiggs::to_quad(m(i, j));
  return r;
}

/// phi - tr(phi)/2 id
PolyMat trace_free(const PolyMat& phi) {
  const Poly half_tr = phi.trace() * Rational(1, 2);
  return phi - PolyMat::scalar(half_tr);
}

bool annihilates(const QuadMat& m, const std::array<QuadPoly, 2>& v) {
  return (m(0, 0) * v[0] + m(0, 1) * v[1]).is_zero() && (m(1, 0) * v[0] + m(1, 1) * v[1]).is_zero();
}

/// Saturated common kernel of psi_k - a_k id, when it is nonzero.
std::optional<LineSubbundle> eigenline(const HiggsPair& pair, const std::array<QuadMat, 2>& psi,
                                       const std::array<QuadPoly, 2>& a) {
  std::array<QuadMat, 2> r;
  for (int k = 0; k < 2; ++k) r[k] = psi[k] - QuadMat::scalar(a[k]);
  std::array<QuadPoly, 2> v;
  bool found = false;
  for (int k = 0; k < 2 && !found; ++k) {
    for (int i = 0; i < 2 && !found; ++i) {
      if (r[k](i, 0).is_zero() && r[k](i, 1).is_zero()) continue;
      v = {r[k](i, 1), -r[k](i, 0)};
      found = true;
    }
  }
  if (!found || !annihilates(r[0], v) || !annihilates(r[1], v)) return std::nullopt;

  const QuadPoly g = gcd(v[0], v[1]);
  for (auto& c : v) c = exact_div(c, g);
  const QuadNumber lead = v[0].is_zero() ? v[1].leading() : v[0].leading();
  for (auto& c : v) c = c * (QuadNumber(1) / lead);

  int degree = kInfiniteOrder;
  for (int i = 0; i < 2; ++i) {
    if (!v[i].is_zero()) degree = std::min(degree, pair.e(i) - v[i].degree());
  }
  return LineSubbundle{degree, v, a};
}

}  // namespace

LineSubbundleReport invariant_line_subbundles(const HiggsPair& pair) {
  require_valid(pair);
  HiggsPair free = pair;
  free.phi1 = trace_free(pair.phi1);
  free.phi2 = trace_free(pair.phi2);
  LineSubbundleReport report;
  if (is_zero_matrix(free.phi1) && is_zero_matrix(free.phi2)) {
    report.all = true;
    return report;
  }
  // Invariant lines are the joint eigenlines; the joint eigenvalues of the
  // trace-free parts are +-a where b = a^2 is the Hitchin image.
  const auto b = hitchin::hitchin_map(free);
  const auto red = spectral::is_reducible(b);
  if (red.verdict == spectral::Reducibility::Verdict::no) return report;
  if (red.verdict == spectral::Reducibility::Verdict::undecided) {
    throw UndecidedOverQ("invariant subbundles undecided over Q: " + red.obstruction);
  }

  const std::array<QuadMat, 2> psi = {to_quad(free.phi1), to_quad(free.phi2)};
  std::vector<std::array<QuadPoly, 2>> candidates = {red.a};
  if (!red.a[0].is_zero() || !red.a[1].is_zero()) candidates.push_back({-red.a[0], -red.a[1]});
  for (const auto& a : candidates) {
    auto line = eigenline(pair, psi, a);
    if (!line) continue;
    const bool seen = std::any_of(report.lines.begin(), report.lines.end(),
                                  [&](const LineSubbundle& l) { return l.generator == line->generator; });
    if (!seen) report.lines.push_back(*line);
  }
  return report;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::strictly_semistable: return "strictly_semistable";
    case Stability::unstable: return "unstable";
  }
  return "?";
}

Stability stability_verdict(const HiggsPair& pair) {
  const auto report = invariant_line_subbundles(pair);
  if (!report.all && report.lines.empty()) return Stability::stable;
  int top = report.all ? std::max(pair.e1, pair.e2) : report.lines.front().degree;
  for (const auto& l : report.lines) top = std::max(top, l.degree);
  const int lhs = 2 * top;
  const int rhs = pair.e1 + pair.e2;
  if (lhs < rhs) return Stability::stable;
  if (lhs == rhs) return Stability::strictly_semistable;
  return Stability::unstable;
}

int endomorphism_algebra_dim(const HiggsPair& pair) {
  require_valid(pair);
  struct Unknown {
    int i, j, power;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int t = 0; t <= pair.e(i) - pair.e(j); ++t) unknowns.push_back({i, j, t});

  // Column u holds the coefficients of [phi_k, E_ij z^t] for k = 1, 2.
  int max_deg = 0;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) max_deg = std::max(max_deg, pair.phi(k)(i, j).degree());
  const int span = max_deg + std::abs(pair.e1 - pair.e2) + 1;
  const size_t rows = static_cast<size_t>(2 * 4 * span);
  DenseMatrix<Rational> m(rows, std::vector<Rational>(unknowns.size()));
  for (size_t u = 0; u < unknowns.size(); ++u) {
    PolyMat xi;
    xi(unknowns[u].i, unknowns[u].j) = Poly::monomial(Rational(1), unknowns[u].power);
    for (int k = 0; k < 2; ++k) {
      const PolyMat c = commutator(pair.phi(k), xi);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int t = 0; t <= c(i, j).degree(); ++t) {
            m[static_cast<size_t>(((k * 2 + i) * 2 + j) * span + t)][u] = c(i, j).coeff(t);
          }
    }
  }
  return static_cast<int>(unknowns.size() - rank(m));
}

EulerCharacteristics euler_identity_check(int e1, int e2, int m1, int m2, int genus) {
  // chi(L) = deg L + 1 - g summed over the line bundle summands.
  const long one_minus_g = 1 - static_cast<long>(genus);
  const long e[2] = {e1, e2};
  const long m[2] = {m1, m2};
  EulerCharacteristics c{0, 0, 0, 0};
  for (long ei : e) {
    for (long ej : e) {
      c.chi_end += ei - ej + one_minus_g;
      c.chi_end_wedge += ei - ej + m[0] + m[1] + one_minus_g;
      for (long mk : m) c.chi_end_v += ei - ej + mk + one_minus_g;
    }
  }
  c.defect = c.chi_end_v - c.chi_end - c.chi_end_wedge;
  return c;
}

}  // namespace vhiggs::higgs
