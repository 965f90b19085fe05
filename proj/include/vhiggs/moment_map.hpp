#pragma once

// Point-model Hitchin equations: the moment map mu = sum_k [phi_k, phi_k^dagger]
// on traceless commuting pairs, and a descent flow on the metric.
//
// The flow moves g in SL(2, C), with H = g* g. Writing psi_k = g phi_k g^-1
// and mu_g = sum_k [psi_k, psi_k*], one step is
//
//     g <- exp(-step * mu_g / |psi|^2) g,
//
// the gradient step for log |g . phi|^2 on the orbit. The normalization makes
// the trajectory of g independent of rescaling phi, and on a nilpotent orbit
// it drives cond(g) up at a fixed exponential rate, so divergence shows up
// well inside the iteration budget. Convergence asks for both the residual
// and its scale-free version to drop below tol.

#include <complex>
#include <vector>

#include "vhiggs/hitchin.hpp"

namespace vhiggs::moment_map {

using Complex = std::complex<double>;
using CMat = Mat2<Complex>;
using hitchin::ExactPointPair;
using hitchin::NumericPointPair;

CMat conj_transpose(const CMat& m);
double frobenius_norm(const CMat& m);
CMat inverse(const CMat& m);

/// exp(a) for a traceless matrix.
CMat exp_traceless(const CMat& a);

/// sigma_max / sigma_min.
double condition_number(const CMat& m);

/// Eigenvalues +-sqrt(-det m) of a traceless matrix (diagnostic only).
std::pair<Complex, Complex> traceless_eigenvalues(const CMat& m);

struct HermitianMetric {
  CMat h = CMat::identity();

  static HermitianMetric identity() { return {}; }

  /// Throws unless h = h* and both leading principal minors are positive.
  void validate() const;
};

/// H^-1 phi* H.
CMat adjoint_wrt(const CMat& phi, const HermitianMetric& metric);

/// [phi1, phi1^dagger] + [phi2, phi2^dagger] with adjoints taken in H.
CMat moment(const NumericPointPair& pair, const HermitianMetric& metric);

struct FlowConfig {
  double step = 0.05;
  double tol = 1e-10;
  int max_iters = 10000;
  double divergence_cond = 1e8;

  void validate() const;
};

enum class FlowStatus { converged, diverged, max_iters };

const char* to_string(FlowStatus s);

struct FlowResult {
  FlowStatus status;
  HermitianMetric metric;  // H = g* g at the last iterate
  double residual;         // |moment(pair, H)|_F at the last iterate
  double relative_residual;  // |mu_g|_F / |g phi g^-1|^2, invariant under phi -> c phi
  int iters;
  double cond;  // condition number of g at the last iterate
};

/// Runs the flow from H = id. When `trace` is given it receives |mu_g|_F
/// before every step.
FlowResult solve_metric(const NumericPointPair& pair, const FlowConfig& cfg = {},
                        std::vector<double>* trace = nullptr);

/// solve_metric agrees with the exact class: zero and polystable pairs
/// converge, nonzero nilpotent pairs do not.
bool hk_cross_check(const ExactPointPair& pair, const FlowConfig& cfg = {});

}  // namespace vhiggs::moment_map
