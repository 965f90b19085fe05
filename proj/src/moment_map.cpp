#include "vhiggs/moment_map.hpp"

#include <cmath>

namespace vhiggs::moment_map {

CMat conj_transpose(const CMat& m) {
  return CMat::of(std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1)));
}

double frobenius_norm(const CMat& m) {
  double s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

CMat inverse(const CMat& m) {
  const Complex d = m.det();
  if (d == Complex(0)) throw Error("singular matrix");
  return (Complex(1) / d) * m.adjugate();
}

CMat exp_traceless(const CMat& a) {
  const Complex delta = std::sqrt(-a.det());
  const Complex c = std::cosh(delta);
  const Complex s = std::abs(delta) < 1e-8 ? Complex(1) + delta * delta / 6.0 : std::sinh(delta) / delta;
  return CMat::scalar(c) + s * a;
}

double condition_number(const CMat& m) {
  const double fsq = std::norm(m(0, 0)) + std::norm(m(0, 1)) + std::norm(m(1, 0)) + std::norm(m(1, 1));
  const double d = std::abs(m.det());
  if (d == 0) return std::numeric_limits<double>::infinity();
  // Singular values squared are the roots of s^2 - |m|_F^2 s + |det m|^2.
  const double disc = std::sqrt(std::max(0.0, (fsq - 2 * d) * (fsq + 2 * d)));
  const double big = (fsq + disc) / 2;
  return big / d;  // sigma_max / sigma_min = sigma_max^2 / |det|
}

std::pair<Complex, Complex> traceless_eigenvalues(const CMat& m) {
  const Complex l = std::sqrt(-m.det());
  return {l, -l};
}

void HermitianMetric::validate() const {
  const double scale = frobenius_norm(h) + 1;
  if (frobenius_norm(h - conj_transpose(h)) > 1e-12 * scale) throw Error("metric is not Hermitian");
  if (!(h(0, 0).real() > 0) || !(h.det().real() > 0)) throw Error("metric is not positive definite");
}

CMat adjoint_wrt(const CMat& phi, const HermitianMetric& metric) {
  metric.validate();
  return inverse(metric.h) * conj_transpose(phi) * metric.h;
}

CMat moment(const NumericPointPair& pair, const HermitianMetric& metric) {
  return commutator(pair.phi1, adjoint_wrt(pair.phi1, metric)) +
         commutator(pair.phi2, adjoint_wrt(pair.phi2, metric));
}

void FlowConfig::validate() const {
  if (!(step > 0) || !(tol > 0) || max_iters <= 0 || !(divergence_cond > 0)) {
    throw Error("flow parameters must be positive");
  }
}

const char* to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::converged: return "converged";
    case FlowStatus::diverged: return "diverged";
    case FlowStatus::max_iters: return "max_iters";
  }
  return "?";
}

namespace {

void require_commuting_traceless(const NumericPointPair& pair) {
  const double scale = frobenius_norm(pair.phi1) * frobenius_norm(pair.phi2) + 1;
  if (frobenius_norm(commutator(pair.phi1, pair.phi2)) > 1e-12 * scale) {
    throw Error("point pair does not commute");
  }
  for (const CMat* m : {&pair.phi1, &pair.phi2}) {
    if (std::abs(m->trace()) > 1e-12 * (frobenius_norm(*m) + 1)) throw Error("point pair is not traceless");
  }
}

}  // namespace

FlowResult solve_metric(const NumericPointPair& pair, const FlowConfig& cfg, std::vector<double>* trace) {
  cfg.validate();
  require_commuting_traceless(pair);
  CMat g = CMat::identity();
  for (int iter = 0;; ++iter) {
    const CMat gi = inverse(g);
    const CMat psi1 = g * pair.phi1 * gi;
    const CMat psi2 = g * pair.phi2 * gi;
    const CMat mu = commutator(psi1, conj_transpose(psi1)) + commutator(psi2, conj_transpose(psi2));
    // moment(pair, g* g) = g^-1 mu_g g
    const double residual = frobenius_norm(gi * mu * g);
    const double cond = condition_number(g);
    const double size = std::pow(frobenius_norm(psi1), 2) + std::pow(frobenius_norm(psi2), 2);
    // On a nilpotent orbit |mu_g| tends to 0 without a zero being attained,
    // while |mu_g| / |psi|^2 stays bounded below; convergence needs both small.
    const double relative = size == 0 ? 0 : frobenius_norm(mu) / size;
    if (trace) trace->push_back(frobenius_norm(mu));
    HermitianMetric metric{conj_transpose(g) * g};
    FlowResult out{FlowStatus::converged, metric, residual, relative, iter, cond};
    if (residual <= cfg.tol && relative <= cfg.tol) return out;
    out.status = FlowStatus::diverged;
    if (cond >= cfg.divergence_cond) return out;
    out.status = FlowStatus::max_iters;
    if (iter >= cfg.max_iters) return out;
    g = exp_traceless(Complex(-cfg.step / size) * mu) * g;
  }
}

bool hk_cross_check(const ExactPointPair& pair, const FlowConfig& cfg) {
  const auto cls = hitchin::classify_point_pair(pair);
  const auto result = solve_metric(hitchin::to_numeric(pair), cfg);
  const bool polystable = cls != hitchin::PointClass::nilpotent_nonzero;
  return polystable == (result.status == FlowStatus::converged);
}

}  // namespace vhiggs::moment_map
