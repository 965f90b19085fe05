// Times the serial and OpenMP versions of the corpus kernels on the same
// inputs and checks that they agree.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <random>

#include "vhiggs/batch.hpp"
#include "vhiggs/hitchin.hpp"

using namespace vhiggs;
using moment_map::CMat;
using C = std::complex<double>;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<hitchin::NumericPointPair> point_pairs(size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2, 2);
  auto c = [&] { return C(u(gen), u(gen)); };
  std::vector<hitchin::NumericPointPair> out;
  while (out.size() < n) {
    const CMat g = CMat::of(c(), c(), c(), c());
    if (std::abs(g.det()) < 0.1) continue;
    const CMat gi = moment_map::inverse(g);
    const C l1 = c(), l2 = c();
    if (out.size() % 4 == 3) {
      out.push_back({g * CMat::of(0, 1, 0, 0) * gi, g * CMat::of(0, l1, 0, 0) * gi});
    } else {
      out.push_back({g * CMat::of(l1, 0, 0, -l1) * gi, g * CMat::of(l2, 0, 0, -l2) * gi});
    }
  }
  return out;
}

// b = (f1^2 d, f2^2 d, f1 f2 d): every datum lies on the cone and has common zeros.
std::vector<hitchin::SpectralDatum> spectral_data(size_t n, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  auto poly = [&](int degree) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = coeff(gen);
    c.back() = coeff(gen) == 0 ? 1 : c.back();
    return Poly(std::move(c));
  };
  std::vector<hitchin::SpectralDatum> out;
  while (out.size() < n) {
    const Poly f1 = poly(2), f2 = poly(2), d = poly(2);
    if (f1.is_zero() || f2.is_zero() || d.is_zero()) continue;
    const int m = std::max(f1.degree(), f2.degree()) + 1;
    out.push_back({algebra::Section(f1 * f1 * d, 2 * m), algebra::Section(f2 * f2 * d, 2 * m),
                   algebra::Section(f1 * f2 * d, 2 * m)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial versus parallel kernel timings"};
  size_t pairs = 2000, data = 400;
  unsigned long seed = 1;
  app.add_option("--pairs", pairs, "Point pairs for the metric flow");
  app.add_option("--data", data, "Spectral data for torsion lengths");
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 gen(seed);
  const auto pp = point_pairs(pairs, gen);
  const auto dd = spectral_data(data, gen);
  const moment_map::FlowConfig cfg;
  std::printf("threads: %d\n", batch::thread_count());

  std::vector<moment_map::FlowResult> rs, rp;
  const double ts = seconds([&] { rs = batch::solve_metric_serial(pp, cfg); });
  const double tp = seconds([&] { rp = batch::solve_metric_parallel(pp, cfg); });
  bool same = rs.size() == rp.size();
  for (size_t i = 0; same && i < rs.size(); ++i) same = rs[i].iters == rp[i].iters && rs[i].status == rp[i].status;
  std::printf("solve_metric  n=%zu  serial %.3f s  parallel %.3f s  speedup %.2fx  %s\n", pp.size(), ts, tp, ts / tp,
              same ? "agree" : "DISAGREE");

  std::vector<std::vector<int>> ls, lp;
  const double us = seconds([&] { ls = batch::torsion_serial(dd); });
  const double up = seconds([&] { lp = batch::torsion_parallel(dd); });
  std::printf("torsion       n=%zu  serial %.3f s  parallel %.3f s  speedup %.2fx  %s\n", dd.size(), us, up, us / up,
              ls == lp ? "agree" : "DISAGREE");
  return same && ls == lp ? 0 : 1;
}
