// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "generators.hpp"
#include "vhiggs/cli.hpp"
#include "vhiggs/hitchin.hpp"
#include "vhiggs/moment_map.hpp"
#include "vhiggs/spectral.hpp"
#include "vhiggs/stability.hpp"

using namespace vhiggs;
using algebra::Section;
using hitchin::SpectralDatum;
using testing::Rng;

namespace {

const Poly z = Poly::identity();

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome tally(int checked, int failures, const std::string& what) {
  return {failures == 0 && checked > 0,
          std::to_string(checked) + " " + what + ", " + std::to_string(failures) + " failures"};
}

SpectralDatum datum(Poly b1, Poly b2, Poly b3, int m1, int m2) {
  return {Section(b1, 2 * m1), Section(b2, 2 * m2), Section(b3, m1 + m2)};
}

std::vector<higgs::HiggsPair> pair_corpus() {
  Rng rng(20240601);
  std::vector<higgs::HiggsPair> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing::random_pair(rng));
  return out;
}

Outcome cone_containment() {
  int failures = 0;
  const auto corpus = pair_corpus();
  for (const auto& p : corpus) {
    const auto b = hitchin::hitchin_map(p);
    if (!(b.b3.poly * b.b3.poly == b.b1.poly * b.b2.poly)) ++failures;
  }
  return tally(static_cast<int>(corpus.size()), failures, "pairs");
}

Outcome cayley_hamilton() {
  int failures = 0;
  const auto corpus = pair_corpus();
  const auto id = higgs::PolyMat::identity();
  for (const auto& p : corpus) {
    const auto b = hitchin::hitchin_map(p);
    const bool ok = p.phi1 * p.phi1 == b.b1.poly * id && p.phi2 * p.phi2 == b.b2.poly * id &&
                    p.phi1 * p.phi2 == b.b3.poly * id;
    if (!ok) ++failures;
  }
  return tally(static_cast<int>(corpus.size()), failures, "pairs");
}

Outcome fibre_dimensions() {
  Rng rng(3);
  int failures = 0, checked = 0;
  auto check = [&](const hitchin::ConePoint<Rational>& c, int expected) {
    const int dim = hitchin::universal_fiber_dim(c);
    const int oracle = static_cast<int>(testing::quotient_algebra_dim(c.x, c.y, c.z, 6));
    if (dim != expected || dim != oracle) ++failures;
    ++checked;
  };
  check({0, 0, 0}, 3);
  while (checked < 51) {
    // Scaled squares reach cone points whose coordinates are not squares themselves.
    const Rational s = rng.rational(5), l1 = rng.rational(6), l2 = rng.rational(6);
    if (s == 0 || (l1 == 0 && l2 == 0)) continue;
    check({s * l1 * l1, s * l2 * l2, s * l1 * l2}, 2);
  }
  return tally(checked, failures, "cone points including the origin");
}

// Data b1 = 2 p^(2a+s), b2 = 2 p^(2c+s) u^2, b3 = 2 p^(a+c+s) u with all orders at p at most 4.
std::vector<std::pair<SpectralDatum, Poly>> torsion_corpus() {
  std::vector<std::pair<SpectralDatum, Poly>> out;
  out.push_back({datum(z, z, z, 1, 1), z});
  const Poly primes[] = {z, poly_of({-1, 1}), poly_of({1, 0, 1})};
  const Poly units[] = {Poly(1), poly_of({3, 1}), poly_of({-2})};
  for (int s = 1; s <= 4; ++s) {
    for (int a = 0; 2 * a + s <= 4; ++a) {
      for (int c = 0; 2 * c + s <= 4; ++c) {
        for (int k = 0; k < 3; ++k) {
          const Poly& p = primes[k];
          const Poly& u = units[(k + a + c) % 3];
          const Poly b1 = pow(p, 2 * a + s) * Rational(2);
          const Poly b2 = pow(p, 2 * c + s) * u * u * Rational(2);
          const Poly b3 = pow(p, a + c + s) * u * Rational(2);
          const int m = std::max(b1.degree(), b2.degree());
          out.push_back({datum(b1, b2, b3, m, m), p});
        }
      }
    }
  }
  return out;
}

Outcome torsion_oracle() {
  int failures = 0;
  const auto corpus = torsion_corpus();
  for (const auto& [b, p] : corpus) {
    const int exact = spectral::local_torsion_length(b, spectral::Chart::finite, p);
    const auto oracle = testing::spectral_module_valuations(b.b1.poly, b.b2.poly, b.b3.poly, p, 6, 4);
    if (exact != algebra::torsion_length(oracle)) ++failures;
  }
  if (spectral::local_torsion_length(datum(z, z, z, 1, 1), spectral::Chart::finite, z) != 1) ++failures;
  return tally(static_cast<int>(corpus.size()), failures, "data");
}

Outcome smoothness() {
  std::vector<SpectralDatum> data;
  for (const auto& [b, p] : torsion_corpus()) data.push_back(b);
  for (const auto& pair : pair_corpus()) {
    auto b = hitchin::hitchin_map(pair);
    if (!b.is_zero()) data.push_back(b);
  }
  int failures = 0, zeros = 0;
  for (const auto& b : data) {
    bool low_rank = false;
    for (const auto& pt : spectral::zero_locus(b).all()) {
      ++zeros;
      const int rank = spectral::jacobian_rank(spectral::local_equations(b, pt.chart, pt.factor));
      if ((rank >= 2) != (pt.min_order() < 2)) ++failures;
      low_rank = low_rank || rank < 2;
    }
    if (low_rank != spectral::has_multiple_zero(b)) ++failures;
  }
  auto out = tally(static_cast<int>(data.size()), failures, "data");
  out.detail += " over " + std::to_string(zeros) + " zeros";
  return out;
}

Outcome stability_simplicity() {
  int failures = 0, irreducible = 0, zero_pairs = 0;
  Rng rng(6);
  for (int i = 0; i < 3000 && irreducible < 60; ++i) {
    const auto p = testing::random_pair(rng);
    const auto b = hitchin::hitchin_map(p);
    if (b.is_zero() || spectral::is_reducible(b).verdict != spectral::Reducibility::Verdict::no) continue;
    ++irreducible;
    if (higgs::stability_verdict(p) != higgs::Stability::stable || higgs::endomorphism_algebra_dim(p) != 1) {
      ++failures;
    }
  }
  for (int e = -2; e <= 2; ++e) {
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m2 <= m1; ++m2) {
        higgs::HiggsPair p;
        p.e1 = p.e2 = e;
        p.twist = {m1, m2};
        ++zero_pairs;
        if (higgs::stability_verdict(p) != higgs::Stability::strictly_semistable ||
            higgs::endomorphism_algebra_dim(p) != 4) {
          ++failures;
        }
      }
    }
  }
  return {failures == 0 && irreducible >= 50,
          std::to_string(irreducible) + " irreducible pairs, " + std::to_string(zero_pairs) + " zero pairs, " +
              std::to_string(failures) + " failures"};
}

Outcome euler_identity() {
  Rng rng(7);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto r = [&] { return static_cast<int>(rng.integer(-10, 10)); };
    const int e1 = r(), e2 = r(), m1 = r(), m2 = r();
    const int g = static_cast<int>(rng.integer(0, 3));
    if (higgs::euler_identity_check(e1, e2, m1, m2, g).defect != 0) ++failures;
  }
  return tally(100, failures, "tuples");
}

GaussRational gauss(Rng& rng) { return {Rational(rng.integer(-4, 4)), Rational(rng.integer(-4, 4))}; }

hitchin::ExactPointPair conjugate_random(Rng& rng, const Mat2<GaussRational>& a, const Mat2<GaussRational>& b) {
  while (true) {
    const auto g = Mat2<GaussRational>::of(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    const GaussRational d = g.det();
    if (d == GaussRational(0)) continue;
    const auto gi = g.adjugate().map([&](const GaussRational& x) { return x / d; });
    return {g * a * gi, g * b * gi};
  }
}

Outcome hitchin_kobayashi() {
  Rng rng(8);
  int failures = 0, polystable = 0, nilpotent = 0;
  const moment_map::FlowConfig cfg;
  while (polystable < 100) {
    const GaussRational l1 = gauss(rng), l2 = gauss(rng);
    if (l1 == GaussRational(0) && l2 == GaussRational(0)) continue;
    const auto p = conjugate_random(rng, Mat2<GaussRational>::of(l1, 0, 0, -l1), Mat2<GaussRational>::of(l2, 0, 0, -l2));
    const auto r = moment_map::solve_metric(hitchin::to_numeric(p), cfg);
    if (!moment_map::hk_cross_check(p, cfg) || r.status != moment_map::FlowStatus::converged || r.residual > 1e-10 ||
        r.iters > 10000) {
      ++failures;
    }
    ++polystable;
  }
  while (nilpotent < 50) {
    const GaussRational c = gauss(rng);
    const auto n = Mat2<GaussRational>::of(0, 1, 0, 0);
    const auto p = rng.coin() ? conjugate_random(rng, n, c * n) : conjugate_random(rng, c * n, n);
    const auto r = moment_map::solve_metric(hitchin::to_numeric(p), cfg);
    if (!moment_map::hk_cross_check(p, cfg) || r.status == moment_map::FlowStatus::converged) ++failures;
    ++nilpotent;
  }
  if (!moment_map::hk_cross_check({}, cfg)) ++failures;
  return {failures == 0, std::to_string(polystable) + " polystable, " + std::to_string(nilpotent) +
                             " nilpotent, 1 zero pair, " + std::to_string(failures) + " failures"};
}

Outcome etale_genus() {
  int failures = 0;
  for (int g = 1; g <= 10; ++g) {
    const auto e = spectral::etale_genus(g);
    if (!e.possible || e.value != 2 * g - 1) ++failures;
  }
  if (spectral::etale_genus(0).possible) ++failures;
  return tally(11, failures, "genera");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  const std::filesystem::path data = VHIGGS_TEST_DATA, golden = VHIGGS_TEST_GOLDEN;
  const auto out = std::filesystem::temp_directory_path() / "vhiggs_acceptance.json";
  const std::vector<std::array<std::string, 3>> cases = {
      {"hitchin", "stable_pair.json", "stable_pair.hitchin.json"},
      {"spectral", "reducible_datum.json", "reducible_datum.spectral.json"},
      {"solve-metric", "nilpotent_point.json", "nilpotent_point.solve-metric.json"}};
  int failures = 0;
  for (const auto& [command, input, expected] : cases) {
    const std::string want = slurp(golden / expected);
    for (int run = 0; run < 2; ++run) {
      std::vector<std::string> args = {"vhiggs", command, (data / input).string(), "--output", out.string()};
      std::vector<char*> argv;
      for (auto& a : args) argv.push_back(a.data());
      const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data());
      if (code != 0 || want.empty() || slurp(out) != want) ++failures;
      std::filesystem::remove(out);
    }
  }
  return tally(6, failures, "runs of 3 worked examples");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cone containment", cone_containment},
      {"universal Cayley-Hamilton", cayley_hamilton},
      {"fibre dimensions", fibre_dimensions},
      {"torsion oracle equivalence", torsion_oracle},
      {"smoothness criterion", smoothness},
      {"stability and simplicity", stability_simplicity},
      {"Euler identity", euler_identity},
      {"Hitchin-Kobayashi point model", hitchin_kobayashi},
      {"etale genus", etale_genus},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
