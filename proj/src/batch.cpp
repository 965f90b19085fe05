#include "vhiggs/batch.hpp"

#include <omp.h>

#include <exception>

namespace vhiggs::batch {

namespace {

std::vector<int> torsion_of(const hitchin::SpectralDatum& b) {
  std::vector<int> out;
  for (const auto& pt : spectral::zero_locus(b).all()) {
    out.push_back(spectral::local_torsion_length(b, pt.chart, pt.factor));
  }
  return out;
}

// Runs f(i) for every index on all threads and rethrows the first exception
// (lowest index) after the loop, since exceptions cannot leave a parallel region.
template <class F>
void parallel_for(size_t n, F&& f) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      f(static_cast<size_t>(i));
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<moment_map::FlowResult> solve_metric_serial(const std::vector<hitchin::NumericPointPair>& pairs,
                                                        const moment_map::FlowConfig& cfg) {
  std::vector<moment_map::FlowResult> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(moment_map::solve_metric(p, cfg));
  return out;
}

std::vector<moment_map::FlowResult> solve_metric_parallel(const std::vector<hitchin::NumericPointPair>& pairs,
                                                          const moment_map::FlowConfig& cfg) {
  std::vector<moment_map::FlowResult> out(pairs.size());
  parallel_for(pairs.size(), [&](size_t i) { out[i] = moment_map::solve_metric(pairs[i], cfg); });
  return out;
}

std::vector<std::vector<int>> torsion_serial(const std::vector<hitchin::SpectralDatum>& data) {
  std::vector<std::vector<int>> out;
  out.reserve(data.size());
  for (const auto& b : data) out.push_back(torsion_of(b));
  return out;
}

std::vector<std::vector<int>> torsion_parallel(const std::vector<hitchin::SpectralDatum>& data) {
  std::vector<std::vector<int>> out(data.size());
  parallel_for(data.size(), [&](size_t i) { out[i] = torsion_of(data[i]); });
  return out;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace vhiggs::batch
