#pragma once

// Corpus-level kernels. Each item is independent, so the parallel versions
// split the corpus across OpenMP threads and write results by index; the
// serial versions are the reference they are tested against.

#include <vector>

#include "vhiggs/moment_map.hpp"
#include "vhiggs/spectral.hpp"

namespace vhiggs::batch {

std::vector<moment_map::FlowResult> solve_metric_serial(const std::vector<hitchin::NumericPointPair>& pairs,
                                                        const moment_map::FlowConfig& cfg);
std::vector<moment_map::FlowResult> solve_metric_parallel(const std::vector<hitchin::NumericPointPair>& pairs,
                                                          const moment_map::FlowConfig& cfg);

/// Torsion lengths of every zero of every datum, flattened in zero_locus order.
std::vector<std::vector<int>> torsion_serial(const std::vector<hitchin::SpectralDatum>& data);
std::vector<std::vector<int>> torsion_parallel(const std::vector<hitchin::SpectralDatum>& data);

/// Number of threads the parallel kernels use.
int thread_count();

}  // namespace vhiggs::batch
