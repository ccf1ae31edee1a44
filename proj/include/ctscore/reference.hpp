#pragma once

// Single-threaded reference versions of the OpenMP kernels. They follow the
// definitions directly and exist so tests and benchmarks can check the
// parallel paths for identical output.

#include "ctscore/distance.hpp"
#include "ctscore/sweep.hpp"
#include "ctscore/weighting.hpp"

namespace ctscore::serial {

/// Cell-by-cell mismatch counting, no bit packing.
DistanceMatrix distance_matrix(const ResponseMatrix& matrix);

WeightAssignment neighborhood_weights(const DistanceMatrix& d, double a_crit);

SweepTable run_sweep(const ResponseMatrix& matrix, const DistanceMatrix& d,
                     const std::vector<double>& thresholds, WeightMode mode, SdMode sd_mode);

}  // namespace ctscore::serial
