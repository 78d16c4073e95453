#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "harmzero/ensemble.hpp"
#include "harmzero/zero_finder.hpp"

namespace harmzero {

struct SampleStatistics {
  long trials = 0;
  long certified = 0;
  long failures = 0;  // uncertified or degenerate trials, excluded from moments
  double mean = 0.0;
  double variance = 0.0;  // unbiased (n-1) over certified trials
  double std_error = 0.0;
  std::map<int, long> histogram;  // zero count -> frequency, certified only
  long resamples = 0;             // a_n == 0 redraws (measure-zero event)
  bool valid = false;             // failures <= 5% of trials
};

// Runs find_zeros on independent samples (streams 0..trials-1) and
// aggregates the zero-count distribution over certified trials. Trials are
// independent and run on `threads` workers (0 = hardware concurrency);
// results are reduced in stream order, so the statistics do not depend on
// scheduling.
SampleStatistics montecarlo_experiment(const EnsembleSpec& spec, long trials,
                                       const SolverConfig& solver = {},
                                       int threads = 0);

// {"spec":.., "trials":.., "mean":.., "variance":.., "stderr":..,
//  "failures":.., "histogram":[{"count":..,"freq":..},..]}
std::string experiment_to_json(const EnsembleSpec& spec,
                               const SampleStatistics& stats);

// Per-zero CSV "trial,re,im,jac,orientation" for the given trial range.
void write_zero_records_csv(std::ostream& os, const EnsembleSpec& spec,
                            long trials, const SolverConfig& solver = {});

}  // namespace harmzero
