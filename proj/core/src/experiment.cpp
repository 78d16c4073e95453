#include "harmzero/experiment.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>
#include <vector>

#include "json.hpp"

namespace harmzero {
namespace {

struct TrialOutcome {
  int count = -1;  // -1: uncertified / rejected
  int resamples = 0;
};

std::vector<TrialOutcome> run_trials(const EnsembleSpec& spec, long trials,
                                     const SolverConfig& solver, int threads) {
  spec.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = static_cast<int>(std::min<long>(threads, trials));

  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (;;) {
      const long t = next.fetch_add(1);
      if (t >= trials) return;
      int resamples = 0;
      const HarmonicPolynomial f =
          sample(spec, static_cast<std::uint64_t>(t), &resamples);
      const ZeroCountResult res = find_zeros(f, solver);
      outcomes[t].resamples = resamples;
      if (res.certified) {
        outcomes[t].count = static_cast<int>(res.zeros.size());
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return outcomes;
}

}  // namespace

SampleStatistics montecarlo_experiment(const EnsembleSpec& spec, long trials,
                                       const SolverConfig& solver,
                                       int threads) {
  const std::vector<TrialOutcome> outcomes =
      run_trials(spec, trials, solver, threads);

  SampleStatistics stats;
  stats.trials = trials;
  double sum = 0.0;
  for (const TrialOutcome& o : outcomes) {
    stats.resamples += o.resamples;
    if (o.count < 0) {
      ++stats.failures;
      continue;
    }
    ++stats.certified;
    ++stats.histogram[o.count];
    sum += o.count;
  }
  if (stats.certified > 0) {
    stats.mean = sum / stats.certified;
    double ss = 0.0;
    for (const TrialOutcome& o : outcomes) {
      if (o.count < 0) continue;
      const double d = o.count - stats.mean;
      ss += d * d;
    }
    stats.variance = stats.certified > 1 ? ss / (stats.certified - 1) : 0.0;
    stats.std_error = std::sqrt(stats.variance / stats.certified);
  }
  stats.valid = stats.failures * 20 <= trials;  // at most 5% uncertified
  return stats;
}

std::string experiment_to_json(const EnsembleSpec& spec,
                               const SampleStatistics& stats) {
  nlohmann::json j;
  j["spec"] = {{"model", model_name(spec.model)},
               {"n", spec.n},
               {"m", spec.m},
               {"seed", spec.seed}};
  j["trials"] = stats.trials;
  j["certified"] = stats.certified;
  j["failures"] = stats.failures;
  j["resamples"] = stats.resamples;
  j["valid"] = stats.valid;
  j["mean"] = stats.mean;
  j["variance"] = stats.variance;
  j["stderr"] = stats.std_error;
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [count, freq] : stats.histogram) {
    hist.push_back({{"count", count}, {"freq", freq}});
  }
  j["histogram"] = hist;
  return j.dump(2);
}

void write_zero_records_csv(std::ostream& os, const EnsembleSpec& spec,
                            long trials, const SolverConfig& solver) {
  spec.validate();
  os << "trial,re,im,jac,orientation\n";
  char buf[160];
  for (long t = 0; t < trials; ++t) {
    const HarmonicPolynomial f = sample(spec, static_cast<std::uint64_t>(t));
    const ZeroCountResult res = find_zeros(f, solver);
    for (const ZeroRecord& rec : res.zeros) {
      std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%s\n", t,
                    rec.z.real(), rec.z.imag(), rec.jac,
                    rec.orientation == Orientation::Preserving ? "preserving"
                                                               : "reversing");
      os << buf;
    }
  }
}

}  // namespace harmzero
