#include "harmzero/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "harmzero/binomial_tail.hpp"
#include "harmzero/rng.hpp"

namespace harmzero {

const char* model_name(Model model) {
  return model == Model::Truncated ? "truncated" : "li-wei";
}

Model model_from_name(const std::string& name) {
  if (name == "truncated") return Model::Truncated;
  if (name == "li-wei" || name == "liwei") return Model::LiWei;
  throw std::invalid_argument("unknown ensemble model: " + name);
}

void EnsembleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("EnsembleSpec: n must be >= 1");
  if (m < 0 || m > n) {
    throw std::invalid_argument("EnsembleSpec: need 0 <= m <= n");
  }
}

EnsembleSpec EnsembleSpec::proportional(Model model, int n, double alpha,
                                        std::uint64_t seed) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("EnsembleSpec: alpha must be in (0, 1]");
  }
  EnsembleSpec spec;
  spec.model = model;
  spec.n = n;
  spec.m = static_cast<int>(std::llround(alpha * n));
  spec.seed = seed;
  spec.validate();
  return spec;
}

HarmonicPolynomial sample(const EnsembleSpec& spec, std::uint64_t stream_index,
                          int* resample_attempts) {
  spec.validate();
  const int n = spec.n;
  const int m = spec.m;
  const int b_deg = spec.model == Model::Truncated ? n : m;

  int attempts = 0;
  for (;;) {
    // Redraws (a_n == 0, probability zero) move to a displaced stream far
    // above the experiment's contiguous 0..trials-1 range, so they cannot
    // collide with another trial.
    const std::uint64_t offset =
        static_cast<std::uint64_t>(attempts) << 48;
    CounterRng rng(spec.seed, stream_index + offset);

    HarmonicPolynomial f;
    f.a.resize(n + 1);
    f.b.resize(m + 1);
    for (int k = 0; k <= n; ++k) {
      f.a[k] = rng.complex_normal() * std::exp(0.5 * log_binomial(n, k));
    }
    for (int k = 0; k <= m; ++k) {
      f.b[k] = rng.complex_normal() * std::exp(0.5 * log_binomial(b_deg, k));
    }
    if (f.a.back() != Complex{0.0, 0.0}) {
      if (resample_attempts) *resample_attempts = attempts;
      return f;
    }
    ++attempts;
  }
}

}  // namespace harmzero
