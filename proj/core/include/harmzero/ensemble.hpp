#pragma once

#include <cstdint>
#include <string>

#include "harmzero/polynomial.hpp"

namespace harmzero {

enum class Model { Truncated, LiWei };

const char* model_name(Model model);
Model model_from_name(const std::string& name);

// Gaussian coefficient model. Both ensembles draw independent centered
// complex Gaussians; they differ only in the variance profile of q:
//   Truncated: E|a_k|^2 = binom(n,k),  E|b_k|^2 = binom(n,k), k <= m
//   LiWei:     E|a_k|^2 = binom(n,k),  E|b_k|^2 = binom(m,k)
struct EnsembleSpec {
  Model model = Model::Truncated;
  int n = 1;
  int m = 0;
  std::uint64_t seed = 0;

  double alpha_effective() const { return static_cast<double>(m) / n; }
  void validate() const;  // throws std::invalid_argument

  // m = round(alpha * n); requires 0 < alpha <= 1.
  static EnsembleSpec proportional(Model model, int n, double alpha,
                                   std::uint64_t seed);
};

// Draws one polynomial from the ensemble. Deterministic given
// (spec.seed, stream_index); distinct stream indices give independent
// draws regardless of evaluation order. Coefficient magnitudes are applied
// in log space (exp of half log-binomial), finite for n into the
// thousands. The measure-zero event a_n == 0 is handled by redrawing from
// a displaced stream; the redraw count is reported through
// resample_attempts when non-null.
HarmonicPolynomial sample(const EnsembleSpec& spec, std::uint64_t stream_index,
                          int* resample_attempts = nullptr);

}  // namespace harmzero
