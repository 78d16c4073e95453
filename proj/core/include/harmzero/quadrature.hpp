#pragma once

#include <functional>
#include <stdexcept>

namespace harmzero {

enum class TailCutPolicy {
  Transform,  // map (lo, inf) to (t0, 1) via t = r/(1+r); no cutoff needed
  Explicit,   // integrate (lo, r_max) and ignore the remainder
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  TailCutPolicy tail_cut = TailCutPolicy::Transform;
  double r_max = 64.0;  // only used with TailCutPolicy::Explicit
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. Splits the segment
// with the largest error estimate until the global estimate meets
// max(abs_tol, rel_tol*|value|); throws QuadratureError when the
// subdivision budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureConfig& cfg = {});

// Integral over (lo, inf), handled per cfg.tail_cut.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double lo,
                                     const QuadratureConfig& cfg = {});

}  // namespace harmzero
