#pragma once

#include <complex>
#include <vector>

#include "harmzero/polynomial.hpp"

namespace harmzero {

enum class Orientation { Preserving, Reversing };

struct ZeroRecord {
  Complex z;
  double jac = 0.0;  // |p'(z)|^2 - |q'(z)|^2
  Orientation orientation = Orientation::Preserving;
  double residual = 0.0;  // |F(z)|
};

struct SolverConfig {
  int max_degree = 20;       // find_zeros refuses larger n
  int max_iterations = 150;  // damped Newton iterations per start; starts
                             // near the Cauchy radius R contract like
                             // (1 - 1/n) per step and need ~ n log R of them
  int starts_factor = 4;     // (starts_factor * n)^2 starting points
  double step_tol = 1e-12;   // convergence: |step| < step_tol * scale
  double residual_tol = 1e-10;    // accept: |F(z)| <= residual_tol * majorant(|z|)
  double dedup_tol = 1e-8;        // dedup radius: dedup_tol * root_radius_bound
  double degenerate_tol = 1e-12;  // singular zero: |jac| < tol * (|p'|^2+|q'|^2)
};

struct ZeroCountResult {
  std::vector<ZeroRecord> zeros;
  int n_plus = 0;
  int n_minus = 0;
  bool certified = false;   // n_plus - n_minus == n and Wilmshurst bounds hold
  bool degenerate = false;  // a singular-Jacobian zero was found; trial rejected
  int densifications = 0;   // grid-doubling retries used
};

// Finds the zeros of F by damped Newton iteration on the 2x2 real system
// (Re F, Im F) = 0 from a quasi-uniform grid of starting points in the disk
// of radius root_radius_bound(F). Converged points are deduplicated and
// classified by Jacobian sign. Completeness is certified through the
// argument-principle identity N+ - N- = n; on a failed certificate the
// grid is densified once (2x points) before reporting uncertified.
ZeroCountResult find_zeros(const HarmonicPolynomial& f,
                           const SolverConfig& cfg = {});

// Total winding of F around |z| = radius, sampled adaptively until
// consecutive argument steps stay below pi/2. Requires radius strictly
// larger than root_radius_bound(F), where the z^n term dominates and the
// result equals n.
int winding_number(const HarmonicPolynomial& f, double radius);

}  // namespace harmzero
