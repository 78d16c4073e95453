#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "harmzero/quadrature.hpp"

namespace harmzero {

// Normalized radial terms of the expected-zero-count integrand at radius r,
// built from truncated binomial ratios q_{m,n}(r^2):
//   b12 = n r^4 q_{m-1,n-1}
//   b3  = 1 + q_{m,n}
//   b1  = b3 (n r^4 + r^2) - n r^4
//   b2  = b3 [n r^4 q_{m-2,n-2} + r^2 q_{m-1,n-2}] - n r^4 q_{m-1,n-1}^2
// Satisfies b3 >= 1, b1 >= 0, b2 >= 0 and b1 b2 >= b12^2 (Cauchy-Schwarz,
// these are conditional Gaussian second moments in disguise).
struct ReducedTerms {
  double b1 = 0.0;
  double b2 = 0.0;
  double b12 = 0.0;
  double b3 = 1.0;
  double r = 0.0;
  int n = 0;
  int m = 0;
};

// Raw covariance combinations of the exact expectation formula. They carry
// factors (1+|z|^2)^{~2n} and overflow for n beyond a few hundred; kept for
// small-n cross-checks of the normalized route, which satisfies
//   R1,R2,R12 = n (1+|z|^2)^{2n-2} * (b1,b2,b12),   R3 = (1+|z|^2)^n b3.
struct FullTerms {
  double r1 = 0.0;
  double r2 = 0.0;
  double r12 = 0.0;
  double r3 = 1.0;
  std::complex<double> z;
};

ReducedTerms reduced_terms(double r, int n, int m);
FullTerms full_terms(std::complex<double> z, int n, int m);

// Integrand of the reduced radial formula
//   E N_F = 2 n^{3/2} * integral_0^inf radial_integrand(r) dr,
// i.e. (1/(sqrt(n) r (1+r^2)^2)) * (b1^2+b2^2-2 b12^2) /
//      (b3^2 sqrt((b1+b2)^2 - 4 b12^2)),
// with value 0 at r = 0. Radicands within roundoff of zero are clamped.
double radial_integrand(double r, int n, int m);

// Expected number of zeros over the whole plane, by adaptive quadrature of
// the radial integrand. Requires n >= 1, 0 <= m <= n.
double expected_zero_count(int n, int m, const QuadratureConfig& cfg = {});

// Expected zeros per unit area at z (rotation invariant):
//   n / (pi |z|^2 (1+|z|^2)^2) * (b1^2+b2^2-2 b12^2) /
//   (b3^2 sqrt((b1+b2)^2 - 4 b12^2)),
// with limit 0 at the origin.
double kr_density(std::complex<double> z, int n, int m);

// 2 pi * integral_{r0}^{r1} kr_density(r) r dr; additive over disjoint
// annuli. r1 may be infinity.
double expected_zero_count_annulus(int n, int m, double r0, double r1,
                                   const QuadratureConfig& cfg = {});

// Closed-form conditional Jacobian moment E|U1^2 - U2^2 + V1^2 - V2^2| =
// (1/R3)(R1^2+R2^2-2 R12^2)/sqrt((R1+R2)^2-4 R12^2), evaluated through the
// normalized terms.
double conditional_moment_closed_form(std::complex<double> z, int n, int m);

// Monte Carlo check of the closed form: assembles the conditional
// covariance R = C - B A^{-1} B^T of (U1,U2,V1,V2) directly from the
// defining covariance series (independent of the R-term algebra), samples
// the Gaussian vector and averages |U1^2-U2^2+V1^2-V2^2|. Returns the
// sample mean; *std_error receives its standard error when non-null.
// Throws if the assembled covariance fails positive semidefiniteness
// beyond tolerance.
double conditional_moment_oracle(std::complex<double> z, int n, int m,
                                 long trials, std::uint64_t seed,
                                 std::uint64_t stream,
                                 double* std_error = nullptr);

// CSV profile "r,density,n,m" over the given radii, full double precision.
void write_density_profile_csv(std::ostream& os, int n, int m,
                               const std::vector<double>& radii);

}  // namespace harmzero
