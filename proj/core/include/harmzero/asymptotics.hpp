#pragma once

#include <complex>

#include "harmzero/quadrature.hpp"

namespace harmzero {

// Leading constant of E N_F ~ c_alpha n^{3/2} for m = alpha n:
//   c_alpha = (arctan(sqrt(alpha/(1-alpha))) - sqrt(alpha(1-alpha))) / 2.
// Strictly increasing, c_alpha -> pi/4 as alpha -> 1. Requires
// 0 < alpha < 1.
double c_alpha(double alpha);

// Same constant from its defining integral
// int_0^{sqrt(alpha/(1-alpha))} r^2/(1+r^2)^2 dr; agrees with the closed
// form to quadrature tolerance.
double c_alpha_by_quadrature(double alpha, const QuadratureConfig& cfg = {});

enum class MeanRegime { Proportional, FixedM };

// Leading-order prediction for E N_F: c_{m/n} n^{3/2} in the proportional
// regime, n in the fixed-m regime.
double predicted_mean(int n, int m, MeanRegime regime);

// sqrt(alpha/(1-alpha)): the radius separating the n^{3/2} density regime
// from the n regime.
double critical_radius(double alpha);

// Pointwise density asymptotic:
//   |z| < critical radius: n^{3/2} |z| / (2 pi (1+|z|^2)^2)
//   |z| > critical radius: n / (pi (1+|z|^2)^2)
// Undefined (throws) exactly at the critical radius.
double density_asymptotic(std::complex<double> z, int n, double alpha);

enum class Regime { Inside, Outside, Critical };

// Decay classification of q_{alpha n, n}(x) as n -> infinity, by Laplace's
// method applied to the beta-integral representation with exponent
// h(u) = alpha log u + (1-alpha) log(1-u):
//   theta = x/(1+x) < alpha: interior saddle, q -> 1, rate 0
//   theta > alpha: end-point maximum, q ~ e^{-c2 n}/sqrt(n) with
//                  c2 = h(alpha) - h(theta) > 0.
struct RegimeClassification {
  Regime regime = Regime::Inside;
  double x = 0.0;
  double alpha = 0.0;
  double rate = 0.0;  // c2; 0 in the inside regime
};

// Requires x > 0, 0 < alpha < 1, and x != alpha/(1-alpha) (throws at the
// phase boundary).
RegimeClassification laplace_rate(double x, double alpha);

}  // namespace harmzero
