#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace harmzero {

using Complex = std::complex<double>;

// F(z) = p(z) + conj(q(z)) with p of degree n and q of degree m <= n.
// Harmonic in z but generally not analytic.
struct HarmonicPolynomial {
  std::vector<Complex> a;  // coefficients of p, a[0..n]
  std::vector<Complex> b;  // coefficients of q, b[0..m]

  int degree_p() const { return static_cast<int>(a.size()) - 1; }
  int degree_q() const { return static_cast<int>(b.size()) - 1; }
};

struct Derivatives {
  Complex p_prime;
  Complex q_prime;
};

// p(z) + conj(q(z)), both parts by Horner. Rejects non-finite z.
Complex evaluate(const HarmonicPolynomial& f, Complex z);

// Analytic derivatives p'(z), q'(z).
Derivatives derivatives(const HarmonicPolynomial& f, Complex z);

// Jacobian determinant of F as a planar map: |p'(z)|^2 - |q'(z)|^2.
double jacobian(const HarmonicPolynomial& f, Complex z);

// Cauchy-type exclusion radius: for |z| > R the leading term a_n z^n
// dominates every other term of F, so F(z) != 0. Requires a_n != 0.
//   R = 1 + (sum_{k<n} |a_k| + sum_k |b_k|) / |a_n|
double root_radius_bound(const HarmonicPolynomial& f);

// sum_k |a_k| t^k + sum_k |b_k| t^k at t = |z|; the natural scale of
// evaluation roundoff, used for backward-error residual checks.
double coefficient_majorant(const HarmonicPolynomial& f, double abs_z);

// JSON round trip: {"n":..,"m":..,"a":[[re,im],..],"b":[[re,im],..]}
// with full double precision.
std::string to_json_string(const HarmonicPolynomial& f);
HarmonicPolynomial polynomial_from_json(const std::string& text);
void write_json(std::ostream& os, const HarmonicPolynomial& f);
HarmonicPolynomial read_json(std::istream& is);

}  // namespace harmzero
