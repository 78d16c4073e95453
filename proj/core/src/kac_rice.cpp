#include "harmzero/kac_rice.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "harmzero/binomial_tail.hpp"
#include "harmzero/rng.hpp"

namespace harmzero {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_degrees(int n, int m) {
  if (n < 1 || m < 0 || m > n) {
    throw std::invalid_argument("kac_rice: need n >= 1 and 0 <= m <= n");
  }
}

// P_{m,n}(x) by direct summation; small-n oracle helper only.
double p_sum(int m, int n, double x) {
  if (m < 0) return 0.0;
  double total = 0.0;
  const double lx = x > 0.0 ? std::log(x) : 0.0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    if (k > 0 && x == 0.0) break;
    total += std::exp(log_binomial(n, k) + k * lx);
  }
  return total;
}

struct Ratio {
  double num;  // b1^2 + b2^2 - 2 b12^2
  double den;  // b3^2 sqrt((b1+b2)^2 - 4 b12^2)
  bool zero;   // radicand clamped to zero
};

// Shared core of the radial integrand and the density: the b-term ratio
// with the Cauchy-Schwarz radicand clamped at roundoff scale.
Ratio term_ratio(const ReducedTerms& t) {
  const double num =
      t.b1 * t.b1 + t.b2 * t.b2 - 2.0 * t.b12 * t.b12;
  const double sum = t.b1 + t.b2;
  const double radicand = sum * sum - 4.0 * t.b12 * t.b12;
  const double scale = sum * sum;
  if (radicand <= 1e-14 * scale) {
    if (radicand < -1e-12 * scale) {
      throw std::runtime_error(
          "kac_rice: radicand (b1+b2)^2 - 4 b12^2 negative beyond roundoff "
          "at r=" + std::to_string(t.r));
    }
    return {num, 0.0, true};
  }
  return {std::max(num, 0.0), t.b3 * t.b3 * std::sqrt(radicand), false};
}

}  // namespace

ReducedTerms reduced_terms(double r, int n, int m) {
  check_degrees(n, m);
  if (!(r >= 0.0)) {
    throw std::invalid_argument("reduced_terms: r must be >= 0");
  }
  const double x = r * r;
  const double nr4 = n * x * x;
  const double q0 = tail_ratio(m, n, x);
  const double q1 = tail_ratio(m - 1, n - 1, x);
  const double q2 = tail_ratio(m - 2, n - 2, x);
  const double q3 = tail_ratio(m - 1, n - 2, x);

  ReducedTerms t;
  t.r = r;
  t.n = n;
  t.m = m;
  t.b12 = nr4 * q1;
  t.b3 = 1.0 + q0;
  // b3 (nr^4 + r^2) - nr^4, written so the nr^4 terms never cancel
  t.b1 = x + q0 * (nr4 + x);
  t.b2 = t.b3 * (nr4 * q2 + x * q3) - nr4 * q1 * q1;
  return t;
}

FullTerms full_terms(std::complex<double> z, int n, int m) {
  check_degrees(n, m);
  const double x = std::norm(z);
  const double pw = std::pow(1.0 + x, n);        // (1+x)^n
  const double pw1 = std::pow(1.0 + x, n - 1.0);
  const double pw2 = std::pow(1.0 + x, n - 2.0);
  const double n2x2 = double(n) * n * x * x;

  FullTerms ft;
  ft.z = z;
  ft.r3 = pw + p_sum(m, n, x);
  ft.r12 = n2x2 * pw1 * p_sum(m - 1, n - 1, x);
  ft.r1 = ft.r3 * (n2x2 + n * x) * pw2 - n2x2 * pw1 * pw1;
  const double pm1n1 = p_sum(m - 1, n - 1, x);
  ft.r2 = ft.r3 * (n2x2 * p_sum(m - 2, n - 2, x) + n * x * p_sum(m - 1, n - 2, x)) -
          n2x2 * pm1n1 * pm1n1;
  return ft;
}

double radial_integrand(double r, int n, int m) {
  check_degrees(n, m);
  if (!(r >= 0.0)) {
    throw std::invalid_argument("radial_integrand: r must be >= 0");
  }
  if (r == 0.0) return 0.0;
  const ReducedTerms t = reduced_terms(r, n, m);
  const Ratio q = term_ratio(t);
  if (q.zero || q.den == 0.0) return 0.0;
  const double x = r * r;
  return q.num / q.den / (std::sqrt(double(n)) * r * (1.0 + x) * (1.0 + x));
}

double expected_zero_count(int n, int m, const QuadratureConfig& cfg) {
  check_degrees(n, m);
  const auto f = [n, m](double r) { return radial_integrand(r, n, m); };
  const QuadratureResult res = integrate_half_line(f, 0.0, cfg);
  return 2.0 * std::pow(double(n), 1.5) * res.value;
}

double kr_density(std::complex<double> z, int n, int m) {
  check_degrees(n, m);
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  // density = n^{3/2} / (pi r) * radial_integrand(r)
  return std::pow(double(n), 1.5) / (kPi * r) * radial_integrand(r, n, m);
}

double expected_zero_count_annulus(int n, int m, double r0, double r1,
                                   const QuadratureConfig& cfg) {
  check_degrees(n, m);
  if (!(r0 >= 0.0) || !(r1 >= r0)) {
    throw std::invalid_argument("annulus: need 0 <= r0 <= r1");
  }
  if (r0 == r1) return 0.0;
  const auto f = [n, m](double r) { return radial_integrand(r, n, m); };
  const QuadratureResult res =
      std::isinf(r1) ? integrate_half_line(f, r0, cfg)
                     : integrate_adaptive(f, r0, r1, cfg);
  return 2.0 * std::pow(double(n), 1.5) * res.value;
}

double conditional_moment_closed_form(std::complex<double> z, int n, int m) {
  check_degrees(n, m);
  const double r = std::abs(z);
  const ReducedTerms t = reduced_terms(r, n, m);
  const Ratio q = term_ratio(t);
  if (q.zero || q.den == 0.0) return 0.0;
  const double x = r * r;
  // (1/R3)(R1^2+R2^2-2R12^2)/sqrt((R1+R2)^2-4R12^2)
  //   = n (1+x)^{n-2} (b1^2+b2^2-2b12^2) / (b3 sqrt((b1+b2)^2-4b12^2))
  const double scale =
      std::exp(std::log(double(n)) + (n - 2.0) * std::log1p(x));
  return scale * q.num * t.b3 / q.den;  // den carries b3^2; we need one b3
}

double conditional_moment_oracle(std::complex<double> z, int n, int m,
                                 long trials, std::uint64_t seed,
                                 std::uint64_t stream, double* std_error) {
  check_degrees(n, m);
  if (n > 300) {
    throw std::invalid_argument(
        "conditional_moment_oracle: direct covariance sums need n <= 300");
  }
  if (trials < 1000) {
    throw std::invalid_argument("conditional_moment_oracle: trials >= 1000");
  }
  const double x = std::norm(z);
  const double lx = x > 0.0 ? std::log(x) : 0.0;

  // Covariance series of (u1, u2, v1, v2, u3, v3): direct summation, no
  // closed forms, so this path is independent of the R-term algebra.
  double s0b = 0.0, s1a = 0.0, s1b = 0.0, s2a = 0.0, s2b = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0 && x == 0.0) break;
    const double term = std::exp(log_binomial(n, k) + k * lx);
    s1a += k * term;
    s2a += double(k) * k * term;
    if (k <= m) {
      s0b += term;
      s1b += k * term;
      s2b += double(k) * k * term;
    }
  }
  const double s0a = std::exp(n * std::log1p(x));  // (1+x)^n
  const double var_u3 = 0.5 * (s0a + s0b);
  const double cov_u1u3 = 0.5 * s1a;
  const double cov_u2u3 = 0.5 * s1b;
  const double var_u1 = 0.5 * s2a;
  const double var_u2 = 0.5 * s2b;

  // R = C - B A^{-1} B^T; A = var_u3 I2, C diagonal, B has the two
  // nonzero covariances per column. The (U,V) blocks coincide.
  const double r11 = var_u1 - cov_u1u3 * cov_u1u3 / var_u3;
  const double r22 = var_u2 - cov_u2u3 * cov_u2u3 / var_u3;
  const double r12 = -cov_u1u3 * cov_u2u3 / var_u3;

  const double scale = std::max({std::fabs(r11), std::fabs(r22), 1e-300});
  const double psd_tol = 1e-10 * scale;
  if (r11 < -psd_tol || r22 < -psd_tol) {
    throw std::runtime_error(
        "conditional_moment_oracle: conditional covariance not PSD");
  }
  // 2x2 Cholesky with clamping at roundoff scale
  const double l11 = std::sqrt(std::max(r11, 0.0));
  const double l21 = l11 > 0.0 ? r12 / l11 : 0.0;
  const double rem = r22 - l21 * l21;
  if (rem < -psd_tol) {
    throw std::runtime_error(
        "conditional_moment_oracle: conditional covariance not PSD");
  }
  const double l22 = std::sqrt(std::max(rem, 0.0));

  CounterRng rng(seed, stream);
  double sum = 0.0, sum_sq = 0.0;
  for (long t = 0; t < trials; ++t) {
    const double g1 = rng.normal();
    const double g2 = rng.normal();
    const double g3 = rng.normal();
    const double g4 = rng.normal();
    const double u1 = l11 * g1;
    const double u2 = l21 * g1 + l22 * g2;
    const double v1 = l11 * g3;
    const double v2 = l21 * g3 + l22 * g4;
    const double value = std::fabs(u1 * u1 - u2 * u2 + v1 * v1 - v2 * v2);
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / trials;
  if (std_error) {
    const double var =
        std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1.0));
    *std_error = std::sqrt(var / trials);
  }
  return mean;
}

void write_density_profile_csv(std::ostream& os, int n, int m,
                               const std::vector<double>& radii) {
  check_degrees(n, m);
  os << "r,density,n,m\n";
  char buf[96];
  for (const double r : radii) {
    const double d = kr_density({r, 0.0}, n, m);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%d\n", r, d, n, m);
    os << buf;
  }
}

}  // namespace harmzero
