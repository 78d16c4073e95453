#include "harmzero/binomial_tail.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harmzero {
namespace {

double lgamma_ts(double v) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(v, &sign);
#else
  return std::lgamma(v);
#endif
}

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 2000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int it = 1; it <= kMaxIter; ++it) {
    const double m = it;
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("log_binomial: need 0 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  if (k == 0 || k == n) return 0.0;
  return lgamma_ts(n + 1.0) - lgamma_ts(k + 1.0) - lgamma_ts(n - k + 1.0);
}

double tail_ratio(int m, int n, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("tail_ratio: x must be finite and >= 0");
  }
  if (n < 0) throw std::invalid_argument("tail_ratio: n must be >= 0");
  if (m < 0) return 0.0;
  if (m >= n) return 1.0;
  if (x == 0.0) return 1.0;

  // q_{m,n}(x) = P(Bin(n, x/(1+x)) <= m) = I_y(a, b) at y = 1/(1+x),
  // a = n-m, b = m+1.
  const double a = n - m;
  const double b = m + 1.0;
  const double log_y = -std::log1p(x);  // log(1/(1+x)), exact form
  const double log_1my = std::log(x) + log_y;
  const double y = std::exp(log_y);
  const double one_my = x / (1.0 + x);

  const double log_bt = lgamma_ts(a + b) - lgamma_ts(a) - lgamma_ts(b) +
                        a * log_y + b * log_1my;
  const double bt = std::exp(log_bt);

  double value;
  if (y < (a + 1.0) / (a + b + 2.0)) {
    value = bt * beta_cf(a, b, y) / a;
  } else {
    value = 1.0 - bt * beta_cf(b, a, one_my) / b;
  }
  if (value < 0.0) value = 0.0;
  if (value > 1.0) value = 1.0;
  return value;
}

}  // namespace harmzero
