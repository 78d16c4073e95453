#include "harmzero/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace harmzero {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

double h_entropy(double alpha, double u) {
  return alpha * std::log(u) + (1.0 - alpha) * std::log1p(-u);
}

}  // namespace

double c_alpha(double alpha) {
  check_alpha(alpha);
  const double ratio = alpha / (1.0 - alpha);
  return 0.5 * (std::atan(std::sqrt(ratio)) - std::sqrt(alpha * (1.0 - alpha)));
}

double c_alpha_by_quadrature(double alpha, const QuadratureConfig& cfg) {
  check_alpha(alpha);
  const auto f = [](double r) {
    const double d = 1.0 + r * r;
    return r * r / (d * d);
  };
  return integrate_adaptive(f, 0.0, critical_radius(alpha), cfg).value;
}

double predicted_mean(int n, int m, MeanRegime regime) {
  if (n < 1 || m < 0 || m > n) {
    throw std::invalid_argument("predicted_mean: need n >= 1, 0 <= m <= n");
  }
  if (regime == MeanRegime::FixedM) return n;
  const double alpha = static_cast<double>(m) / n;
  check_alpha(alpha);  // proportional regime excludes m = 0 and m = n
  return c_alpha(alpha) * std::pow(double(n), 1.5);
}

double critical_radius(double alpha) {
  check_alpha(alpha);
  return std::sqrt(alpha / (1.0 - alpha));
}

double density_asymptotic(std::complex<double> z, int n, double alpha) {
  check_alpha(alpha);
  const double r = std::abs(z);
  const double rc = critical_radius(alpha);
  if (r == rc) {
    throw std::invalid_argument(
        "density_asymptotic: undefined at the critical radius");
  }
  const double d = 1.0 + r * r;
  if (r < rc) {
    return std::pow(double(n), 1.5) * r / (2.0 * kPi * d * d);
  }
  return n / (kPi * d * d);
}

RegimeClassification laplace_rate(double x, double alpha) {
  check_alpha(alpha);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("laplace_rate: x must be finite and > 0");
  }
  const double boundary = alpha / (1.0 - alpha);
  if (x == boundary) {
    throw std::invalid_argument("laplace_rate: x at the phase boundary");
  }
  const double theta = x / (1.0 + x);
  RegimeClassification rc;
  rc.x = x;
  rc.alpha = alpha;
  if (theta < alpha) {
    rc.regime = Regime::Inside;
    rc.rate = 0.0;
  } else {
    rc.regime = Regime::Outside;
    rc.rate = h_entropy(alpha, alpha) - h_entropy(alpha, theta);
  }
  return rc;
}

}  // namespace harmzero
