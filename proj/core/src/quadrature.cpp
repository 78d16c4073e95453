#include "harmzero/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace harmzero {
namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 abscissae).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double lo,
                         double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double resabs = kWgk[7] * std::fabs(fc);

  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    result_kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) {  // j = 1,3,5 are the Gauss abscissae
      result_gauss += kWg[j / 2] * (f1 + f2);
    }
  }

  const double mean = 0.5 * result_kronrod;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  }

  const double value = result_kronrod * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((result_kronrod - result_gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double ulp_floor = 50.0 * 2.220446049250313e-16 * resabs;
  err = std::max(err, ulp_floor);
  return {lo, hi, value, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureConfig& cfg) {
  if (lo == hi) return {0.0, 0.0, 0};
  std::priority_queue<Segment> queue;
  queue.push(evaluate_segment(f, lo, hi));
  double total = queue.top().value;
  double total_err = queue.top().error;
  int splits = 0;

  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (splits >= cfg.max_subdivisions) {
      throw QuadratureError("adaptive quadrature: subdivision budget " +
                            std::to_string(cfg.max_subdivisions) +
                            " exhausted (error " + std::to_string(total_err) +
                            ")");
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // interval at roundoff resolution; accept its contribution as is
      total_err -= worst.error;
      total_err += 0.0;
      queue.push({worst.lo, worst.hi, worst.value, 0.0});
      ++splits;
      continue;
    }
    const Segment left = evaluate_segment(f, worst.lo, mid);
    const Segment right = evaluate_segment(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  return {total, total_err, splits};
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double lo, const QuadratureConfig& cfg) {
  if (cfg.tail_cut == TailCutPolicy::Explicit) {
    return integrate_adaptive(f, lo, cfg.r_max, cfg);
  }
  // t = r/(1+r) maps (lo, inf) to (lo/(1+lo), 1); dr = dt/(1-t)^2.
  const auto transformed = [&f](double t) {
    const double omt = 1.0 - t;
    if (omt <= 0.0) return 0.0;
    const double r = t / omt;
    return f(r) / (omt * omt);
  };
  const double t0 = lo / (1.0 + lo);
  return integrate_adaptive(transformed, t0, 1.0, cfg);
}

}  // namespace harmzero
