#include "harmzero/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace harmzero {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGoldenAngle = 2.39996322972865332;  // pi (3 - sqrt 5)

struct Evaluation {
  Complex value;
  Complex p_prime;
  Complex q_prime;
};

Evaluation eval_all(const HarmonicPolynomial& f, Complex z) {
  Complex p = f.a.back();
  Complex dp{0.0, 0.0};
  for (int k = static_cast<int>(f.a.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + f.a[k];
  }
  Complex q = f.b.back();
  Complex dq{0.0, 0.0};
  for (int k = static_cast<int>(f.b.size()) - 2; k >= 0; --k) {
    dq = dq * z + q;
    q = q * z + f.b[k];
  }
  return {p + std::conj(q), dp, dq};
}

// One damped Newton run on the real system (Re F, Im F) = 0. The complex
// form of the 2x2 solve: with A = p'(z), B = conj(q'(z)), the step d obeys
// A d + B conj(d) = -F, giving d = (B conj(F) - conj(A) F) / (|A|^2-|B|^2).
std::optional<Complex> newton_polish(const HarmonicPolynomial& f, Complex z,
                                     double radius, const SolverConfig& cfg) {
  Evaluation e = eval_all(f, z);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const Complex a = e.p_prime;
    const Complex b = std::conj(e.q_prime);
    const double det = std::norm(a) - std::norm(b);
    const double deriv_scale = std::norm(a) + std::norm(b);
    if (!(std::fabs(det) > 1e-14 * deriv_scale)) {
      return std::nullopt;  // Jacobian numerically singular along this path
    }
    Complex step = (b * std::conj(e.value) - std::conj(a) * e.value) / det;
    double len = std::abs(step);
    if (!std::isfinite(len)) return std::nullopt;
    if (len > 0.5 * radius) step *= 0.5 * radius / len;

    // halve until the residual decreases
    const double res0 = std::abs(e.value);
    Complex z_next = z + step;
    Evaluation e_next = eval_all(f, z_next);
    int halvings = 0;
    while (std::abs(e_next.value) > res0 && halvings < 12) {
      step *= 0.5;
      z_next = z + step;
      e_next = eval_all(f, z_next);
      ++halvings;
    }
    const double moved = std::abs(z_next - z);
    z = z_next;
    e = e_next;
    if (moved < cfg.step_tol * std::max(1.0, std::abs(z))) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

ZeroCountResult find_zeros(const HarmonicPolynomial& f,
                           const SolverConfig& cfg) {
  const int n = f.degree_p();
  if (n < 1) throw std::invalid_argument("find_zeros: degree of p must be >= 1");
  if (n > cfg.max_degree) {
    throw std::invalid_argument("find_zeros: degree " + std::to_string(n) +
                                " over solver cap " +
                                std::to_string(cfg.max_degree));
  }
  const double radius = root_radius_bound(f);  // throws if a_n == 0
  const double dedup_radius = cfg.dedup_tol * radius;

  ZeroCountResult result;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const long starts =
        static_cast<long>(cfg.starts_factor * n) * (cfg.starts_factor * n)
        << attempt;
    result = ZeroCountResult{};
    result.densifications = attempt;

    std::vector<ZeroRecord> zeros;
    long converged = 0;
    for (long i = 0; i < starts; ++i) {
      // sunflower lattice: quasi-uniform over the root disk
      const double rr = radius * std::sqrt((i + 0.5) / starts);
      const double th = i * kGoldenAngle;
      const std::optional<Complex> z =
          newton_polish(f, Complex{rr * std::cos(th), rr * std::sin(th)},
                        radius, cfg);
      if (!z) continue;
      ++converged;
      const double residual = std::abs(evaluate(f, *z));
      if (residual > cfg.residual_tol * coefficient_majorant(f, std::abs(*z))) {
        continue;
      }
      if (std::abs(*z) >= radius) continue;
      const bool duplicate =
          std::any_of(zeros.begin(), zeros.end(), [&](const ZeroRecord& rec) {
            return std::abs(rec.z - *z) < dedup_radius;
          });
      if (duplicate) continue;

      ZeroRecord rec;
      rec.z = *z;
      rec.residual = residual;
      const Derivatives d = derivatives(f, *z);
      const double deriv_scale = std::norm(d.p_prime) + std::norm(d.q_prime);
      rec.jac = std::norm(d.p_prime) - std::norm(d.q_prime);
      if (std::fabs(rec.jac) < cfg.degenerate_tol * deriv_scale) {
        result.degenerate = true;  // singular zero: reject the trial
      }
      rec.orientation =
          rec.jac > 0.0 ? Orientation::Preserving : Orientation::Reversing;
      zeros.push_back(rec);
    }
    if (converged == 0) {
      throw std::runtime_error(
          "find_zeros: no starting point converged (pathological input)");
    }

    result.zeros = std::move(zeros);
    for (const ZeroRecord& rec : result.zeros) {
      (rec.orientation == Orientation::Preserving ? result.n_plus
                                                  : result.n_minus)++;
    }
    const long total = static_cast<long>(result.zeros.size());
    result.certified = !result.degenerate &&
                       result.n_plus - result.n_minus == n && total >= n &&
                       total <= static_cast<long>(n) * n;
    if (result.certified) break;
  }
  return result;
}

int winding_number(const HarmonicPolynomial& f, double radius) {
  if (!(radius > root_radius_bound(f))) {
    throw std::invalid_argument(
        "winding_number: radius must exceed root_radius_bound");
  }
  for (long samples = 64; samples <= (1L << 22); samples *= 2) {
    double total = 0.0;
    double prev = std::arg(evaluate(f, {radius, 0.0}));
    const double first = prev;
    bool fine = true;
    for (long j = 1; j <= samples; ++j) {
      const double th = 2.0 * kPi * j / samples;
      const double cur =
          j == samples
              ? first
              : std::arg(evaluate(
                    f, {radius * std::cos(th), radius * std::sin(th)}));
      double delta = cur - prev;
      while (delta > kPi) delta -= 2.0 * kPi;
      while (delta < -kPi) delta += 2.0 * kPi;
      if (std::fabs(delta) >= 0.5 * kPi) {
        fine = false;
        break;
      }
      total += delta;
      prev = cur;
    }
    if (fine) return static_cast<int>(std::lround(total / (2.0 * kPi)));
  }
  throw std::runtime_error(
      "winding_number: argument steps failed to settle below pi/2");
}

}  // namespace harmzero
