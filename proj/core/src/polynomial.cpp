#include "harmzero/polynomial.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace harmzero {
namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc = coeffs.back();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

// Horner on the derivative coefficients k*c_k without materializing them.
Complex horner_derivative(const std::vector<Complex>& coeffs, Complex z) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {0.0, 0.0};
  Complex acc = static_cast<double>(deg) * coeffs[deg];
  for (int k = deg - 1; k >= 1; --k) {
    acc = acc * z + static_cast<double>(k) * coeffs[k];
  }
  return acc;
}

void check_nonempty(const HarmonicPolynomial& f) {
  if (f.a.empty() || f.b.empty()) {
    throw std::invalid_argument("HarmonicPolynomial: a and b must be nonempty");
  }
}

}  // namespace

Complex evaluate(const HarmonicPolynomial& f, Complex z) {
  check_nonempty(f);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("evaluate: non-finite argument");
  }
  return horner(f.a, z) + std::conj(horner(f.b, z));
}

Derivatives derivatives(const HarmonicPolynomial& f, Complex z) {
  check_nonempty(f);
  return {horner_derivative(f.a, z), horner_derivative(f.b, z)};
}

double jacobian(const HarmonicPolynomial& f, Complex z) {
  const Derivatives d = derivatives(f, z);
  return std::norm(d.p_prime) - std::norm(d.q_prime);
}

double root_radius_bound(const HarmonicPolynomial& f) {
  check_nonempty(f);
  const double lead = std::abs(f.a.back());
  if (lead == 0.0) {
    throw std::invalid_argument("root_radius_bound: leading coefficient is 0");
  }
  double mass = 0.0;
  for (size_t k = 0; k + 1 < f.a.size(); ++k) mass += std::abs(f.a[k]);
  for (const Complex& c : f.b) mass += std::abs(c);
  return 1.0 + mass / lead;
}

double coefficient_majorant(const HarmonicPolynomial& f, double abs_z) {
  check_nonempty(f);
  double sa = 0.0;
  for (auto it = f.a.rbegin(); it != f.a.rend(); ++it) {
    sa = sa * abs_z + std::abs(*it);
  }
  double sb = 0.0;
  for (auto it = f.b.rbegin(); it != f.b.rend(); ++it) {
    sb = sb * abs_z + std::abs(*it);
  }
  return sa + sb;
}

std::string to_json_string(const HarmonicPolynomial& f) {
  check_nonempty(f);
  nlohmann::json j;
  j["n"] = f.degree_p();
  j["m"] = f.degree_q();
  auto pack = [](const std::vector<Complex>& cs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& c : cs) arr.push_back({c.real(), c.imag()});
    return arr;
  };
  j["a"] = pack(f.a);
  j["b"] = pack(f.b);
  return j.dump();
}

HarmonicPolynomial polynomial_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  auto unpack = [](const nlohmann::json& arr) {
    std::vector<Complex> cs;
    cs.reserve(arr.size());
    for (const auto& item : arr) {
      cs.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
    }
    return cs;
  };
  HarmonicPolynomial f{unpack(j.at("a")), unpack(j.at("b"))};
  if (f.degree_p() != n || f.degree_q() != m) {
    throw std::invalid_argument(
        "polynomial_from_json: coefficient lengths disagree with n, m");
  }
  if (m > n || n < 0) {
    throw std::invalid_argument("polynomial_from_json: need 0 <= m <= n");
  }
  return f;
}

void write_json(std::ostream& os, const HarmonicPolynomial& f) {
  os << to_json_string(f) << '\n';
}

HarmonicPolynomial read_json(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return polynomial_from_json(buf.str());
}

}  // namespace harmzero
