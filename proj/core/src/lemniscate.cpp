#include "harmzero/lemniscate.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace harmzero {
namespace {

// |q'(z)| - |p'(z)|: positive on the orientation-reversing set.
double reversal_field(const HarmonicPolynomial& f, Complex z) {
  const Derivatives d = derivatives(f, z);
  return std::abs(d.q_prime) - std::abs(d.p_prime);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int u, int v) {
    u = find(u);
    v = find(v);
    if (u != v) parent[u] = v;
  }
};

}  // namespace

std::complex<double> GridWindow::cell_center(int i, int j) const {
  const double h = cell_size();
  return center + std::complex<double>(-half_width + (i + 0.5) * h,
                                       -half_width + (j + 0.5) * h);
}

BoolGrid omega_minus_mask(const HarmonicPolynomial& f, const GridWindow& w) {
  if (w.resolution < 64) {
    throw std::invalid_argument("GridWindow: resolution must be >= 64");
  }
  if (!(w.half_width > 0.0)) {
    throw std::invalid_argument("GridWindow: half_width must be > 0");
  }
  BoolGrid mask(w.resolution, w.resolution);
  for (int j = 0; j < w.resolution; ++j) {
    for (int i = 0; i < w.resolution; ++i) {
      mask.set(i, j, reversal_field(f, w.cell_center(i, j)) > 0.0);
    }
  }
  return mask;
}

void restrict_to_disk(BoolGrid& mask, const GridWindow& w, double radius) {
  for (int j = 0; j < mask.height(); ++j) {
    for (int i = 0; i < mask.width(); ++i) {
      if (mask.at(i, j) && std::abs(w.cell_center(i, j) - w.center) > radius) {
        mask.set(i, j, false);
      }
    }
  }
}

int count_components(const BoolGrid& mask) {
  return component_stats(mask).count;
}

ComponentStats component_stats(const BoolGrid& mask) {
  const int w = mask.width();
  const int h = mask.height();
  UnionFind uf(w * h);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (!mask.at(i, j)) continue;
      if (i + 1 < w && mask.at(i + 1, j)) uf.unite(j * w + i, j * w + i + 1);
      if (j + 1 < h && mask.at(i, j + 1)) uf.unite(j * w + i, (j + 1) * w + i);
    }
  }
  std::vector<std::uint8_t> seen(size_t(w) * h, 0);
  std::vector<std::uint8_t> touches(size_t(w) * h, 0);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (!mask.at(i, j)) continue;
      const int root = uf.find(j * w + i);
      seen[root] = 1;
      if (i == 0 || j == 0 || i == w - 1 || j == h - 1) touches[root] = 1;
    }
  }
  ComponentStats stats;
  for (size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) {
      ++stats.count;
      if (touches[v]) ++stats.touching_boundary;
    }
  }
  return stats;
}

double critical_set_radius_bound(const HarmonicPolynomial& f) {
  const int n = f.degree_p();
  if (n < 1 || f.a.back() == Complex{0.0, 0.0}) {
    throw std::invalid_argument(
        "critical_set_radius_bound: p' needs a nonzero leading term");
  }
  double bound = 1.0;
  {
    double mass = 0.0;
    for (int k = 1; k < n; ++k) mass += k * std::abs(f.a[k]);
    bound = std::max(bound, 1.0 + mass / (n * std::abs(f.a.back())));
  }
  const int m = f.degree_q();
  if (m >= 1 && f.b.back() != Complex{0.0, 0.0}) {
    double mass = 0.0;
    for (int k = 1; k < m; ++k) mass += k * std::abs(f.b[k]);
    bound = std::max(bound, 1.0 + mass / (m * std::abs(f.b.back())));
  }
  return bound;
}

void write_pgm(std::ostream& os, const BoolGrid& mask) {
  os << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
  for (int j = 0; j < mask.height(); ++j) {
    for (int i = 0; i < mask.width(); ++i) {
      os.put(mask.at(i, j) ? '\0' : '\xff');
    }
  }
}

std::vector<ContourSegment> critical_lemniscate_contours(
    const HarmonicPolynomial& f, const GridWindow& w) {
  const int res = w.resolution;
  const double h = w.cell_size();
  const double x0 = w.center.real() - w.half_width;
  const double y0 = w.center.imag() - w.half_width;

  // field values on the (res+1)^2 cell corners
  std::vector<double> g(size_t(res + 1) * (res + 1));
  for (int j = 0; j <= res; ++j) {
    for (int i = 0; i <= res; ++i) {
      g[size_t(j) * (res + 1) + i] =
          reversal_field(f, {x0 + i * h, y0 + j * h});
    }
  }
  auto corner = [&](int i, int j) { return g[size_t(j) * (res + 1) + i]; };
  auto lerp = [](double a, double b) { return a / (a - b); };

  std::vector<ContourSegment> segments;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const double v00 = corner(i, j), v10 = corner(i + 1, j);
      const double v01 = corner(i, j + 1), v11 = corner(i + 1, j + 1);
      std::vector<std::complex<double>> pts;
      const double x = x0 + i * h, y = y0 + j * h;
      if ((v00 > 0) != (v10 > 0)) pts.emplace_back(x + h * lerp(v00, v10), y);
      if ((v10 > 0) != (v11 > 0))
        pts.emplace_back(x + h, y + h * lerp(v10, v11));
      if ((v01 > 0) != (v11 > 0))
        pts.emplace_back(x + h * lerp(v01, v11), y + h);
      if ((v00 > 0) != (v01 > 0)) pts.emplace_back(x, y + h * lerp(v00, v01));
      // ambiguous saddle cells produce two chords; emit them pairwise
      for (size_t k = 0; k + 1 < pts.size(); k += 2) {
        segments.push_back(ContourSegment{{pts[k], pts[k + 1]}});
      }
    }
  }
  return segments;
}

void write_contours_csv(std::ostream& os,
                        const std::vector<ContourSegment>& segments) {
  os << "segment_id,re,im\n";
  char buf[96];
  for (size_t id = 0; id < segments.size(); ++id) {
    for (const auto& pt : segments[id].points) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", id, pt.real(),
                    pt.imag());
      os << buf;
    }
  }
}

}  // namespace harmzero
