#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "harmzero/polynomial.hpp"

namespace harmzero {

// Square sampling window, resolution x resolution cells.
struct GridWindow {
  std::complex<double> center{0.0, 0.0};
  double half_width = 1.0;
  int resolution = 256;

  // Center of cell (i, j), i = column (re), j = row (im).
  std::complex<double> cell_center(int i, int j) const;
  double cell_size() const { return 2.0 * half_width / resolution; }
};

class BoolGrid {
 public:
  BoolGrid(int width, int height)
      : width_(width), height_(height), cells_(size_t(width) * height, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool at(int i, int j) const { return cells_[size_t(j) * width_ + i] != 0; }
  void set(int i, int j, bool v) { cells_[size_t(j) * width_ + i] = v ? 1 : 0; }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

// Cell (i,j) true iff |p'| < |q'| at the cell center: the discretized
// orientation-reversing set Omega_-.
BoolGrid omega_minus_mask(const HarmonicPolynomial& f, const GridWindow& w);

// Clears cells whose centers lie outside |z - center| <= radius.
void restrict_to_disk(BoolGrid& mask, const GridWindow& w, double radius);

// Number of 4-connected components of true cells (union-find).
int count_components(const BoolGrid& mask);

struct ComponentStats {
  int count = 0;
  int touching_boundary = 0;  // components with a cell on the window edge
};
ComponentStats component_stats(const BoolGrid& mask);

// Exclusion radius beyond which both p' and q' are zero-free (max of their
// Cauchy bounds); window used by full-disk component counts.
double critical_set_radius_bound(const HarmonicPolynomial& f);

// Binary PGM (P5), true cells black on white.
void write_pgm(std::ostream& os, const BoolGrid& mask);

// Marching-squares contour of |q'| - |p'| = 0 over the window grid.
// Rows "segment_id,re,im"; each segment is a polyline in plot order.
struct ContourSegment {
  std::vector<std::complex<double>> points;
};
std::vector<ContourSegment> critical_lemniscate_contours(
    const HarmonicPolynomial& f, const GridWindow& w);
void write_contours_csv(std::ostream& os,
                        const std::vector<ContourSegment>& segments);

}  // namespace harmzero
