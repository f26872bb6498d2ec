#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace dw {

// Uniform symmetric 1D grid on [-halfwidth, +halfwidth] with hard-wall
// (Dirichlet) boundaries. Quadrature weight is the uniform spacing h;
// fields live on grid points and are assumed to vanish at the walls.
class Grid1D {
 public:
  Grid1D(int n_points, double half_width) : n_(n_points), half_(half_width) {
    if (n_points < 16) throw std::invalid_argument("Grid1D: n_points must be >= 16");
    if (!(half_width > 0.0)) throw std::invalid_argument("Grid1D: half_width must be > 0");
  }

  int n() const { return n_; }
  double halfwidth() const { return half_; }
  double spacing() const { return 2.0 * half_ / (n_ - 1); }
  double x(int i) const { return -half_ + i * spacing(); }

  std::vector<double> points() const {
    std::vector<double> xs(n_);
    for (int i = 0; i < n_; ++i) xs[i] = x(i);
    return xs;
  }

  // L2 inner product with uniform weight h
  double dot(std::span<const double> a, std::span<const double> b) const;

  bool operator==(const Grid1D& o) const { return n_ == o.n_ && half_ == o.half_; }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }

 private:
  int n_;
  double half_;
};

}  // namespace dw
