#pragma once

#include <vector>

#include "dw/grid.hpp"

namespace dw {

// Real nonnegative grid-sampled amplitude with a prescribed L2 mass.
struct WaveFunction {
  Grid1D grid;
  std::vector<double> values;
  double mass = 1.0;

  WaveFunction(Grid1D g, std::vector<double> v, double m);

  double norm_squared() const;      // h * sum v^2
  void normalize();                 // rescale so norm_squared == mass
  WaveFunction reflected() const;   // x -> -x
  double max_abs() const;

  // |norm^2 - mass| <= 1e-8 * mass and all values finite
  bool mass_consistent(double rel_tol = 1e-8) const;
};

}  // namespace dw
