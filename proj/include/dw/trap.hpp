#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace dw {

enum class TrapKind { SingleWell, DoubleWell };

// Power-law trap |x|^s, either a single well at the origin or the symmetric
// double well min{V(x - L/2), V(x + L/2)}. dimension_d only enters the decay
// exponent used in fits; all grids are one-dimensional.
struct TrapSpec {
  TrapKind kind = TrapKind::SingleWell;
  double s = 2.0;
  double separation_L = 0.0;
  int dimension_d = 1;

  void validate() const {
    if (s < 2.0) throw std::invalid_argument("TrapSpec: exponent s must be >= 2");
    if (kind == TrapKind::DoubleWell && !(separation_L > 0.0))
      throw std::invalid_argument("TrapSpec: separation_L must be > 0 for a double well");
    if (dimension_d < 1 || dimension_d > 3)
      throw std::invalid_argument("TrapSpec: dimension_d must be 1, 2 or 3");
  }

  static TrapSpec single(double s, int d = 1) { return {TrapKind::SingleWell, s, 0.0, d}; }
  static TrapSpec double_well(double s, double L, int d = 1) {
    return {TrapKind::DoubleWell, s, L, d};
  }
};

double eval_potential(const TrapSpec& spec, double x);

// Agmon distance at zero energy for V = |x|^s: (1 + s/2)^-1 r^(1+s/2).
double agmon_distance(double r, double s);

// Same distance by composite-Simpson quadrature of sqrt(V) on [0, r],
// for arbitrary radial potentials.
double agmon_distance_quadrature(const std::function<double(double)>& V, double r,
                                 int intervals = 1 << 17);

}  // namespace dw
