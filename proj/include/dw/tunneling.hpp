#pragma once

#include "dw/hartree.hpp"

namespace dw {

struct TunnelingReport {
  double overlap = 0.0;            // int uL uR
  double T = 0.0;                  // <uL | (-Delta + V_N) | uR>
  double T_potential_route = 0.0;  // int uL (V_N - V_N^+ - lambda w*|uR|^2 + mu) uR
  double two_route_gap = 0.0;
  double agmon_exponent = 0.0;     // 2 A(L/2)
  double log_ratio_overlap = 0.0;  // -log(overlap) / (2 A(L/2))
  bool T_negative = false;
};

// Hartree minimizers of the two shifted single wells on one common grid.
struct WellPair {
  HartreeSolution left;   // well centered at -L/2
  HartreeSolution right;  // well centered at +L/2
};

WellPair solve_well_pair(double s, const InteractionKernel& w, double lambda, double L,
                         const Grid1D& grid, double tol = 1e-11);

double overlap_integral(const WaveFunction& uL, const WaveFunction& uR);

// T by both defining routes; throws if they disagree beyond
// max(1e-10, 1e-3 |T|), which signals an under-converged pair of solves.
TunnelingReport tunneling_energy(const WaveFunction& uL, const WaveFunction& uR,
                                 const TrapSpec& trap, const InteractionKernel& w,
                                 double lambda, double mu);

// Convenience: pair solve plus report for one separation L. halfwidth <= 0
// picks L/2 + 7 automatically.
TunnelingReport tunnel_point(double s, const InteractionKernel& w, double lambda, double L,
                             int grid_n, double halfwidth = 0.0, double tol = 1e-11);

// log N <= 2 (1 - eps) A(L/2)
bool localization_criterion(long long N, double L, double s, double eps);

struct ImsReport {
  double defect = 0.0;            // ||LHS - RHS||_max / ||LHS||_max
  double partition_defect = 0.0;  // max |chi-^2 + chi+^2 - 1|
};

// Exact splitting of -Delta + V_N into the two localized pieces; the defect
// of the assembled matrices is pure floating-point noise.
ImsReport ims_split_residual(const TrapSpec& trap, double ell, const Grid1D& grid);

}  // namespace dw
