#pragma once

#include <optional>
#include <vector>

#include "dw/kernel.hpp"
#include "dw/linalg.hpp"
#include "dw/trap.hpp"
#include "dw/wavefunction.hpp"

namespace dw {

struct HartreeSolution {
  WaveFunction u;
  double e_H = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool energy_monotone = true;  // non-increasing iterate energies (up to roundoff)
};

struct HartreeOptions {
  double tol = 1e-10;
  int max_iterations = 200000;
  double boundary_rel = 1e-8;   // max allowed |u| at the wall relative to max |u|
  double init_center = 0.0;     // center of the Gaussian initial iterate
};

// Sampled single-well potential; shifted and perturbed wells go through here.
std::vector<double> sample_potential(const TrapSpec& trap, const Grid1D& grid,
                                     double shift = 0.0);

SymTridiag kinetic_matrix(const Grid1D& grid);

double hartree_energy(const WaveFunction& u, std::span<const double> V,
                      const InteractionKernel& w, double lambda);
double hartree_energy(const WaveFunction& u, const TrapSpec& trap,
                      const InteractionKernel& w, double lambda);

// Constrained minimization of the Hartree functional at fixed L2 mass.
// Preconditioned projected gradient descent in imaginary time with Armijo
// backtracking; stops when the Euler-Lagrange residual
// ||(-Delta + V + lambda w*|u|^2 - mu) u|| drops below tol.
HartreeSolution minimize_hartree(const Grid1D& grid, std::span<const double> V,
                                 const InteractionKernel& w, double lambda, double mass,
                                 const HartreeOptions& opts = {});
HartreeSolution minimize_hartree(const TrapSpec& trap, const InteractionKernel& w,
                                 double lambda, double mass, const Grid1D& grid,
                                 double tol = 1e-10);

// mu = (e_H + (lambda/2) * quartic term) / mass, cross-checked against the
// Rayleigh quotient of the mean-field operator.
double chemical_potential(const HartreeSolution& sol, std::span<const double> V,
                          const InteractionKernel& w, double lambda);

// e_H(m, lambda) = m * e_H(1, m*lambda)
double mass_scaled_energy(double m, double lambda, const TrapSpec& trap,
                          const InteractionKernel& w, const Grid1D& grid,
                          double tol = 1e-10);

struct DecayFitReport {
  double slope = 0.0;           // fitted coefficient of log V; should be -alpha
  double expected_alpha = 0.0;  // (2d-2+s)/(4s), minus mu/(2s) when s == 2
  double r_squared = 0.0;
  int points = 0;
};

// Regression of [log u(r) + A(r)] against log V(r) on r in [r_lo, r_hi],
// positive-x side, outer 5% of the box and sub-noise values excluded.
DecayFitReport decay_exponent_fit(const HartreeSolution& sol, const TrapSpec& trap,
                                  double r_lo, double r_hi);

struct MeanFieldControlReport {
  double sup_ratio = 0.0;        // sup (w*|u|^2) / |u|^(2-eta)
  double sup_ratio_grown = 0.0;  // same on a box 25% larger
  bool stable = false;           // growth below 5%
};

MeanFieldControlReport mean_field_control(const TrapSpec& trap, const InteractionKernel& w,
                                          double lambda, double mass, const Grid1D& grid,
                                          double eta, double tol = 1e-10);

struct PerturbationSpec {
  double delta = 0.0;           // amplitude in [0, 1)
  double strip_center = 0.0;
  double strip_halfwidth = 0.0;

  void validate(const Grid1D& grid) const;
};

struct PerturbedComparison {
  HartreeSolution perturbed;
  double delta_e;      // |e_H - e_{H,delta}|
  double l2_distance;  // ||u - u_delta||
};

// Minimize with V(x) (1 - delta * indicator of the strip) and compare against
// the unperturbed solve on the same grid.
PerturbedComparison solve_perturbed(const TrapSpec& trap, const PerturbationSpec& pert,
                                    const InteractionKernel& w, double lambda,
                                    const Grid1D& grid, double tol = 1e-10);

}  // namespace dw
