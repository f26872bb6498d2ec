#pragma once

#include <Eigen/Dense>

#include "dw/hartree.hpp"

namespace dw {

// Condensate mode plus the lowest M excited modes of the projected mean-field
// operator, orthonormal in the grid's L2 inner product.
struct ModeBasis {
  WaveFunction condensate;
  std::vector<std::vector<double>> excited;
  std::vector<double> mean_field_eigenvalues;  // of the excited modes
  int modes() const { return static_cast<int>(excited.size()); }
  double gram_defect() const;  // max deviation of the Gram matrix from identity
};

ModeBasis build_mode_basis(const HartreeSolution& sol, std::span<const double> V,
                           const InteractionKernel& w, double lambda, int M);
ModeBasis build_mode_basis(const HartreeSolution& sol, const TrapSpec& trap,
                           const InteractionKernel& w, double lambda, int M);

// Coefficients of the quadratic Hamiltonian over the excited modes:
// A_ij = h_ij - mu delta_ij + lambda (w_{0i0j} + w_{0ij0}),  B_ij = lambda w_{00ij}.
struct QuadraticForm {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd K;  // kernel matrix <u_i| u_H w u_H |u_j>; B = lambda K
};

QuadraticForm build_quadratic_form(const ModeBasis& basis, std::span<const double> V,
                                   const InteractionKernel& w, double lambda, double mu);

struct BogoliubovResult {
  std::vector<double> frequencies;  // ascending, positive
  double e_B = 0.0;
  Eigen::MatrixXd gamma;
  Eigen::MatrixXd alpha;
  Eigen::MatrixXd K;
  double quasifree_defect = 0.0;  // || alpha alpha^T - gamma (1 + gamma) ||_max
  double tr_gamma = 0.0;
};

// Symplectic diagonalization through the Cholesky factor of A + B;
// frequencies are sqrt of the spectrum of L^T (A - B) L.
BogoliubovResult diagonalize(const QuadraticForm& form);

// Appendix-style functional tr[(H_mf - mu + lambda K) gamma] + lambda tr[K alpha]
// evaluated on the quasi-free pair; throws if it disagrees with e_B.
double energy_functional_eval(const BogoliubovResult& result, const QuadraticForm& form);

struct TrappedDensityReport {
  double tr_V_rho = 0.0;
  double tr_gamma = 0.0;
  double rho_min = 0.0;
};

TrappedDensityReport trapped_density_bound(const BogoliubovResult& result,
                                           const ModeBasis& basis,
                                           std::span<const double> V);

// Hartree solve + basis + quadratic form + diagonalization in one call.
struct BogoliubovPipeline {
  HartreeSolution hartree;
  ModeBasis basis;
  QuadraticForm form;
  BogoliubovResult result;
};

BogoliubovPipeline solve_bogoliubov(const TrapSpec& trap, const InteractionKernel& w,
                                    double lambda, int M, const Grid1D& grid,
                                    double tol = 1e-11);

struct CouplingScanRow {
  double lambda = 0.0;
  double e_B = 0.0;
};

struct CouplingScan {
  std::vector<CouplingScanRow> rows;
  double small_lambda_exponent = 0.0;  // log-log slope over the small-lambda half
};

CouplingScan coupling_scan(std::span<const double> lambdas, const TrapSpec& trap,
                           const InteractionKernel& w, int M, const Grid1D& grid,
                           double tol = 1e-11);

}  // namespace dw
