#include "dw/bogoliubov.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dw {

double ModeBasis::gram_defect() const {
  const Grid1D& grid = condensate.grid;
  const int M = modes();
  double defect = 0.0;
  auto pair_dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    return grid.dot(a, b);
  };
  defect = std::max(defect, std::abs(pair_dot(condensate.values, condensate.values) - 1.0));
  for (int i = 0; i < M; ++i) {
    defect = std::max(defect, std::abs(pair_dot(condensate.values, excited[i])));
    for (int j = i; j < M; ++j)
      defect = std::max(defect,
                        std::abs(pair_dot(excited[i], excited[j]) - (i == j ? 1.0 : 0.0)));
  }
  return defect;
}

ModeBasis build_mode_basis(const HartreeSolution& sol, std::span<const double> V,
                           const InteractionKernel& w, double lambda, int M) {
  const Grid1D& grid = sol.u.grid;
  const int n = grid.n();
  if (M < 1 || M + 1 > n) throw std::invalid_argument("build_mode_basis: need 1 <= M < n");
  const double h = grid.spacing();

  SymTridiag mf = kinetic_matrix(grid);
  if (lambda != 0.0) {
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = sol.u.values[i] * sol.u.values[i];
    const std::vector<double> hmf = convolve_density(w, grid, rho);
    for (int i = 0; i < n; ++i) mf.diag[i] += V[i] + lambda * hmf[i];
  } else {
    for (int i = 0; i < n; ++i) mf.diag[i] += V[i];
  }

  EigenPairs pairs = lowest_eigenpairs(mf, M + 1);
  ModeBasis basis{sol.u, {}, {}};
  basis.excited.reserve(M);
  basis.mean_field_eigenvalues.assign(pairs.values.begin() + 1, pairs.values.end());
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (int k = 1; k <= M; ++k) {
    std::vector<double> v = std::move(pairs.vectors[k]);
    for (double& x : v) x *= inv_sqrt_h;
    // project out the condensate (the modes are its numerical orthogonal complement)
    const double c = grid.dot(sol.u.values, v) / sol.u.mass;
    for (int i = 0; i < n; ++i) v[i] -= c * sol.u.values[i];
    const double norm = std::sqrt(grid.dot(v, v));
    for (double& x : v) x /= norm;
    // deterministic sign: largest-magnitude component positive
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0.0)
      for (double& x : v) x = -x;
    basis.excited.push_back(std::move(v));
  }
  return basis;
}

ModeBasis build_mode_basis(const HartreeSolution& sol, const TrapSpec& trap,
                           const InteractionKernel& w, double lambda, int M) {
  return build_mode_basis(sol, sample_potential(trap, sol.u.grid), w, lambda, M);
}

QuadraticForm build_quadratic_form(const ModeBasis& basis, std::span<const double> V,
                                   const InteractionKernel& w, double lambda, double mu) {
  const Grid1D& grid = basis.condensate.grid;
  const int n = grid.n();
  const int M = basis.modes();
  const double h = grid.spacing();
  const std::vector<double>& u0 = basis.condensate.values;

  std::vector<double> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = u0[i] * u0[i];
  const std::vector<double> hmf = convolve_density(w, grid, rho);

  QuadraticForm form;
  form.A.resize(M, M);
  form.B.resize(M, M);
  form.K.resize(M, M);

  const SymTridiag kin = kinetic_matrix(grid);
  std::vector<double> tmp(n);
  // h_ij + lambda <u_i| w*|u0|^2 |u_j> : one mean-field apply per column
  for (int j = 0; j < M; ++j) {
    kin.apply(basis.excited[j], tmp);
    for (int i = 0; i < n; ++i)
      tmp[i] += (V[i] + lambda * hmf[i]) * basis.excited[j][i];
    for (int i = 0; i < M; ++i) form.A(i, j) = grid.dot(basis.excited[i], tmp);
  }
  // K_ij = <u_i u0 | w | u0 u_j> via one convolution per column
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < n; ++i) tmp[i] = u0[i] * basis.excited[j][i];
    const std::vector<double> g = convolve_density(w, grid, tmp);
    for (int i = 0; i < M; ++i) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += basis.excited[i][k] * u0[k] * g[k];
      form.K(i, j) = h * acc;
    }
  }
  form.K = 0.5 * (form.K + form.K.transpose()).eval();
  for (int i = 0; i < M; ++i) form.A(i, i) -= mu;
  // w_{0i0j} is the mean-field term already in A; w_{0ij0} = w_{00ij} = K_ij
  form.A += lambda * form.K;
  form.A = 0.5 * (form.A + form.A.transpose()).eval();
  form.B = lambda * form.K;

  Eigen::LLT<Eigen::MatrixXd> lltS(form.A + form.B);
  Eigen::LLT<Eigen::MatrixXd> lltD(form.A - form.B);
  if (lltS.info() != Eigen::Success || lltD.info() != Eigen::Success)
    throw std::runtime_error(
        "build_quadratic_form: Hessian not coercive at this discretization");
  return form;
}

BogoliubovResult diagonalize(const QuadraticForm& form) {
  const int M = static_cast<int>(form.A.rows());
  const Eigen::MatrixXd S = form.A + form.B;
  const Eigen::MatrixXd D = form.A - form.B;
  Eigen::LLT<Eigen::MatrixXd> llt(S);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: A + B is not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd C = L.transpose() * D * L;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) throw std::runtime_error("diagonalize: eigensolver failed");

  BogoliubovResult res;
  res.K = form.K;
  res.frequencies.resize(M);
  Eigen::VectorXd omega(M);
  for (int i = 0; i < M; ++i) {
    const double w2 = es.eigenvalues()(i);
    if (w2 <= 0.0)
      throw std::runtime_error("diagonalize: non-positive excitation frequency");
    omega(i) = std::sqrt(w2);
    res.frequencies[i] = omega(i);
  }
  res.e_B = 0.5 * (omega.sum() - form.A.trace());

  // ground-state covariances of the normal-mode representation
  const Eigen::MatrixXd W = es.eigenvectors();
  const Eigen::MatrixXd Linv = L.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXd::Identity(M, M));
  const Eigen::MatrixXd X =
      0.5 * Linv.transpose() * W * omega.asDiagonal() * W.transpose() * Linv;
  const Eigen::MatrixXd P =
      0.5 * L * W * omega.cwiseInverse().asDiagonal() * W.transpose() * L.transpose();
  res.gamma = 0.5 * (X + P) - 0.5 * Eigen::MatrixXd::Identity(M, M);
  res.alpha = 0.5 * (X - P);
  res.tr_gamma = res.gamma.trace();
  res.quasifree_defect =
      (res.alpha * res.alpha.transpose() - res.gamma * (Eigen::MatrixXd::Identity(M, M) + res.gamma))
          .cwiseAbs()
          .maxCoeff();
  return res;
}

double energy_functional_eval(const BogoliubovResult& result, const QuadraticForm& form) {
  // tr[(H_mf - mu + lambda K) gamma] + lambda Re tr[K alpha]; in this basis the
  // first factor is exactly A and lambda K is B.
  const double value =
      (form.A * result.gamma).trace() + (form.B * result.alpha).trace();
  if (std::abs(value - result.e_B) > 1e-6 * (1.0 + std::abs(result.e_B)))
    throw std::runtime_error(
        "energy_functional_eval: functional disagrees with the diagonalization");
  return value;
}

TrappedDensityReport trapped_density_bound(const BogoliubovResult& result,
                                           const ModeBasis& basis,
                                           std::span<const double> V) {
  const Grid1D& grid = basis.condensate.grid;
  const int n = grid.n();
  const int M = basis.modes();
  TrappedDensityReport rep;
  rep.tr_gamma = result.tr_gamma;
  double tvr = 0.0;
  double rho_min = 0.0;
  for (int x = 0; x < n; ++x) {
    double rho = 0.0;
    for (int i = 0; i < M; ++i) {
      double gi = 0.0;
      for (int j = 0; j < M; ++j) gi += result.gamma(i, j) * basis.excited[j][x];
      rho += basis.excited[i][x] * gi;
    }
    tvr += V[x] * rho;
    rho_min = std::min(rho_min, rho);
  }
  rep.tr_V_rho = grid.spacing() * tvr;
  rep.rho_min = rho_min;
  return rep;
}

BogoliubovPipeline solve_bogoliubov(const TrapSpec& trap, const InteractionKernel& w,
                                    double lambda, int M, const Grid1D& grid, double tol) {
  const std::vector<double> V = sample_potential(trap, grid);
  HartreeOptions opts;
  opts.tol = tol;
  HartreeSolution sol = minimize_hartree(grid, V, w, lambda, 1.0, opts);
  ModeBasis basis = build_mode_basis(sol, V, w, lambda, M);
  QuadraticForm form = build_quadratic_form(basis, V, w, lambda, sol.mu);
  BogoliubovResult result = diagonalize(form);
  return {std::move(sol), std::move(basis), std::move(form), std::move(result)};
}

CouplingScan coupling_scan(std::span<const double> lambdas, const TrapSpec& trap,
                           const InteractionKernel& w, int M, const Grid1D& grid,
                           double tol) {
  for (size_t i = 0; i + 1 < lambdas.size(); ++i)
    if (!(lambdas[i] < lambdas[i + 1]))
      throw std::invalid_argument("coupling_scan: lambdas must be ascending");
  if (!lambdas.empty() && lambdas.front() < 0.0)
    throw std::invalid_argument("coupling_scan: lambdas must be >= 0");

  CouplingScan scan;
  for (double lam : lambdas) {
    if (lam == 0.0) {
      scan.rows.push_back({0.0, 0.0});
      continue;
    }
    scan.rows.push_back({lam, solve_bogoliubov(trap, w, lam, M, grid, tol).result.e_B});
  }
  // fitted exponent on the small-lambda half of the positive couplings
  std::vector<double> lx, ly;
  for (const auto& r : scan.rows)
    if (r.lambda > 0.0 && r.e_B < 0.0) lx.push_back(r.lambda), ly.push_back(-r.e_B);
  const size_t half = (lx.size() + 1) / 2;
  if (half >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < half; ++i) {
      const double X = std::log(lx[i]), Y = std::log(ly[i]);
      sx += X, sy += Y, sxx += X * X, sxy += X * Y;
    }
    scan.small_lambda_exponent = (half * sxy - sx * sy) / (half * sxx - sx * sx);
  }
  return scan;
}

}  // namespace dw
