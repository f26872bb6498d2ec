#include "dw/hartree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dw {

namespace {

double dot_h(double h, std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return h * acc;
}

struct EnergyParts {
  double kinetic = 0.0, potential = 0.0, interaction = 0.0, quartic = 0.0;
  double total() const { return kinetic + potential + interaction; }
};

EnergyParts energy_parts(const Grid1D& grid, std::span<const double> u,
                         std::span<const double> V, const InteractionKernel& w,
                         double lambda) {
  const int n = grid.n();
  const double h = grid.spacing();
  SymTridiag kin = kinetic_matrix(grid);
  std::vector<double> Au(n);
  kin.apply(u, Au);
  EnergyParts p;
  p.kinetic = dot_h(h, u, Au);
  double pot = 0.0;
  for (int i = 0; i < n; ++i) pot += V[i] * u[i] * u[i];
  p.potential = h * pot;
  if (lambda != 0.0) {
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = u[i] * u[i];
    const std::vector<double> conv = convolve_density(w, grid, rho);
    p.quartic = dot_h(h, rho, conv);
    p.interaction = 0.5 * lambda * p.quartic;
  }
  return p;
}

}  // namespace

std::vector<double> sample_potential(const TrapSpec& trap, const Grid1D& grid, double shift) {
  trap.validate();
  std::vector<double> V(grid.n());
  for (int i = 0; i < grid.n(); ++i) V[i] = eval_potential(trap, grid.x(i) - shift);
  return V;
}

SymTridiag kinetic_matrix(const Grid1D& grid) {
  const double h2 = grid.spacing() * grid.spacing();
  SymTridiag t;
  t.diag.assign(grid.n(), 2.0 / h2);
  t.off.assign(grid.n() - 1, -1.0 / h2);
  return t;
}

double hartree_energy(const WaveFunction& u, std::span<const double> V,
                      const InteractionKernel& w, double lambda) {
  if (u.mass == 0.0) return 0.0;
  return energy_parts(u.grid, u.values, V, w, lambda).total();
}

double hartree_energy(const WaveFunction& u, const TrapSpec& trap,
                      const InteractionKernel& w, double lambda) {
  return hartree_energy(u, sample_potential(trap, u.grid), w, lambda);
}

HartreeSolution minimize_hartree(const Grid1D& grid, std::span<const double> V,
                                 const InteractionKernel& w, double lambda, double mass,
                                 const HartreeOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("minimize_hartree: tol must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("minimize_hartree: mass must be > 0");
  if (lambda < 0.0) throw std::invalid_argument("minimize_hartree: lambda must be >= 0");
  w.validate();

  const int n = grid.n();
  const double h = grid.spacing();
  const SymTridiag kin = kinetic_matrix(grid);

  // preconditioner (-Delta + V + 1)^-1
  SymTridiag pre = kin;
  for (int i = 0; i < n; ++i) pre.diag[i] += V[i] + 1.0;
  const TridiagSpdSolver precond(pre);

  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double dx = grid.x(i) - opts.init_center;
    u[i] = std::exp(-0.5 * dx * dx);
  }
  {
    const double c = std::sqrt(mass / dot_h(h, u, u));
    for (double& v : u) v *= c;
  }

  auto energy_of = [&](std::span<const double> v) {
    return energy_parts(grid, v, V, w, lambda).total();
  };

  auto apply_mean_field = [&](std::span<const double> v, std::span<double> out) {
    kin.apply(v, out);
    if (lambda != 0.0) {
      std::vector<double> rho(n);
      for (int i = 0; i < n; ++i) rho[i] = v[i] * v[i];
      const std::vector<double> hmf = convolve_density(w, grid, rho);
      for (int i = 0; i < n; ++i) out[i] += (V[i] + lambda * hmf[i]) * v[i];
    } else {
      for (int i = 0; i < n; ++i) out[i] += V[i] * v[i];
    }
  };

  double E = energy_of(u);
  double mu = E / mass;
  double res = 0.0;
  bool monotone = true;
  bool converged = false;
  int it = 0;
  std::vector<double> Hu(n), r(n), trial(n);

  for (; it < opts.max_iterations; ++it) {
    apply_mean_field(u, Hu);
    mu = dot_h(h, u, Hu) / mass;
    for (int i = 0; i < n; ++i) r[i] = Hu[i] - mu * u[i];
    res = std::sqrt(dot_h(h, r, r));
    if (res <= opts.tol) {
      converged = true;
      break;
    }
    std::vector<double> d = precond.solve(r);
    const double proj = dot_h(h, u, d) / mass;
    for (int i = 0; i < n; ++i) d[i] -= proj * u[i];
    const double g = dot_h(h, r, d);
    const double slack = 5e-14 * (1.0 + std::abs(E));

    double tau = 1.0;
    double Etrial = E;
    for (int bt = 0; bt < 40; ++bt) {
      for (int i = 0; i < n; ++i) trial[i] = u[i] - tau * d[i];
      const double c = std::sqrt(mass / dot_h(h, trial, trial));
      for (double& v : trial) v *= c;
      Etrial = energy_of(trial);
      if (Etrial <= E - 1e-4 * tau * g + slack) break;
      tau *= 0.5;
    }
    if (Etrial > E + 1e-12 * (1.0 + std::abs(E))) monotone = false;
    u.swap(trial);
    E = Etrial;
  }

  if (!converged)
    throw std::runtime_error("minimize_hartree: no convergence after " +
                             std::to_string(opts.max_iterations) +
                             " iterations (residual " + std::to_string(res) + ")");

  // global sign u >= 0
  double mean = 0.0;
  for (double v : u) mean += v;
  if (mean < 0.0)
    for (double& v : u) v = -v;

  double umax = 0.0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  if (std::max(std::abs(u.front()), std::abs(u.back())) > opts.boundary_rel * umax)
    throw std::runtime_error(
        "minimize_hartree: minimizer does not vanish at the wall; enlarge half_width");

  HartreeSolution sol{WaveFunction(grid, std::move(u), mass), E, mu, lambda, res, it,
                      monotone};

  // mu two ways: Rayleigh quotient above vs multiplier formula
  const EnergyParts parts = energy_parts(grid, sol.u.values, V, w, lambda);
  const double mu_formula = (parts.total() + 0.5 * lambda * parts.quartic) / mass;
  if (std::abs(mu_formula - sol.mu) > 1e-8 * (1.0 + std::abs(sol.mu)))
    throw std::runtime_error("minimize_hartree: chemical potential cross-check failed");
  return sol;
}

HartreeSolution minimize_hartree(const TrapSpec& trap, const InteractionKernel& w,
                                 double lambda, double mass, const Grid1D& grid,
                                 double tol) {
  HartreeOptions opts;
  opts.tol = tol;
  return minimize_hartree(grid, sample_potential(trap, grid), w, lambda, mass, opts);
}

double chemical_potential(const HartreeSolution& sol, std::span<const double> V,
                          const InteractionKernel& w, double lambda) {
  const EnergyParts parts = energy_parts(sol.u.grid, sol.u.values, V, w, lambda);
  return (parts.total() + 0.5 * lambda * parts.quartic) / sol.u.mass;
}

double mass_scaled_energy(double m, double lambda, const TrapSpec& trap,
                          const InteractionKernel& w, const Grid1D& grid, double tol) {
  if (!(m > 0.0)) throw std::invalid_argument("mass_scaled_energy: m must be > 0");
  return m * minimize_hartree(trap, w, m * lambda, 1.0, grid, tol).e_H;
}

DecayFitReport decay_exponent_fit(const HartreeSolution& sol, const TrapSpec& trap,
                                  double r_lo, double r_hi) {
  trap.validate();
  if (trap.kind != TrapKind::SingleWell)
    throw std::invalid_argument("decay_exponent_fit: single-well solutions only");
  const Grid1D& grid = sol.u.grid;
  const double umax = sol.u.max_abs();
  const double floor = 1e3 * 2.220446049250313e-16 * umax;

  std::vector<double> zs, ys;
  for (int i = 0; i < grid.n(); ++i) {
    const double r = grid.x(i);
    if (r < r_lo || r > r_hi) continue;
    if (std::abs(r) > 0.95 * grid.halfwidth()) continue;
    const double u = sol.u.values[i];
    if (u <= floor) continue;
    const double V = eval_potential(trap, r);
    if (V <= 0.0) continue;
    zs.push_back(std::log(V));
    ys.push_back(std::log(u) + agmon_distance(r, trap.s));
  }
  const int npts = static_cast<int>(zs.size());
  if (npts < 8)
    throw std::invalid_argument("decay_exponent_fit: window has fewer than 8 grid points");

  double zm = 0.0, ym = 0.0;
  for (int i = 0; i < npts; ++i) zm += zs[i], ym += ys[i];
  zm /= npts, ym /= npts;
  double szz = 0.0, szy = 0.0, syy = 0.0;
  for (int i = 0; i < npts; ++i) {
    szz += (zs[i] - zm) * (zs[i] - zm);
    szy += (zs[i] - zm) * (ys[i] - ym);
    syy += (ys[i] - ym) * (ys[i] - ym);
  }
  DecayFitReport rep;
  rep.slope = szy / szz;
  rep.points = npts;
  double ss_res = 0.0;
  for (int i = 0; i < npts; ++i) {
    const double fit = ym + rep.slope * (zs[i] - zm);
    ss_res += (ys[i] - fit) * (ys[i] - fit);
  }
  rep.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  rep.expected_alpha = (2.0 * trap.dimension_d - 2.0 + trap.s) / (4.0 * trap.s);
  if (trap.s == 2.0) rep.expected_alpha -= sol.mu / (2.0 * trap.s);
  return rep;
}

namespace {

double sup_mf_ratio(const HartreeSolution& sol, const InteractionKernel& w, double eta) {
  const Grid1D& grid = sol.u.grid;
  const int n = grid.n();
  std::vector<double> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = sol.u.values[i] * sol.u.values[i];
  const std::vector<double> hmf = convolve_density(w, grid, rho);
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(grid.x(i)) > 0.95 * grid.halfwidth()) continue;
    const double u = sol.u.values[i];
    if (u <= 1e-100) continue;
    sup = std::max(sup, hmf[i] / std::pow(u, 2.0 - eta));
  }
  return sup;
}

}  // namespace

MeanFieldControlReport mean_field_control(const TrapSpec& trap, const InteractionKernel& w,
                                          double lambda, double mass, const Grid1D& grid,
                                          double eta, double tol) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("mean_field_control: eta must lie in (0,1)");
  MeanFieldControlReport rep;
  const HartreeSolution sol = minimize_hartree(trap, w, lambda, mass, grid, tol);
  rep.sup_ratio = sup_mf_ratio(sol, w, eta);
  // same spacing, box 25% larger
  const int n_grow = grid.n() + 2 * static_cast<int>(std::ceil(0.125 * (grid.n() - 1)));
  const Grid1D grown(n_grow, grid.halfwidth() + 0.5 * (n_grow - grid.n()) * grid.spacing());
  const HartreeSolution sol2 = minimize_hartree(trap, w, lambda, mass, grown, tol);
  rep.sup_ratio_grown = sup_mf_ratio(sol2, w, eta);
  rep.stable = rep.sup_ratio_grown <= 1.05 * rep.sup_ratio;
  return rep;
}

void PerturbationSpec::validate(const Grid1D& grid) const {
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::invalid_argument("PerturbationSpec: delta must lie in [0,1)");
  if (!(strip_halfwidth >= 0.0))
    throw std::invalid_argument("PerturbationSpec: strip_halfwidth must be >= 0");
  if (std::abs(strip_center) + strip_halfwidth > grid.halfwidth())
    throw std::invalid_argument("PerturbationSpec: strip extends outside the box");
}

PerturbedComparison solve_perturbed(const TrapSpec& trap, const PerturbationSpec& pert,
                                    const InteractionKernel& w, double lambda,
                                    const Grid1D& grid, double tol) {
  trap.validate();
  if (trap.kind != TrapKind::SingleWell)
    throw std::invalid_argument("solve_perturbed: single-well traps only");
  pert.validate(grid);

  const HartreeSolution base = minimize_hartree(trap, w, lambda, 1.0, grid, tol);
  std::vector<double> V = sample_potential(trap, grid);
  for (int i = 0; i < grid.n(); ++i)
    if (std::abs(grid.x(i) - pert.strip_center) <= pert.strip_halfwidth)
      V[i] *= 1.0 - pert.delta;

  HartreeOptions opts;
  opts.tol = tol;
  PerturbedComparison cmp{minimize_hartree(grid, V, w, lambda, 1.0, opts), 0.0, 0.0};
  cmp.delta_e = std::abs(base.e_H - cmp.perturbed.e_H);
  std::vector<double> diff(grid.n());
  for (int i = 0; i < grid.n(); ++i) diff[i] = base.u.values[i] - cmp.perturbed.u.values[i];
  cmp.l2_distance = std::sqrt(grid.dot(diff, diff));
  return cmp;
}

}  // namespace dw
