#include "dw/tunneling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dw {

WellPair solve_well_pair(double s, const InteractionKernel& w, double lambda, double L,
                         const Grid1D& grid, double tol) {
  if (!(L > 0.0)) throw std::invalid_argument("solve_well_pair: L must be > 0");
  const TrapSpec well = TrapSpec::single(s);
  HartreeOptions opts;
  opts.tol = tol;
  opts.init_center = -L / 2.0;
  HartreeSolution left =
      minimize_hartree(grid, sample_potential(well, grid, -L / 2.0), w, lambda, 1.0, opts);
  opts.init_center = +L / 2.0;
  HartreeSolution right =
      minimize_hartree(grid, sample_potential(well, grid, +L / 2.0), w, lambda, 1.0, opts);
  return {std::move(left), std::move(right)};
}

double overlap_integral(const WaveFunction& uL, const WaveFunction& uR) {
  if (uL.grid != uR.grid) throw std::invalid_argument("overlap_integral: grid mismatch");
  return uL.grid.dot(uL.values, uR.values);
}

TunnelingReport tunneling_energy(const WaveFunction& uL, const WaveFunction& uR,
                                 const TrapSpec& trap, const InteractionKernel& w,
                                 double lambda, double mu) {
  trap.validate();
  if (trap.kind != TrapKind::DoubleWell)
    throw std::invalid_argument("tunneling_energy: trap must be a double well");
  if (uL.grid != uR.grid) throw std::invalid_argument("tunneling_energy: grid mismatch");
  const Grid1D& grid = uL.grid;
  const int n = grid.n();
  const double h = grid.spacing();
  const double L = trap.separation_L;

  TunnelingReport rep;
  rep.overlap = overlap_integral(uL, uR);
  rep.agmon_exponent = 2.0 * agmon_distance(L / 2.0, trap.s);
  rep.log_ratio_overlap =
      rep.overlap > 0.0 ? -std::log(rep.overlap) / rep.agmon_exponent : 0.0;

  // route 1: quadratic form of -Delta + V_N
  const SymTridiag kin = kinetic_matrix(grid);
  std::vector<double> AuR(n);
  kin.apply(uR.values, AuR);
  double t1 = 0.0;
  for (int i = 0; i < n; ++i)
    t1 += uL.values[i] * (AuR[i] + eval_potential(trap, grid.x(i)) * uR.values[i]);
  rep.T = h * t1;

  // route 2: tunneling potential V_t^+ = V_N - V_N^+ - lambda w*|uR|^2 + mu
  std::vector<double> hmf(n, 0.0);
  if (lambda != 0.0) {
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = uR.values[i] * uR.values[i];
    hmf = convolve_density(w, grid, rho);
  }
  const TrapSpec well = TrapSpec::single(trap.s);
  double t2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double vt = eval_potential(trap, x) - eval_potential(well, x - L / 2.0) -
                      lambda * hmf[i] + mu;
    t2 += uL.values[i] * vt * uR.values[i];
  }
  rep.T_potential_route = h * t2;

  rep.two_route_gap = std::abs(rep.T - rep.T_potential_route);
  if (rep.two_route_gap > std::max(1e-10, 1e-3 * std::abs(rep.T)))
    throw std::runtime_error(
        "tunneling_energy: the two defining formulas disagree; solver residual too large "
        "for this separation");
  rep.T_negative = rep.T < 0.0;
  return rep;
}

TunnelingReport tunnel_point(double s, const InteractionKernel& w, double lambda, double L,
                             int grid_n, double halfwidth, double tol) {
  if (halfwidth <= 0.0) halfwidth = L / 2.0 + 7.0;
  const Grid1D grid(grid_n, halfwidth);
  const WellPair pair = solve_well_pair(s, w, lambda, L, grid, tol);
  if (std::abs(pair.left.mu - pair.right.mu) > 1e-8 * (1.0 + std::abs(pair.left.mu)))
    throw std::runtime_error("tunnel_point: left/right chemical potentials disagree");
  return tunneling_energy(pair.left.u, pair.right.u, TrapSpec::double_well(s, L), w, lambda,
                          pair.right.mu);
}

bool localization_criterion(long long N, double L, double s, double eps) {
  if (N < 2) throw std::invalid_argument("localization_criterion: N must be >= 2");
  if (!(L > 0.0)) throw std::invalid_argument("localization_criterion: L must be > 0");
  if (!(eps >= 0.0 && eps < 1.0))
    throw std::invalid_argument("localization_criterion: eps must lie in [0,1)");
  return std::log(static_cast<double>(N)) <=
         2.0 * (1.0 - eps) * agmon_distance(L / 2.0, s);
}

namespace {

// quintic smoothstep, C^2 with vanishing first and second derivative at 0 and 1
double smoothstep5(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

}  // namespace

ImsReport ims_split_residual(const TrapSpec& trap, double ell, const Grid1D& grid) {
  trap.validate();
  if (trap.kind != TrapKind::DoubleWell)
    throw std::invalid_argument("ims_split_residual: trap must be a double well");
  const double h = grid.spacing();
  if (ell < 4.0 * h)
    throw std::invalid_argument("ims_split_residual: ell under-resolved (< 4 grid spacings)");
  const int n = grid.n();
  const double L = trap.separation_L;
  const TrapSpec well = TrapSpec::single(trap.s);

  // quadratic partition chi-^2 + chi+^2 = 1 from one C^2 angle profile
  std::vector<double> chim(n), chip(n), etam(n), etap(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double theta = 0.5 * M_PI * smoothstep5((x + ell / 2.0) / ell);
    chim[i] = std::cos(theta);
    chip[i] = std::sin(theta);
    etam[i] = x <= 0.0 ? 0.0 : (x <= ell ? 1.0 : 1.0 - smoothstep5(x / ell - 1.0));
    etap[i] = x >= 0.0 ? 0.0 : (x >= -ell ? 1.0 : 1.0 - smoothstep5(-x / ell - 1.0));
  }

  SymTridiag lhs = kinetic_matrix(grid);
  for (int i = 0; i < n; ++i) lhs.diag[i] += eval_potential(trap, grid.x(i));

  // modified one-well potentials agreeing with V_N on the support of chi-/chi+
  SymTridiag rhs;
  rhs.diag.assign(n, 0.0);
  rhs.off.assign(n - 1, 0.0);
  const double ih2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double vp = eval_potential(well, x - L / 2.0);
    const double vm = eval_potential(well, x + L / 2.0);
    const double vtm = vm + (vp - vm) * etam[i];
    const double vtp = vp + (vm - vp) * etap[i];
    rhs.diag[i] = chim[i] * chim[i] * (2.0 * ih2 + vtm) + chip[i] * chip[i] * (2.0 * ih2 + vtp);
  }
  for (int i = 0; i + 1 < n; ++i) {
    const double pair = chim[i] * chim[i + 1] + chip[i] * chip[i + 1];
    // discrete gradient correction restoring the exact identity
    const double dm = chim[i + 1] - chim[i];
    const double dp = chip[i + 1] - chip[i];
    rhs.off[i] = -ih2 * pair - 0.5 * ih2 * (dm * dm + dp * dp);
  }

  ImsReport rep;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    num = std::max(num, std::abs(lhs.diag[i] - rhs.diag[i]));
    den = std::max(den, std::abs(lhs.diag[i]));
  }
  for (int i = 0; i + 1 < n; ++i) {
    num = std::max(num, std::abs(lhs.off[i] - rhs.off[i]));
    den = std::max(den, std::abs(lhs.off[i]));
  }
  rep.defect = num / den;
  for (int i = 0; i < n; ++i)
    rep.partition_defect = std::max(
        rep.partition_defect, std::abs(chim[i] * chim[i] + chip[i] * chip[i] - 1.0));
  return rep;
}

}  // namespace dw
