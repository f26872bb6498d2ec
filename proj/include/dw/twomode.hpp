#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "dw/linalg.hpp"

namespace dw {

struct TwoModeParams {
  long long N = 2;
  double e_minus = 0.0;
  double e_plus = 0.0;
  double T = 0.0;
  double U = 0.0;

  void validate() const;
};

// Coefficients c_0..c_N over the Fock states |n, N-n>, n = number in the "-" well.
struct TwoModeState {
  long long N = 0;
  std::vector<std::complex<double>> coeffs;

  double norm_squared() const;
  void normalize();
  double exchange_symmetry_defect() const;  // max |c_n - c_{N-n}|
};

// Symmetric tridiagonal H_BH in the Fock basis:
// diag(n)  = e_- n + e_+ (N-n) + (U/2) [n(n-1) + (N-n)(N-n-1)]
// off(n-1,n) = T sqrt(n (N-n+1))
SymTridiag build_hamiltonian(const TwoModeParams& p);

std::pair<double, TwoModeState> ground_state(const TwoModeParams& p);

TwoModeState make_fock(long long N, long long n0);
TwoModeState make_coherent(long long N);
TwoModeState make_gaussian(long long N, double sigma);
// one-axis twisting exp(-i theta Jz^2) then a rotation about Jx by phi that
// puts the squeezed quadrature on Jz
TwoModeState make_squeezed(long long N, double theta, double phi);

struct ObservableReport {
  double mean_N_minus = 0.0;
  double var_N_minus = 0.0;
  double jx_mean = 0.0, jx_var = 0.0;
  double jy_mean = 0.0, jy_var = 0.0;
  double jz_mean = 0.0, jz_var = 0.0;
  double energy = 0.0;
  double energy_collective = 0.0;  // 2T<Jx> + U<Jz^2> route, constants restored
  double energy_interaction = 0.0;
  double uncertainty_product_gap = 0.0;  // var(Jy) var(Jz) - |<Jx>|^2 / 4
};

// Throws if the collective-operator energy disagrees with the Hamiltonian
// quadratic form beyond 1e-8 (|E| + 1).
ObservableReport observables(const TwoModeState& state, const TwoModeParams& p);

struct GaussianEnergy {
  double value = 0.0;
  bool in_window = false;  // 3 <= sigma <= sqrt(N)/3
};

// E_loc + T N (1 - 1/(2 sigma^2)) + U sigma^2 / 4
GaussianEnergy gaussian_energy_closed_form(const TwoModeParams& p, double sigma);

inline double optimal_sigma(const TwoModeParams& p) {
  return std::pow(2.0 * std::abs(p.T) * static_cast<double>(p.N) / p.U, 0.25);
}

enum class Regime { Fock, Josephson, Rabi };

const char* regime_name(Regime r);

struct RegimeReport {
  Regime regime = Regime::Josephson;
  double log_margin_fock = 0.0;  // log10(|T| N / U); negative inside the Fock regime
  double log_margin_rabi = 0.0;  // log10(|T| / (U N)); positive inside the Rabi regime
};

// Fock if |T| < U/N, Rabi if |T| > U N, Josephson between; U = 0 is Rabi.
RegimeReport classify_regime(const TwoModeParams& p);

struct CrossoverRow {
  double T = 0.0;
  double ratio_T_over_U = 0.0;
  double var_N_minus = 0.0;
  double jx_mean = 0.0;
  double energy = 0.0;
  Regime regime = Regime::Josephson;
  double exchange_defect = 0.0;
};

// Ground-state diagnostics over an ascending-|T| list of negative tunnelings.
std::vector<CrossoverRow> crossover_scan(long long N, double U,
                                         std::span<const double> T_list);

}  // namespace dw
