#include "dw/twomode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dw {

namespace {

using cdouble = std::complex<double>;

// a_-^dag a_+ |n> = sqrt((n+1)(N-n)) |n+1>,  a_+^dag a_- |n> = sqrt(n(N-n+1)) |n-1>
double up_coeff(long long n, long long N) {
  return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(N - n));
}
double down_coeff(long long n, long long N) {
  return std::sqrt(static_cast<double>(n) * static_cast<double>(N - n + 1));
}

std::vector<cdouble> jx_apply(const std::vector<cdouble>& c, long long N) {
  std::vector<cdouble> out(c.size(), 0.0);
  for (long long n = 0; n <= N; ++n) {
    if (n + 1 <= N) out[n + 1] += 0.5 * up_coeff(n, N) * c[n];
    if (n - 1 >= 0) out[n - 1] += 0.5 * down_coeff(n, N) * c[n];
  }
  return out;
}

std::vector<cdouble> jy_apply(const std::vector<cdouble>& c, long long N) {
  const cdouble half_over_i(0.0, -0.5);
  std::vector<cdouble> out(c.size(), 0.0);
  for (long long n = 0; n <= N; ++n) {
    if (n + 1 <= N) out[n + 1] += half_over_i * up_coeff(n, N) * c[n];
    if (n - 1 >= 0) out[n - 1] -= half_over_i * down_coeff(n, N) * c[n];
  }
  return out;
}

double mean_of(const std::vector<cdouble>& c, const std::vector<cdouble>& oc) {
  cdouble acc = 0.0;
  for (size_t i = 0; i < c.size(); ++i) acc += std::conj(c[i]) * oc[i];
  return acc.real();
}

double second_moment(const std::vector<cdouble>& oc) {
  double acc = 0.0;
  for (const cdouble& v : oc) acc += std::norm(v);
  return acc;
}

}  // namespace

void TwoModeParams::validate() const {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("TwoModeParams: N must be an even integer >= 2");
  if (U < 0.0) throw std::invalid_argument("TwoModeParams: U must be >= 0");
}

double TwoModeState::norm_squared() const {
  double acc = 0.0;
  for (const auto& c : coeffs) acc += std::norm(c);
  return acc;
}

void TwoModeState::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw std::runtime_error("TwoModeState: cannot normalize the zero state");
  const double s = 1.0 / std::sqrt(n2);
  for (auto& c : coeffs) c *= s;
}

double TwoModeState::exchange_symmetry_defect() const {
  double d = 0.0;
  for (long long n = 0; n <= N; ++n) d = std::max(d, std::abs(coeffs[n] - coeffs[N - n]));
  return d;
}

SymTridiag build_hamiltonian(const TwoModeParams& p) {
  p.validate();
  const long long N = p.N;
  SymTridiag t;
  t.diag.resize(N + 1);
  t.off.resize(N);
  for (long long n = 0; n <= N; ++n) {
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(N - n);
    t.diag[n] = p.e_minus * nd + p.e_plus * md +
                0.5 * p.U * (nd * (nd - 1.0) + md * (md - 1.0));
  }
  for (long long n = 1; n <= N; ++n) t.off[n - 1] = p.T * down_coeff(n, N);
  return t;
}

std::pair<double, TwoModeState> ground_state(const TwoModeParams& p) {
  const SymTridiag H = build_hamiltonian(p);
  EigenPairs ep = lowest_eigenpairs(H, 1);
  TwoModeState state{p.N, {}};
  state.coeffs.reserve(p.N + 1);
  const std::vector<double>& v = ep.vectors[0];
  // fix the global phase: c_{N/2} > 0, falling back to the largest entry
  long long pivot = p.N / 2;
  if (v[pivot] == 0.0) {
    pivot = 0;
    for (long long i = 1; i <= p.N; ++i)
      if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
  }
  const double sign = v[pivot] < 0.0 ? -1.0 : 1.0;
  for (long long n = 0; n <= p.N; ++n) state.coeffs.emplace_back(sign * v[n], 0.0);
  state.normalize();
  return {ep.values[0], std::move(state)};
}

TwoModeState make_fock(long long N, long long n0) {
  if (n0 < 0 || n0 > N) throw std::invalid_argument("make_fock: need 0 <= n0 <= N");
  TwoModeState s{N, std::vector<cdouble>(N + 1, 0.0)};
  s.coeffs[n0] = 1.0;
  return s;
}

TwoModeState make_coherent(long long N) {
  TwoModeState s{N, std::vector<cdouble>(N + 1, 0.0)};
  for (long long n = 0; n <= N; ++n) {
    const double ln = 0.5 * (std::lgamma(N + 1.0) - std::lgamma(n + 1.0) -
                             std::lgamma(N - n + 1.0)) -
                      0.5 * N * std::log(2.0);
    s.coeffs[n] = std::exp(ln);
  }
  s.normalize();
  return s;
}

TwoModeState make_gaussian(long long N, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("make_gaussian: sigma must be > 0");
  TwoModeState s{N, std::vector<cdouble>(N + 1, 0.0)};
  const double half = 0.5 * N;
  for (long long n = 0; n <= N; ++n) {
    const double d = (n - half) / sigma;
    s.coeffs[n] = std::exp(-d * d);
  }
  s.normalize();
  return s;
}

TwoModeState make_squeezed(long long N, double theta, double phi) {
  TwoModeState s = make_coherent(N);
  const double half = 0.5 * N;
  for (long long n = 0; n <= N; ++n) {
    const double m = n - half;
    s.coeffs[n] *= std::exp(cdouble(0.0, -theta * m * m));
  }
  // rotation about Jx via the eigenbasis of its tridiagonal matrix
  SymTridiag jx;
  jx.diag.assign(N + 1, 0.0);
  jx.off.resize(N);
  for (long long n = 1; n <= N; ++n) jx.off[n - 1] = 0.5 * down_coeff(n, N);
  EigenPairs ep = full_eigen(jx);

  std::vector<cdouble> proj(N + 1, 0.0);
  for (long long k = 0; k <= N; ++k) {
    const std::vector<double>& q = ep.vectors[k];
    cdouble acc = 0.0;
    for (long long n = 0; n <= N; ++n) acc += q[n] * s.coeffs[n];
    proj[k] = acc * std::exp(cdouble(0.0, phi * ep.values[k]));
  }
  std::fill(s.coeffs.begin(), s.coeffs.end(), cdouble(0.0));
  for (long long k = 0; k <= N; ++k) {
    const std::vector<double>& q = ep.vectors[k];
    for (long long n = 0; n <= N; ++n) s.coeffs[n] += q[n] * proj[k];
  }
  s.normalize();
  return s;
}

ObservableReport observables(const TwoModeState& state, const TwoModeParams& p) {
  p.validate();
  if (state.N != p.N) throw std::invalid_argument("observables: state/params N mismatch");
  if (std::abs(state.norm_squared() - 1.0) > 1e-10)
    throw std::invalid_argument("observables: state is not normalized");
  const long long N = p.N;
  const std::vector<cdouble>& c = state.coeffs;

  ObservableReport rep;
  for (long long n = 0; n <= N; ++n) rep.mean_N_minus += n * std::norm(c[n]);
  for (long long n = 0; n <= N; ++n) {
    const double d = n - rep.mean_N_minus;
    rep.var_N_minus += d * d * std::norm(c[n]);
  }
  const double half = 0.5 * N;
  double jz2 = 0.0;
  for (long long n = 0; n <= N; ++n) {
    const double m = n - half;
    rep.jz_mean += m * std::norm(c[n]);
    jz2 += m * m * std::norm(c[n]);
  }
  rep.jz_var = jz2 - rep.jz_mean * rep.jz_mean;

  const std::vector<cdouble> jxc = jx_apply(c, N);
  rep.jx_mean = mean_of(c, jxc);
  rep.jx_var = second_moment(jxc) - rep.jx_mean * rep.jx_mean;
  const std::vector<cdouble> jyc = jy_apply(c, N);
  rep.jy_mean = mean_of(c, jyc);
  rep.jy_var = second_moment(jyc) - rep.jy_mean * rep.jy_mean;

  // energy route 1: tridiagonal quadratic form
  const SymTridiag H = build_hamiltonian(p);
  double e1 = 0.0;
  for (long long n = 0; n <= N; ++n) e1 += H.diag[n] * std::norm(c[n]);
  for (long long n = 1; n <= N; ++n)
    e1 += 2.0 * H.off[n - 1] * (std::conj(c[n]) * c[n - 1]).real();
  rep.energy = e1;

  // energy route 2: collective operators with the dropped constants restored
  const double nd = static_cast<double>(N);
  const double e_const = 0.5 * (p.e_plus + p.e_minus) * nd + 0.25 * p.U * nd * (nd - 2.0);
  rep.energy_collective = 2.0 * p.T * rep.jx_mean + p.U * jz2 +
                          (p.e_minus - p.e_plus) * rep.jz_mean + e_const;
  if (std::abs(rep.energy - rep.energy_collective) > 1e-8 * (std::abs(rep.energy) + 1.0))
    throw std::runtime_error("observables: energy routes disagree");

  rep.energy_interaction = p.U * (jz2 + 0.25 * nd * (nd - 2.0));
  rep.uncertainty_product_gap = rep.jy_var * rep.jz_var - 0.25 * rep.jx_mean * rep.jx_mean;
  return rep;
}

GaussianEnergy gaussian_energy_closed_form(const TwoModeParams& p, double sigma) {
  p.validate();
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_energy_closed_form: sigma must be > 0");
  const double nd = static_cast<double>(p.N);
  const double e_loc = 0.5 * (p.e_plus + p.e_minus) * nd + 0.25 * p.U * nd * (nd - 2.0);
  GaussianEnergy out;
  out.value = e_loc + p.T * nd * (1.0 - 0.5 / (sigma * sigma)) + 0.25 * p.U * sigma * sigma;
  out.in_window = sigma >= 3.0 && sigma <= std::sqrt(nd) / 3.0;
  return out;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Fock: return "fock";
    case Regime::Josephson: return "josephson";
    case Regime::Rabi: return "rabi";
  }
  return "?";
}

RegimeReport classify_regime(const TwoModeParams& p) {
  p.validate();
  RegimeReport rep;
  const double absT = std::abs(p.T);
  if (p.U == 0.0) {
    rep.regime = Regime::Rabi;
    rep.log_margin_fock = rep.log_margin_rabi =
        std::numeric_limits<double>::infinity();
    return rep;
  }
  const double nd = static_cast<double>(p.N);
  rep.log_margin_fock = std::log10(absT * nd / p.U);
  rep.log_margin_rabi = std::log10(absT / (p.U * nd));
  if (absT < p.U / nd)
    rep.regime = Regime::Fock;
  else if (absT > p.U * nd)
    rep.regime = Regime::Rabi;
  else
    rep.regime = Regime::Josephson;
  return rep;
}

std::vector<CrossoverRow> crossover_scan(long long N, double U,
                                         std::span<const double> T_list) {
  for (size_t i = 0; i < T_list.size(); ++i) {
    if (!(T_list[i] < 0.0))
      throw std::invalid_argument("crossover_scan: T values must be negative");
    if (i > 0 && !(std::abs(T_list[i]) > std::abs(T_list[i - 1])))
      throw std::invalid_argument("crossover_scan: |T| must be ascending");
  }
  std::vector<CrossoverRow> rows;
  rows.reserve(T_list.size());
  for (double T : T_list) {
    TwoModeParams p{N, 0.0, 0.0, T, U};
    auto [energy, state] = ground_state(p);
    const ObservableReport obs = observables(state, p);
    CrossoverRow row;
    row.T = T;
    row.ratio_T_over_U = U > 0.0 ? std::abs(T) / U : std::numeric_limits<double>::infinity();
    row.var_N_minus = obs.var_N_minus;
    row.jx_mean = obs.jx_mean;
    row.energy = energy;
    row.regime = classify_regime(p).regime;
    row.exchange_defect = state.exchange_symmetry_defect();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dw
