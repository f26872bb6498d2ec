#include <algorithm>
#include <cmath>
#include <numeric>

#include "dw/grid.hpp"
#include "dw/kernel.hpp"
#include "dw/trap.hpp"
#include "dw/wavefunction.hpp"

namespace dw {

double Grid1D::dot(std::span<const double> a, std::span<const double> b) const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += a[i] * b[i];
  return spacing() * acc;
}

double eval_potential(const TrapSpec& spec, double x) {
  spec.validate();
  if (spec.kind == TrapKind::SingleWell) return std::pow(std::abs(x), spec.s);
  const double a = spec.separation_L / 2.0;
  return std::min(std::pow(std::abs(x - a), spec.s), std::pow(std::abs(x + a), spec.s));
}

double agmon_distance(double r, double s) {
  if (r < 0.0) throw std::invalid_argument("agmon_distance: r must be >= 0");
  if (s < 2.0) throw std::invalid_argument("agmon_distance: s must be >= 2");
  const double p = 1.0 + s / 2.0;
  return std::pow(r, p) / p;
}

double agmon_distance_quadrature(const std::function<double(double)>& V, double r,
                                 int intervals) {
  if (r < 0.0) throw std::invalid_argument("agmon_distance_quadrature: r must be >= 0");
  if (r == 0.0) return 0.0;
  if (intervals % 2) ++intervals;
  const double h = r / intervals;
  double acc = std::sqrt(std::max(0.0, V(0.0))) + std::sqrt(std::max(0.0, V(r)));
  for (int i = 1; i < intervals; ++i)
    acc += (i % 2 ? 4.0 : 2.0) * std::sqrt(std::max(0.0, V(i * h)));
  return acc * h / 3.0;
}

void InteractionKernel::validate() const {
  if (!(strength_w0 > 0.0)) throw std::invalid_argument("InteractionKernel: w0 must be > 0");
  if (!(range_Rw > 0.0)) throw std::invalid_argument("InteractionKernel: Rw must be > 0");
}

double InteractionKernel::value(double x) const {
  const double ax = std::abs(x);
  if (ax > range_Rw) return 0.0;
  if (shape == KernelShape::Triangle) return strength_w0 * (1.0 - ax / range_Rw);
  const double sigma = range_Rw / 6.0;
  return strength_w0 * std::exp(-0.5 * (ax / sigma) * (ax / sigma));
}

std::vector<double> InteractionKernel::sample(double h) const {
  validate();
  const int K = static_cast<int>(std::floor(range_Rw / h + 1e-12));
  if (K < 1)
    throw std::invalid_argument(
        "InteractionKernel: kernel range smaller than one grid spacing (unresolved)");
  std::vector<double> w(2 * K + 1);
  for (int k = -K; k <= K; ++k) w[k + K] = value(k * h);
  return w;
}

std::vector<double> convolve_density(const InteractionKernel& w, const Grid1D& grid,
                                     std::span<const double> rho) {
  const double h = grid.spacing();
  const std::vector<double> ws = w.sample(h);
  const int K = (static_cast<int>(ws.size()) - 1) / 2;
  const int n = grid.n();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int klo = std::max(-K, i - (n - 1));
    const int khi = std::min(K, i);
    double acc = 0.0;
    for (int k = klo; k <= khi; ++k) acc += ws[k + K] * rho[i - k];
    out[i] = h * acc;
  }
  return out;
}

KernelFourierReport fourier_check_samples(std::span<const double> samples, double h,
                                          int n_freq) {
  const int K = (static_cast<int>(samples.size()) - 1) / 2;
  KernelFourierReport rep;
  // even kernel: hat w(k) = h * sum_j w_j cos(k j h); frequencies 2 pi m/(n h)
  double minv = 0.0;
  bool first = true;
  for (int m = 0; m <= n_freq / 2; ++m) {
    const double k = 2.0 * M_PI * m / (n_freq * h);
    double acc = samples[K];
    for (int j = 1; j <= K; ++j) acc += 2.0 * samples[K + j] * std::cos(k * j * h);
    const double hat = h * acc;
    if (m == 0) rep.hat_zero = hat;
    if (first || hat < minv) minv = hat, first = false;
  }
  rep.min_hat = minv;
  rep.pass = minv >= -1e-10 * rep.hat_zero;
  return rep;
}

KernelFourierReport kernel_fourier_check(const InteractionKernel& w, const Grid1D& grid) {
  return fourier_check_samples(w.sample(grid.spacing()), grid.spacing(), grid.n());
}

WaveFunction::WaveFunction(Grid1D g, std::vector<double> v, double m)
    : grid(g), values(std::move(v)), mass(m) {
  if (static_cast<int>(values.size()) != grid.n())
    throw std::invalid_argument("WaveFunction: values size does not match grid");
  if (!(mass >= 0.0)) throw std::invalid_argument("WaveFunction: mass must be >= 0");
}

double WaveFunction::norm_squared() const { return grid.dot(values, values); }

void WaveFunction::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw std::runtime_error("WaveFunction: cannot normalize a zero field");
  const double c = std::sqrt(mass / n2);
  for (double& v : values) v *= c;
}

WaveFunction WaveFunction::reflected() const {
  std::vector<double> r(values.rbegin(), values.rend());
  return WaveFunction(grid, std::move(r), mass);
}

double WaveFunction::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

bool WaveFunction::mass_consistent(double rel_tol) const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  if (mass == 0.0) return norm_squared() == 0.0;
  return std::abs(norm_squared() - mass) <= rel_tol * mass;
}

}  // namespace dw
