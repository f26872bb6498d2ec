#pragma once

#include <span>
#include <vector>

#include "dw/grid.hpp"

namespace dw {

enum class KernelShape { Triangle, TruncatedGaussian };

// Interaction potential w: positive, even, of positive type, compactly
// supported in [-range_Rw, range_Rw]. The triangle satisfies all of this
// exactly; the truncated Gaussian (std dev = Rw/6, cut at six sigma) must be
// gated through kernel_fourier_check before use.
struct InteractionKernel {
  KernelShape shape = KernelShape::Triangle;
  double strength_w0 = 1.0;
  double range_Rw = 0.5;

  void validate() const;
  double value(double x) const;
  double sup_norm() const { return strength_w0; }

  // samples at grid offsets k*h, k = -K..K with K = floor(Rw/h);
  // throws if the support covers less than one grid spacing.
  std::vector<double> sample(double h) const;

  static InteractionKernel triangle(double w0, double Rw) {
    return {KernelShape::Triangle, w0, Rw};
  }
  static InteractionKernel truncated_gaussian(double w0, double Rw) {
    return {KernelShape::TruncatedGaussian, w0, Rw};
  }
};

// (w * rho)(x_i) by direct windowed summation over the kernel support,
// uniform-h quadrature, zero field outside the box.
std::vector<double> convolve_density(const InteractionKernel& w, const Grid1D& grid,
                                     std::span<const double> rho);

struct KernelFourierReport {
  double min_hat = 0.0;   // min of the sampled transform over the frequency set
  double hat_zero = 0.0;  // \hat w(0)
  bool pass = false;
};

// Discrete transform of the sampled kernel on the grid's frequency set
// 2*pi*m/(n*h); passes iff min >= -1e-10 * \hat w(0).
KernelFourierReport kernel_fourier_check(const InteractionKernel& w, const Grid1D& grid);

// Same test for caller-supplied even-kernel samples at offsets k*h, k = -K..K.
KernelFourierReport fourier_check_samples(std::span<const double> samples, double h, int n_freq);

}  // namespace dw
