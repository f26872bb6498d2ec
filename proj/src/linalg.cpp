#include "dw/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace dw {

void SymTridiag::apply(std::span<const double> x, std::span<double> y) const {
  const int m = n();
  for (int i = 0; i < m; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < m) acc += off[i] * x[i + 1];
    y[i] = acc;
  }
}

EigenPairs lowest_eigenpairs(const SymTridiag& t, int k) {
  const int n = t.n();
  if (k < 1 || k > n) throw std::invalid_argument("lowest_eigenpairs: bad k");
  std::vector<double> d = t.diag, e = t.off;
  std::vector<double> w(n), z(static_cast<size_t>(n) * k);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
  lapack_int m = 0;
  lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0,
                                   0.0, 1, k, 0.0, &m, w.data(), z.data(), n, isuppz.data());
  if (info != 0 || m != k) throw std::runtime_error("lowest_eigenpairs: LAPACK stevr failed");
  EigenPairs out;
  out.values.assign(w.begin(), w.begin() + k);
  out.vectors.resize(k);
  for (int j = 0; j < k; ++j)
    out.vectors[j].assign(z.begin() + static_cast<size_t>(j) * n,
                          z.begin() + static_cast<size_t>(j + 1) * n);
  return out;
}

EigenPairs full_eigen(const SymTridiag& t) {
  const int n = t.n();
  std::vector<double> d = t.diag, e = t.off;
  std::vector<double> z(static_cast<size_t>(n) * n);
  lapack_int info = LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, d.data(), e.data(), z.data(), n);
  if (info != 0) throw std::runtime_error("full_eigen: LAPACK stevd failed");
  EigenPairs out;
  out.values = std::move(d);
  out.vectors.resize(n);
  for (int j = 0; j < n; ++j)
    out.vectors[j].assign(z.begin() + static_cast<size_t>(j) * n,
                          z.begin() + static_cast<size_t>(j + 1) * n);
  return out;
}

TridiagSpdSolver::TridiagSpdSolver(const SymTridiag& t) : d_(t.diag), e_(t.off) {
  lapack_int info = LAPACKE_dpttrf(t.n(), d_.data(), e_.data());
  if (info != 0) throw std::runtime_error("TridiagSpdSolver: matrix not positive definite");
}

std::vector<double> TridiagSpdSolver::solve(std::span<const double> rhs) const {
  std::vector<double> x(rhs.begin(), rhs.end());
  const int n = static_cast<int>(d_.size());
  lapack_int info =
      LAPACKE_dpttrs(LAPACK_COL_MAJOR, n, 1, d_.data(), e_.data(), x.data(), n);
  if (info != 0) throw std::runtime_error("TridiagSpdSolver: solve failed");
  return x;
}

}  // namespace dw
