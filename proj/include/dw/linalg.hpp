#pragma once

#include <span>
#include <vector>

namespace dw {

// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;

  int n() const { return static_cast<int>(diag.size()); }
  void apply(std::span<const double> x, std::span<double> y) const;
};

struct EigenPairs {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // unit Euclidean norm
};

// lowest k eigenpairs (LAPACK stevr)
EigenPairs lowest_eigenpairs(const SymTridiag& t, int k);

// full spectrum with eigenvectors (LAPACK stevd); vectors[j] is the j-th column
EigenPairs full_eigen(const SymTridiag& t);

// Cholesky-type factorization/solve for a symmetric positive definite
// tridiagonal system (LAPACK pttrf/pttrs).
class TridiagSpdSolver {
 public:
  explicit TridiagSpdSolver(const SymTridiag& t);
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::vector<double> d_, e_;
};

}  // namespace dw
