#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgspec/matrix.hpp"

namespace pgspec {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymEigen {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column j belongs to values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// tol * ||M||_F. Throws ConvergenceError after max_sweeps.
SymEigen sym_eigen(const DenseSymMatrix& m, double tol = 1e-14, int max_sweeps = 100);
std::vector<double> sym_eigenvalues(const DenseSymMatrix& m, double tol = 1e-14, int max_sweeps = 100);

/// ||M - V diag(values) V^T||_F / ||M||_F.
double reconstruction_residual(const DenseSymMatrix& m, const SymEigen& eig);

/// Roots of c[0] x^d + c[1] x^(d-1) + ... + c[d] as eigenvalues of the
/// balanced companion matrix (Francis double-shift QR). c[0] must be non-zero.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// Eigenvalues of a general real square matrix (Hessenberg reduction + QR).
std::vector<std::complex<double>> general_eigenvalues(const DenseMatrix& m);

}  // namespace pgspec
