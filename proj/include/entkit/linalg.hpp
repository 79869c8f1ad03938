// Dense eigendecomposition and SVD, built on the kernel layer.
//
// Hermitian problems use two-sided Jacobi with exact 2x2 diagonalization;
// singular values come from one-sided Jacobi on columns.  Both are accurate
// to ~1e-14 relative at the matrix sizes this toolkit handles (n <= 128).

#pragma once

#include <vector>

#include "entkit/matrix.hpp"

namespace entkit::la {

struct EighResult {
  std::vector<double> values;  // non-increasing
  ComplexMatrix vectors;       // columns, same order as values
};

// Eigendecomposition of a Hermitian matrix.  The strictly lower triangle is
// taken as the conjugate of the upper one; callers validate Hermiticity.
EighResult eigh(const ComplexMatrix& a);

struct SvdResult {
  std::vector<double> values;  // non-increasing, length min(rows, cols)
  ComplexMatrix u;             // rows x k
  ComplexMatrix v;             // cols x k, A = U diag(values) V^dagger
};

SvdResult svd(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);

// Sum of singular values.  Uses eigh when the matrix is Hermitian.
double trace_norm(const ComplexMatrix& a);

// Matrix square root of a PSD Hermitian matrix (small negative eigenvalues
// are clamped to zero).
ComplexMatrix sqrtm_psd(const ComplexMatrix& a);

// Rank by the scale-invariant cutoff: values above rel_cut * largest count.
std::size_t rank_from_values(const std::vector<double>& values, double rel_cut = 1e-7);

}  // namespace entkit::la
