// Schmidt decomposition of bipartite pure states plus the spectral helpers
// (entropy, spectrum) shared by criteria and measures.

#pragma once

#include <vector>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

struct SchmidtDecomposition {
  std::vector<double> coefficients;             // positive, non-increasing
  std::vector<std::vector<cplx>> left_vectors;  // orthonormal on side A
  std::vector<std::vector<cplx>> right_vectors; // orthonormal on side B
  std::size_t rank = 0;

  // sum_i a_i |e_i> (x) |f_i> on the merged bipartite layout.
  std::vector<cplx> reconstruct() const;
};

// Coefficients below tol::rank are dropped.
SchmidtDecomposition schmidt(const PureState& psi, const BipartiteSplit& split);

// Eigenvalues of a Hermitian matrix, non-increasing; rejects non-Hermitian
// input.
std::vector<double> spectrum(const ComplexMatrix& m);

// Von Neumann entropy in bits.  Eigenvalues within tol::psd below zero are
// clipped; anything more negative is a hard error.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

double shannon_entropy(const std::vector<double>& p);
double binary_entropy(double x);

}  // namespace entkit
