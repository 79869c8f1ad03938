// Covariance matrix criterion: block covariance bundle and its three
// computable corollaries.

#pragma once

#include <optional>
#include <vector>

#include "entkit/criteria.hpp"

namespace entkit {

// Block covariance matrix gamma = [[A, X], [X^T, B]] over the local
// Hermitian observable bases {X_i, Y_ij, Z_kl} (d^2 observables per side,
// Hilbert-Schmidt orthonormal).  The A and B blocks are the marginal
// covariance matrices; X_ij = <A_i (x) B_j> - <A_i><B_j> is real.
struct CovarianceMatrixBundle {
  ComplexMatrix gamma;
  ComplexMatrix block_a;
  ComplexMatrix block_b;
  ComplexMatrix block_x;
  bool symmetric = false;
  std::string observable_basis = "hermitian-unit";
  std::size_t dim_a = 0, dim_b = 0;
  double purity_a = 0.0, purity_b = 0.0;
};

CovarianceMatrixBundle cmc_build(const DensityMatrix& rho, const BipartiteSplit& split,
                                 bool symmetric);

// ||X||_tr^2 <= [1 - tr(rho_A^2)][1 - tr(rho_B^2)] for separable states.
CriterionVerdict cmc_corollary1(const CovarianceMatrixBundle& bundle, const DensityMatrix& rho);

// 2 sum_i |X_{i, j_i}| <= [1 - tr(rho_A^2)] + [1 - tr(rho_B^2)] for any
// assignment of distinct column indices j_i (the index set J).  The default
// assignment is the greedy maximum-|X| matching; a caller-chosen J restricts
// the matching to those columns.
CriterionVerdict cmc_corollary2(const CovarianceMatrixBundle& bundle, const DensityMatrix& rho,
                                std::optional<std::vector<std::size_t>> j_set = std::nullopt);

// Operator-Schmidt form: 2 sum_i |l_i - l_i^2 g_i^A g_i^B| <=
// 2 - sum_i l_i^2 [(g_i^A)^2 + (g_i^B)^2] for separable states.
CriterionVerdict cmc_corollary3(const DensityMatrix& rho, const BipartiteSplit& split);

}  // namespace entkit
