// Tensor-structure transforms: Kronecker products, partial trace, partial
// transposition, party permutation, bipartite merging, and the realignment
// (operator-Schmidt) decomposition.

#pragma once

#include <set>
#include <vector>

#include "entkit/state.hpp"

namespace entkit {

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state on the kept parties (ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Transposition of one party's indices.  The result can be non-PSD, so it is
// returned as a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party);

// Partial transpose over all parties of side B of a split (on the merged
// bipartite layout).
ComplexMatrix partial_transpose_b(const DensityMatrix& rho, const BipartiteSplit& split);

// Reorder parties: entry k of `order` names the input party that becomes
// party k of the output.
PureState permute_parties(const PureState& psi, const std::vector<std::size_t>& order);
DensityMatrix permute_parties(const DensityMatrix& rho, const std::vector<std::size_t>& order);

// Collapse a multiparty state to the two-party layout [dim_a, dim_b] of the
// split (side-A parties first, ascending inside each side).
DensityMatrix merge_split(const DensityMatrix& rho, const BipartiteSplit& split);
PureState merge_split(const PureState& psi, const BipartiteSplit& split);

// Operator-Schmidt singular values: non-increasing, min(d_A^2, d_B^2) many.
std::vector<double> realign(const DensityMatrix& rho, const BipartiteSplit& split);

// Full operator-Schmidt data rho = sum_k lambda_k G_k^A (x) G_k^B with
// Hermitian orthonormal factors.
struct OperatorSchmidt {
  std::vector<double> values;
  std::vector<ComplexMatrix> ops_a;
  std::vector<ComplexMatrix> ops_b;
};
OperatorSchmidt operator_schmidt(const DensityMatrix& rho, const BipartiteSplit& split);

// Hilbert-Schmidt orthonormal Hermitian basis {|i><i|; (|i><j|+|j><i|)/sqrt2;
// i(|i><j|-|j><i|)/sqrt2} of a d-dimensional system.
std::vector<ComplexMatrix> hermitian_basis(std::size_t d);

}  // namespace entkit
