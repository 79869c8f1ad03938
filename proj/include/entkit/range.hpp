// Range criterion machinery: membership/span verification of product vectors
// against the ranges of rho and rho^{T_B}, and a numerical search for product
// vectors inside a range.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

using ProductVector = std::pair<PureState, PureState>;  // (A side, B side)

struct RangeWitnessData {
  std::vector<ProductVector> product_vectors;
  bool spans_range = false;     // vectors vs Range(rho)
  bool spans_pt_range = false;  // partially conjugated vectors vs Range(rho^{T_B})
  std::size_t rank_rho = 0;
  std::size_t rank_pt = 0;
  std::size_t span_rank = 0;     // rank of the projected candidate family
  std::size_t span_pt_rank = 0;  // same for the conjugated family
  double worst_membership_residual = 0.0;
  bool all_in_range = false;
};

// Checks the two conditions of the range criterion for a candidate family:
// membership of each |psi (x) phi> in Range(rho), span of the family against
// Range(rho), and span of the partially conjugated family |psi (x) phi*>
// against Range(rho^{T_B}).  Span ranks count only vectors inside the
// respective range (within tol::range); a vector outside the range cannot
// appear in a separable decomposition at all.
RangeWitnessData range_verify(const DensityMatrix& rho, const BipartiteSplit& split,
                              const std::vector<ProductVector>& candidates);

// Alternating smallest-eigenvector descent from `budget` random starts for
// product vectors with ||(I - P_range)|e,f>|| below tol::range.  May return
// an empty list; d_A, d_B <= 4 only.
std::vector<ProductVector> range_search_product_vectors(const DensityMatrix& rho,
                                                        const BipartiteSplit& split,
                                                        std::size_t budget,
                                                        std::uint64_t seed = 1);

// Smallest product residual seen across the whole search (diagnostic; equals
// zero whenever the search succeeds somewhere).
double range_search_best_residual(const DensityMatrix& rho, const BipartiteSplit& split,
                                  std::size_t budget, std::uint64_t seed = 1);

}  // namespace entkit
