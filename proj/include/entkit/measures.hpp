// Entanglement measures: closed forms where they exist, certified numerical
// upper bounds where the definition is a minimization.

#pragma once

#include <cstdint>
#include <string>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

enum class MeasureKind { Exact, UpperBound, LowerBound };

std::string_view to_string(MeasureKind k);

struct MeasureResult {
  std::string measure;
  double value = 0.0;
  MeasureKind kind = MeasureKind::Exact;
  // Human-readable descriptor; upper bounds append the achieving decomposition
  // or separable state as JSON for reproducibility.
  std::string method;
};

// S(rho_A) in bits, computed from the squared Schmidt coefficients.
MeasureResult entropy_of_entanglement(const PureState& psi, const BipartiteSplit& split);

// |<psi|sigma_y (x) sigma_y |psi*>| for a two-qubit pure state.
MeasureResult concurrence_pure(const PureState& psi);

// Wootters closed form max{0, l1 - l2 - l3 - l4} with l_i the decreasing
// eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)).
MeasureResult concurrence_mixed(const DensityMatrix& rho);

// F(C) = h((1 + sqrt(1 - C^2))/2) on the mixed-state concurrence.
MeasureResult eof_two_qubit(const DensityMatrix& rho);

struct RoofBudget {
  std::size_t restarts = 4;
  std::size_t sweeps = 12;
  std::size_t ensemble_size = 0;  // 0: twice the state rank
};

// Convex-roof upper bound by isometry mixing of the eigenvector ensemble,
// refined by pairwise rotations; sides up to dimension 4.
MeasureResult eof_convex_roof_upper(const DensityMatrix& rho, const BipartiteSplit& split,
                                    const RoofBudget& budget = {}, std::uint64_t seed = 1);

// Absolute sum of the negative partial-transpose eigenvalues.
MeasureResult negativity(const DensityMatrix& rho, const BipartiteSplit& split);

// log2(2 N + 1), computed from the negativity value.
MeasureResult log_negativity(const DensityMatrix& rho, const BipartiteSplit& split);

struct ReeBudget {
  std::size_t iterations = 900;
  std::size_t lmo_restarts = 6;
  std::size_t weight_steps = 110;
};

// Upper bound on min_{sigma separable} S(rho || sigma): conditional-gradient
// descent over mixtures of product states (see-saw subproblem, projected
// weight refits); sides up to dimension 3.
MeasureResult relative_entropy_of_entanglement_upper(const DensityMatrix& rho,
                                                     const BipartiteSplit& split,
                                                     const ReeBudget& budget = {},
                                                     std::uint64_t seed = 1);

// S(rho || sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityMatrix& rho, const ComplexMatrix& sigma);

}  // namespace entkit
