// Entanglement witnesses, the operator <-> map correspondence, and Bell-CHSH
// evaluation and optimization.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

struct WitnessOperator {
  ComplexMatrix matrix;  // Hermitian
  DimensionList dims;
  // (P, Q) with W = P + Q^{T_A}, both PSD, when the witness is decomposable.
  std::optional<std::pair<ComplexMatrix, ComplexMatrix>> decomposition;

  WitnessOperator(ComplexMatrix m, DimensionList d,
                  std::optional<std::pair<ComplexMatrix, ComplexMatrix>> dec = std::nullopt);
};

// tr(W rho); throws when the imaginary residue exceeds 1e-10.
double witness_value(const WitnessOperator& w, const DensityMatrix& rho);

// W = Q^{T_A} for PSD Q; decomposition recorded as (P = 0, Q).
WitnessOperator witness_from_ppt_entangled_direction(const DensityMatrix& q);

// Approximate min over product states of <e,f|W|e,f> by alternating
// smallest-eigenvector descent; an upper bound on the true floor.
double witness_product_floor(const WitnessOperator& w, std::size_t restarts,
                             std::uint64_t seed = 1);

// --- Choi-Jamiolkowski ---

struct MapAsOperator {
  ComplexMatrix op;  // on H_B (x) H_C
  std::size_t dim_b = 0, dim_c = 0;
};

// eps(rho) = tr_B(E rho^{T_B}); returns the (possibly non-PSD) image matrix.
ComplexMatrix cj_operator_to_map(const MapAsOperator& e, const ComplexMatrix& rho_b);

// Assembles E = sum_ij |i><j| (x) eps(|i><j|) from the map's images on matrix
// units (index i*dim_b + j).
MapAsOperator cj_map_to_operator(const std::vector<ComplexMatrix>& unit_images,
                                 std::size_t dim_b);

// --- Bell-CHSH ---

struct CHSHSetting {
  std::array<double, 3> a, a_prime, b, b_prime;  // unit vectors

  void validate() const;
};

// E(a,b) + E(a,b') + E(a',b) - E(a',b') with E(a,b) = tr(rho sigma_a (x) sigma_b).
double chsh_value(const DensityMatrix& rho, const CHSHSetting& s);

struct CHSHMaximum {
  double value = 0.0;
  CHSHSetting setting{};
};

// Coordinate ascent over the four directions from random starts; each update
// is a closed-form normalization of a 3-vector.
CHSHMaximum chsh_maximize(const DensityMatrix& rho, std::size_t restarts = 32,
                          std::uint64_t seed = 1);

// sigma . n for a unit 3-vector n.
ComplexMatrix pauli_dot(const std::array<double, 3>& n);

// Correlation matrix T_ij = tr(rho sigma_i (x) sigma_j) of a two-qubit state.
std::array<std::array<double, 3>, 3> correlation_matrix(const DensityMatrix& rho);

}  // namespace entkit
