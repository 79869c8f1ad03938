// Dense-coding capacity, Holevo quantity, and the four-class taxonomy of
// bipartite states by dense-coding usefulness.

#pragma once

#include <string>
#include <vector>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

enum class DcClass { Separable, PPTEntangled, NPTnonDC, DC, PPTUndecided };

std::string_view to_string(DcClass c);

struct DenseCodingReport {
  double capacity = 0.0;   // bits per channel use, never below log2 d_A
  double advantage = 0.0;  // S(rho_B) - S(rho)
  DcClass cls = DcClass::PPTUndecided;
};

// chi({p_i, rho_i}) = S(sum p_i rho_i) - sum p_i S(rho_i).
double holevo_chi(const std::vector<double>& weights, const std::vector<DensityMatrix>& members);

// One-shot unitary-encoding capacity with Alice on side A of the split.
DenseCodingReport dc_capacity(const DensityMatrix& rho, const BipartiteSplit& split);

// Complete orthogonal unitary set (shift-and-clock construction); d^2
// operators satisfying the twirl identity sum_j W_j X W_j^dagger / d^2 =
// tr(X) I / d.
std::vector<ComplexMatrix> weyl_operators(std::size_t d);

// The equal-weight ensemble {(W_j (x) I) rho (W_j (x) I)^dagger}; its Holevo
// quantity realizes the dense-coding capacity when the state is useful.
void dense_coding_ensemble(const DensityMatrix& rho, const BipartiteSplit& split,
                           std::vector<double>& weights, std::vector<DensityMatrix>& members);

}  // namespace entkit
