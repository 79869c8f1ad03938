// State carriers: pure states, density matrices, and ensemble decompositions.
// Construction validates the physical invariants; operations that produce
// states which are valid by construction use the unchecked path internally.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "entkit/matrix.hpp"
#include "entkit/types.hpp"

namespace entkit {

class PureState {
 public:
  PureState(std::vector<cplx> amplitudes, DimensionList dims);

  // Computational basis vector |index> on the given dims.
  static PureState basis(std::size_t index, DimensionList dims);

  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes_mutable() { return amp_; }
  const DimensionList& dims() const { return dims_; }
  std::size_t dim() const { return amp_.size(); }

 private:
  std::vector<cplx> amp_;
  DimensionList dims_;
};

class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, DimensionList dims);

  // Skips validation; for operations whose output is valid by construction.
  static DensityMatrix trusted(ComplexMatrix matrix, DimensionList dims);
  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(DimensionList dims);

  const ComplexMatrix& matrix() const { return mat_; }
  const DimensionList& dims() const { return dims_; }
  std::size_t dim() const { return mat_.rows(); }

  double purity() const;  // tr(rho^2)

 private:
  DensityMatrix() = default;
  ComplexMatrix mat_;
  DimensionList dims_;
};

struct EnsembleDecomposition {
  std::vector<double> weights;
  std::vector<PureState> members;

  // Validates weights (positive, summing to one within tol::norm), the
  // Caratheodory bound K <= (total dim)^2, and the reconstruction residual
  // against the target state.
  static EnsembleDecomposition checked(std::vector<double> weights,
                                       std::vector<PureState> members,
                                       const DensityMatrix& target);
  DensityMatrix average() const;
};

// tr(rho * op) for Hermitian rho; single fused pass over the entries.
cplx expectation(const DensityMatrix& rho, const ComplexMatrix& op);

// Real part with a guard on the imaginary residue.
double expectation_real(const DensityMatrix& rho, const ComplexMatrix& op,
                        double imag_tol = 1e-10);

}  // namespace entkit
