#include "entkit/state.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/linalg.hpp"

namespace entkit {

PureState::PureState(std::vector<cplx> amplitudes, DimensionList dims)
    : amp_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (amp_.size() != dims_.total())
    throw std::invalid_argument("PureState: amplitude count does not match dims");
  const double n = vnorm(amp_);
  if (std::abs(n - 1.0) > tol::norm)
    throw std::invalid_argument("PureState: vector is not normalized");
}

PureState PureState::basis(std::size_t index, DimensionList dims) {
  std::vector<cplx> amp(dims.total());
  if (index >= amp.size()) throw std::invalid_argument("PureState::basis: index out of range");
  amp[index] = 1.0;
  return PureState(std::move(amp), std::move(dims));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimensionList dims) {
  if (!matrix.square()) throw std::invalid_argument("DensityMatrix: matrix not square");
  if (matrix.rows() != dims.total())
    throw std::invalid_argument("DensityMatrix: matrix size does not match dims");
  if (!matrix.is_hermitian(tol::herm))
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(matrix.trace() - cplx{1.0, 0.0}) > tol::norm)
    throw std::invalid_argument("DensityMatrix: trace is not one");
  const auto eig = la::eigh(matrix);
  if (eig.values.back() < -tol::psd)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  mat_ = std::move(matrix);
  dims_ = std::move(dims);
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix, DimensionList dims) {
  DensityMatrix rho;
  rho.mat_ = std::move(matrix);
  rho.dims_ = std::move(dims);
  return rho;
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const auto& a = psi.amplitudes();
  return trusted(ComplexMatrix::outer(a, a), psi.dims());
}

DensityMatrix DensityMatrix::maximally_mixed(DimensionList dims) {
  const std::size_t d = dims.total();
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= cplx{1.0 / static_cast<double>(d), 0.0};
  return trusted(std::move(m), std::move(dims));
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return kernels::nrm2sq(mat_.data(), mat_.size());
}

EnsembleDecomposition EnsembleDecomposition::checked(std::vector<double> weights,
                                                     std::vector<PureState> members,
                                                     const DensityMatrix& target) {
  if (weights.size() != members.size() || weights.empty())
    throw std::invalid_argument("EnsembleDecomposition: weight/member mismatch");
  const std::size_t d = target.dim();
  if (weights.size() > d * d)
    throw std::invalid_argument("EnsembleDecomposition: member count exceeds (dim)^2");
  double sum = 0.0;
  for (double w : weights) {
    if (w <= 0.0) throw std::invalid_argument("EnsembleDecomposition: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::norm)
    throw std::invalid_argument("EnsembleDecomposition: weights do not sum to one");

  EnsembleDecomposition ens{std::move(weights), std::move(members)};
  ComplexMatrix acc(d, d);
  for (std::size_t k = 0; k < ens.members.size(); ++k) {
    if (ens.members[k].dim() != d)
      throw std::invalid_argument("EnsembleDecomposition: member dimension mismatch");
    const auto& a = ens.members[k].amplitudes();
    for (std::size_t i = 0; i < d; ++i) {
      const cplx coeff = ens.weights[k] * a[i];
      for (std::size_t j = 0; j < d; ++j) acc(i, j) += coeff * std::conj(a[j]);
    }
  }
  acc -= target.matrix();
  if (acc.max_abs() > tol::recon)
    throw std::invalid_argument("EnsembleDecomposition: does not reconstruct the target state");
  return ens;
}

DensityMatrix EnsembleDecomposition::average() const {
  const std::size_t d = members.front().dim();
  ComplexMatrix acc(d, d);
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto& a = members[k].amplitudes();
    for (std::size_t i = 0; i < d; ++i) {
      const cplx coeff = weights[k] * a[i];
      for (std::size_t j = 0; j < d; ++j) acc(i, j) += coeff * std::conj(a[j]);
    }
  }
  return DensityMatrix::trusted(std::move(acc), members.front().dims());
}

cplx expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  // tr(rho M) = sum_ij conj(rho_ij) M_ij for Hermitian rho.
  return kernels::dotc(rho.matrix().data(), op.data(), op.size());
}

double expectation_real(const DensityMatrix& rho, const ComplexMatrix& op, double imag_tol) {
  const cplx v = expectation(rho, op);
  if (std::abs(v.imag()) > imag_tol)
    throw std::runtime_error("expectation_real: imaginary residue above tolerance");
  return v.real();
}

}  // namespace entkit
