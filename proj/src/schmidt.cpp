#include "entkit/schmidt.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/linalg.hpp"

namespace entkit {

std::vector<cplx> SchmidtDecomposition::reconstruct() const {
  if (rank == 0) return {};
  const std::size_t da = left_vectors.front().size();
  const std::size_t db = right_vectors.front().size();
  std::vector<cplx> out(da * db);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t i = 0; i < da; ++i) {
      const cplx c = coefficients[k] * left_vectors[k][i];
      for (std::size_t j = 0; j < db; ++j) out[i * db + j] += c * right_vectors[k][j];
    }
  }
  return out;
}

SchmidtDecomposition schmidt(const PureState& psi, const BipartiteSplit& split) {
  const PureState merged = merge_split(psi, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];

  // psi_(i,mu) as a d_A x d_B matrix; its SVD is the decomposition.
  ComplexMatrix c(da, db, merged.amplitudes());
  const auto dec = la::svd(c);

  SchmidtDecomposition out;
  for (std::size_t k = 0; k < dec.values.size(); ++k) {
    if (dec.values[k] <= tol::rank) break;
    out.coefficients.push_back(dec.values[k]);
    std::vector<cplx> e(da), f(db);
    for (std::size_t i = 0; i < da; ++i) e[i] = dec.u(i, k);
    // C = U S V^dagger means psi = sum_k s_k u_k (x) conj(v_k).
    for (std::size_t j = 0; j < db; ++j) f[j] = std::conj(dec.v(j, k));
    out.left_vectors.push_back(std::move(e));
    out.right_vectors.push_back(std::move(f));
  }
  out.rank = out.coefficients.size();
  return out;
}

std::vector<double> spectrum(const ComplexMatrix& m) {
  if (!m.square() || !m.is_hermitian(tol::herm))
    throw std::invalid_argument("spectrum: matrix is not Hermitian");
  return la::eigh(m).values;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double w : eigenvalues) {
    if (w < -tol::psd) throw std::invalid_argument("entropy: negative eigenvalue beyond tolerance");
    const double p = std::min(std::max(w, 0.0), 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(la::eigh(rho.matrix()).values);
}

double shannon_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double binary_entropy(double x) {
  return shannon_entropy({x, 1.0 - x});
}

}  // namespace entkit
