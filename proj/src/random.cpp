#include "entkit/random.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

cplx gaussian_cplx(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return {dist(rng), dist(rng)};
}

PureState haar_pure(DimensionList dims, Rng& rng) {
  std::vector<cplx> v(dims.total());
  for (auto& z : v) z = gaussian_cplx(rng);
  vnormalize(v);
  return PureState(std::move(v), std::move(dims));
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  // Gram-Schmidt on Ginibre columns, then fix phases from the R diagonal.
  std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
  for (auto& c : cols)
    for (auto& z : c) z = gaussian_cplx(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const cplx proj = kernels::dotc(cols[k].data(), cols[j].data(), n);
      kernels::axpy(-proj, cols[k].data(), cols[j].data(), n);
    }
    // Re-orthogonalize once; plain Gram-Schmidt loses digits.
    for (std::size_t k = 0; k < j; ++k) {
      const cplx proj = kernels::dotc(cols[k].data(), cols[j].data(), n);
      kernels::axpy(-proj, cols[k].data(), cols[j].data(), n);
    }
    vnormalize(cols[j]);
  }
  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
  return u;
}

DensityMatrix random_mixture(DimensionList dims, std::size_t members, Rng& rng) {
  if (members == 0) throw std::invalid_argument("random_mixture: need at least one member");
  const std::size_t d = dims.total();
  std::vector<double> w(members);
  double sum = 0.0;
  std::exponential_distribution<double> exp1(1.0);
  for (auto& x : w) {
    x = exp1(rng);
    sum += x;
  }
  ComplexMatrix acc(d, d);
  for (std::size_t k = 0; k < members; ++k) {
    const PureState psi = haar_pure(dims, rng);
    const auto& a = psi.amplitudes();
    const double p = w[k] / sum;
    for (std::size_t i = 0; i < d; ++i) {
      const cplx coeff = p * a[i];
      for (std::size_t j = 0; j < d; ++j) acc(i, j) += coeff * std::conj(a[j]);
    }
  }
  return DensityMatrix::trusted(std::move(acc), std::move(dims));
}

PureState random_product_pure(DimensionList dims, Rng& rng) {
  if (dims.parties() != 2) throw std::invalid_argument("random_product_pure: need two parties");
  const PureState a = haar_pure(DimensionList({dims[0]}), rng);
  const PureState b = haar_pure(DimensionList({dims[1]}), rng);
  return tensor(a, b);
}

DensityMatrix random_separable(DimensionList dims, std::size_t terms, Rng& rng) {
  if (dims.parties() != 2) throw std::invalid_argument("random_separable: need two parties");
  if (terms == 0) throw std::invalid_argument("random_separable: need at least one term");
  std::vector<double> w(terms);
  double sum = 0.0;
  std::exponential_distribution<double> exp1(1.0);
  for (auto& x : w) {
    x = exp1(rng);
    sum += x;
  }
  const std::size_t d = dims.total();
  ComplexMatrix acc(d, d);
  for (std::size_t k = 0; k < terms; ++k) {
    const DensityMatrix a = random_mixture(DimensionList({dims[0]}), 2, rng);
    const DensityMatrix b = random_mixture(DimensionList({dims[1]}), 2, rng);
    ComplexMatrix prod = ComplexMatrix::kron(a.matrix(), b.matrix());
    prod *= cplx{w[k] / sum, 0.0};
    acc += prod;
  }
  return DensityMatrix::trusted(std::move(acc), std::move(dims));
}

}  // namespace entkit
