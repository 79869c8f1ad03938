#include "entkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entkit/linalg.hpp"

namespace entkit {

namespace {

std::vector<std::size_t> concat_dims(const DimensionList& a, const DimensionList& b) {
  std::vector<std::size_t> d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  return d;
}

// Unpack a flat row-major index into per-party digits.
void unpack(std::size_t index, const std::vector<std::size_t>& dims,
            std::vector<std::size_t>& digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

std::size_t pack(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

}  // namespace

PureState tensor(const PureState& a, const PureState& b) {
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  std::vector<cplx> out(va.size() * vb.size());
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t j = 0; j < vb.size(); ++j) out[i * vb.size() + j] = va[i] * vb[j];
  return PureState(std::move(out), DimensionList(concat_dims(a.dims(), b.dims())));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::trusted(ComplexMatrix::kron(a.matrix(), b.matrix()),
                                DimensionList(concat_dims(a.dims(), b.dims())));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep_in) {
  const auto& dims = rho.dims().dims();
  std::vector<std::size_t> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set empty");
  for (std::size_t p : keep)
    if (p >= dims.size()) throw std::invalid_argument("partial_trace: invalid party index");

  std::vector<std::size_t> drop;
  for (std::size_t p = 0; p < dims.size(); ++p)
    if (!std::binary_search(keep.begin(), keep.end(), p)) drop.push_back(p);

  std::vector<std::size_t> keep_dims, drop_dims;
  for (std::size_t p : keep) keep_dims.push_back(dims[p]);
  for (std::size_t p : drop) drop_dims.push_back(dims[p]);
  const std::size_t dk = std::accumulate(keep_dims.begin(), keep_dims.end(), std::size_t{1},
                                         std::multiplies<>());
  const std::size_t dd = std::accumulate(drop_dims.begin(), drop_dims.end(), std::size_t{1},
                                         std::multiplies<>());

  ComplexMatrix out(dk, dk);
  std::vector<std::size_t> row(dims.size()), col(dims.size());
  std::vector<std::size_t> ki(keep.size()), kj(keep.size()), di(drop.size());
  for (std::size_t i = 0; i < dk; ++i) {
    unpack(i, keep_dims, ki);
    for (std::size_t j = 0; j < dk; ++j) {
      unpack(j, keep_dims, kj);
      cplx sum = 0.0;
      for (std::size_t t = 0; t < dd; ++t) {
        unpack(t, drop_dims, di);
        for (std::size_t k = 0; k < keep.size(); ++k) {
          row[keep[k]] = ki[k];
          col[keep[k]] = kj[k];
        }
        for (std::size_t k = 0; k < drop.size(); ++k) {
          row[drop[k]] = di[k];
          col[drop[k]] = di[k];
        }
        sum += rho.matrix()(pack(row, dims), pack(col, dims));
      }
      out(i, j) = sum;
    }
  }
  if (drop.empty()) return DensityMatrix::trusted(rho.matrix(), rho.dims());
  return DensityMatrix::trusted(std::move(out), DimensionList(std::move(keep_dims)));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party) {
  const auto& dims = rho.dims().dims();
  if (party >= dims.size()) throw std::invalid_argument("partial_transpose: invalid party index");
  const std::size_t d = rho.dim();
  ComplexMatrix out(d, d);
  std::vector<std::size_t> row(dims.size()), col(dims.size());
  for (std::size_t i = 0; i < d; ++i) {
    unpack(i, dims, row);
    for (std::size_t j = 0; j < d; ++j) {
      unpack(j, dims, col);
      std::swap(row[party], col[party]);
      const cplx v = rho.matrix()(pack(row, dims), pack(col, dims));
      std::swap(row[party], col[party]);
      out(i, j) = v;
    }
  }
  return out;
}

ComplexMatrix partial_transpose_b(const DensityMatrix& rho, const BipartiteSplit& split) {
  const DensityMatrix merged = merge_split(rho, split);
  return partial_transpose(merged, 1);
}

PureState permute_parties(const PureState& psi, const std::vector<std::size_t>& order) {
  const auto& dims = psi.dims().dims();
  if (order.size() != dims.size())
    throw std::invalid_argument("permute_parties: order length mismatch");
  std::vector<std::size_t> new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];
  std::vector<cplx> out(psi.dim());
  std::vector<std::size_t> digits(dims.size()), nd(dims.size());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    unpack(i, dims, digits);
    for (std::size_t k = 0; k < order.size(); ++k) nd[k] = digits[order[k]];
    out[pack(nd, new_dims)] = psi.amplitudes()[i];
  }
  return PureState(std::move(out), DimensionList(std::move(new_dims)));
}

DensityMatrix permute_parties(const DensityMatrix& rho, const std::vector<std::size_t>& order) {
  const auto& dims = rho.dims().dims();
  if (order.size() != dims.size())
    throw std::invalid_argument("permute_parties: order length mismatch");
  std::vector<std::size_t> new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];
  const std::size_t d = rho.dim();
  // Map old flat index -> new flat index once, then permute rows and columns.
  std::vector<std::size_t> map(d);
  std::vector<std::size_t> digits(dims.size()), nd(dims.size());
  for (std::size_t i = 0; i < d; ++i) {
    unpack(i, dims, digits);
    for (std::size_t k = 0; k < order.size(); ++k) nd[k] = digits[order[k]];
    map[i] = pack(nd, new_dims);
  }
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(map[i], map[j]) = rho.matrix()(i, j);
  return DensityMatrix::trusted(std::move(out), DimensionList(std::move(new_dims)));
}

DensityMatrix merge_split(const DensityMatrix& rho, const BipartiteSplit& split) {
  std::vector<std::size_t> order = split.party_a();
  order.insert(order.end(), split.party_b().begin(), split.party_b().end());
  DensityMatrix permuted = permute_parties(rho, order);
  const std::size_t da = split.dim_a(rho.dims());
  const std::size_t db = split.dim_b(rho.dims());
  return DensityMatrix::trusted(permuted.matrix(), DimensionList({da, db}));
}

PureState merge_split(const PureState& psi, const BipartiteSplit& split) {
  std::vector<std::size_t> order = split.party_a();
  order.insert(order.end(), split.party_b().begin(), split.party_b().end());
  PureState permuted = permute_parties(psi, order);
  const std::size_t da = split.dim_a(psi.dims());
  const std::size_t db = split.dim_b(psi.dims());
  return PureState(permuted.amplitudes(), DimensionList({da, db}));
}

namespace {

// Realigned coefficient matrix xi[(i,j)][(mu,nu)] = <i mu| rho |j nu> on the
// merged bipartite layout.
ComplexMatrix realigned_matrix(const DensityMatrix& merged) {
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  ComplexMatrix xi(da * da, db * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t mu = 0; mu < db; ++mu)
        for (std::size_t nu = 0; nu < db; ++nu)
          xi(i * da + j, mu * db + nu) = merged.matrix()(i * db + mu, j * db + nu);
  return xi;
}

}  // namespace

std::vector<double> realign(const DensityMatrix& rho, const BipartiteSplit& split) {
  const DensityMatrix merged = merge_split(rho, split);
  return la::singular_values(realigned_matrix(merged));
}

OperatorSchmidt operator_schmidt(const DensityMatrix& rho, const BipartiteSplit& split) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  const auto basis_a = hermitian_basis(da);
  const auto basis_b = hermitian_basis(db);

  // Xi_kl = tr[rho (O_k^A (x) O_l^B)] is real for Hermitian basis operators.
  ComplexMatrix xi(da * da, db * db);
  for (std::size_t k = 0; k < basis_a.size(); ++k) {
    for (std::size_t l = 0; l < basis_b.size(); ++l) {
      const ComplexMatrix op = ComplexMatrix::kron(basis_a[k], basis_b[l]);
      xi(k, l) = expectation(merged, op).real();
    }
  }
  const auto dec = la::svd(xi);

  OperatorSchmidt res;
  res.values = dec.values;
  const std::size_t nk = dec.values.size();
  for (std::size_t c = 0; c < nk; ++c) {
    ComplexMatrix ga(da, da), gb(db, db);
    for (std::size_t k = 0; k < basis_a.size(); ++k) {
      // U entries are real up to eigensolver roundoff for a real matrix.
      const cplx u = dec.u(k, c);
      if (u != cplx{}) {
        ComplexMatrix term = basis_a[k];
        term *= u;
        ga += term;
      }
    }
    for (std::size_t l = 0; l < basis_b.size(); ++l) {
      const cplx v = std::conj(dec.v(l, c));
      if (v != cplx{}) {
        ComplexMatrix term = basis_b[l];
        term *= v;
        gb += term;
      }
    }
    res.ops_a.push_back(std::move(ga));
    res.ops_b.push_back(std::move(gb));
  }
  return res;
}

std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix x(d, d);
    x(i, i) = 1.0;
    basis.push_back(std::move(x));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix y(d, d);
      y(i, j) = inv_sqrt2;
      y(j, i) = inv_sqrt2;
      basis.push_back(std::move(y));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix z(d, d);
      z(i, j) = cplx{0.0, inv_sqrt2};
      z(j, i) = cplx{0.0, -inv_sqrt2};
      basis.push_back(std::move(z));
    }
  }
  return basis;
}

}  // namespace entkit
