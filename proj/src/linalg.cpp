#include "entkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "entkit/kernels.hpp"

namespace entkit::la {

namespace {

// Unitary 2x2 that diagonalizes the Hermitian block [[app, apq], [conj(apq),
// aqq]].  Returns (c, s) with columns (c, -conj(s)) and (s, c) so that the
// rotated block is diagonal; c is real and non-negative.
struct Rotation {
  double c;
  cplx s;
};

Rotation diagonalizing_rotation(double app, double aqq, cplx apq) {
  const double r = std::abs(apq);
  if (r == 0.0) return {1.0, 0.0};
  const cplx phase = apq / r;
  // Real symmetric 2x2 [[app, r], [r, aqq]]; classic stable Jacobi angle.
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, phase * (t * c)};
}

}  // namespace

EighResult eigh(const ComplexMatrix& input) {
  if (!input.square()) throw std::invalid_argument("eigh: matrix not square");
  const std::size_t n = input.rows();

  // Work on a Hermitized copy so tiny input asymmetry cannot bias sweeps.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = cplx{input(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.max_abs(), 1e-300);
  const double stop = 1e-15 * scale;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        off = std::max(off, r);
        if (r <= stop) continue;
        const auto [c, s] = diagonalizing_rotation(a(p, p).real(), a(q, q).real(), apq);
        // Right-multiply columns p,q of A and V by the rotation, then
        // left-multiply rows p,q of A by its adjoint.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        kernels::rot(a.row(q), a.row(p), c, std::conj(s), n);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        a(p, q) = cplx{0.0, 0.0};
        a(q, p) = cplx{0.0, 0.0};
      }
    }
    if (off <= stop) break;
  }

  EighResult res;
  res.values.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.values[i] = a(i, i).real();
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return res.values[x] > res.values[y]; });
  std::vector<double> sorted(n);
  ComplexMatrix vecs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted[k] = res.values[order[k]];
    for (std::size_t i = 0; i < n; ++i) vecs(i, k) = v(i, order[k]);
  }
  res.values = std::move(sorted);
  res.vectors = std::move(vecs);
  return res;
}

namespace {

// One-sided Jacobi on the columns of a (rows >= cols assumed).
SvdResult svd_tall(const ComplexMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Column-major working copies keep the rotation kernel contiguous.
  std::vector<std::vector<cplx>> col(n, std::vector<cplx>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = a(i, j);
  std::vector<std::vector<cplx>> vcol(n, std::vector<cplx>(n));
  for (std::size_t j = 0; j < n; ++j) vcol[j][j] = 1.0;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double app = kernels::nrm2sq(col[p].data(), m);
        const double aqq = kernels::nrm2sq(col[q].data(), m);
        const cplx apq = kernels::dotc(col[p].data(), col[q].data(), m);
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) + 1e-300) continue;
        rotated = true;
        const auto [c, s] = diagonalizing_rotation(app, aqq, apq);
        // Columns transform like the Gram matrix basis: cp' = c cp - conj(s) cq,
        // cq' = s cp + c cq; kernels::rot(x=cq, y=cp, c, s) realizes exactly that.
        kernels::rot(col[q].data(), col[p].data(), c, s, m);
        kernels::rot(vcol[q].data(), vcol[p].data(), c, s, n);
      }
    }
    if (!rotated) break;
  }

  SvdResult res;
  std::vector<std::size_t> order(n);
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    norms[j] = std::sqrt(kernels::nrm2sq(col[j].data(), m));
    order[j] = j;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  res.values.resize(n);
  res.u = ComplexMatrix(m, n);
  res.v = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    res.values[k] = norms[j];
    if (norms[j] > 0.0) {
      const double inv = 1.0 / norms[j];
      for (std::size_t i = 0; i < m; ++i) res.u(i, k) = col[j][i] * inv;
    }
    for (std::size_t i = 0; i < n; ++i) res.v(i, k) = vcol[j][i];
  }
  return res;
}

}  // namespace

SvdResult svd(const ComplexMatrix& a) {
  if (a.rows() >= a.cols()) return svd_tall(a);
  // A = U S V^dagger  <=>  A^dagger = V S U^dagger.
  SvdResult t = svd_tall(a.adjoint());
  SvdResult res;
  res.values = std::move(t.values);
  res.u = std::move(t.v);
  res.v = std::move(t.u);
  return res;
}

std::vector<double> singular_values(const ComplexMatrix& a) { return svd(a).values; }

double trace_norm(const ComplexMatrix& a) {
  if (a.square() && a.is_hermitian(1e-12 * std::max(1.0, a.max_abs()))) {
    const auto eig = eigh(a);
    double s = 0.0;
    for (double w : eig.values) s += std::abs(w);
    return s;
  }
  const auto sv = singular_values(a);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& a) {
  const auto eig = eigh(a);
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = eig.values[k];
    if (w <= 0.0) continue;
    const double r = std::sqrt(w);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k);
      if (vik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += r * vik * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

std::size_t rank_from_values(const std::vector<double>& values, double rel_cut) {
  if (values.empty()) return 0;
  const double top = *std::max_element(values.begin(), values.end());
  if (top <= 0.0) return 0;
  std::size_t r = 0;
  for (double v : values)
    if (v > rel_cut * top) ++r;
  return r;
}

}  // namespace entkit::la
