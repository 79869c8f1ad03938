#include "entkit/range.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"
#include "entkit/linalg.hpp"
#include "entkit/random.hpp"

namespace entkit {

namespace {

// Projector onto the span of eigenvectors with |eigenvalue| above the
// scale-invariant cutoff.  Works for Hermitian matrices that need not be PSD
// (the partial transpose case).
struct RangeProjector {
  ComplexMatrix projector;
  std::size_t rank = 0;
};

RangeProjector range_projector(const ComplexMatrix& m) {
  const auto eig = la::eigh(m);
  double top = 0.0;
  for (double w : eig.values) top = std::max(top, std::abs(w));
  const double cut = 1e-7 * std::max(top, 1e-300);
  const std::size_t n = m.rows();
  RangeProjector rp;
  rp.projector = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(eig.values[k]) <= cut) continue;
    ++rp.rank;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k);
      if (vik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j)
        rp.projector(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return rp;
}

std::vector<cplx> product_amplitudes(const PureState& a, const PureState& b, bool conj_b) {
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  std::vector<cplx> out(va.size() * vb.size());
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t j = 0; j < vb.size(); ++j)
      out[i * vb.size() + j] = va[i] * (conj_b ? std::conj(vb[j]) : vb[j]);
  return out;
}

double membership_residual(const ComplexMatrix& projector, const std::vector<cplx>& v) {
  const auto pv = projector.apply(v);
  double res_sq = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) res_sq += std::norm(v[i] - pv[i]);
  return std::sqrt(std::max(res_sq, 0.0));
}

// Rank of the projected family, counting only vectors that actually lie in
// the range: a vector outside the range cannot appear in any separable
// decomposition, so its projection must not contribute to the span.
std::size_t span_rank(const ComplexMatrix& projector,
                      const std::vector<std::vector<cplx>>& vecs,
                      const std::vector<bool>& in_range) {
  std::size_t members = 0;
  for (bool b : in_range) members += b;
  if (members == 0) return 0;
  const std::size_t d = projector.rows();
  ComplexMatrix m(d, members);
  std::size_t c = 0;
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (!in_range[k]) continue;
    const auto pv = projector.apply(vecs[k]);
    for (std::size_t i = 0; i < d; ++i) m(i, c) = pv[i];
    ++c;
  }
  return la::rank_from_values(la::singular_values(m));
}

}  // namespace

RangeWitnessData range_verify(const DensityMatrix& rho, const BipartiteSplit& split,
                              const std::vector<ProductVector>& candidates) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  for (const auto& [a, b] : candidates) {
    if (a.dim() != da || b.dim() != db)
      throw std::invalid_argument("range_verify: candidate factor dimensions do not match split");
  }

  const RangeProjector pr = range_projector(merged.matrix());
  const RangeProjector pr_pt = range_projector(partial_transpose(merged, 1));

  RangeWitnessData out;
  out.product_vectors = candidates;
  out.rank_rho = pr.rank;
  out.rank_pt = pr_pt.rank;

  std::vector<std::vector<cplx>> plain, conjd;
  std::vector<bool> plain_in, conj_in;
  out.all_in_range = !candidates.empty();
  for (const auto& [a, b] : candidates) {
    auto v = product_amplitudes(a, b, false);
    const double res = membership_residual(pr.projector, v);
    out.worst_membership_residual = std::max(out.worst_membership_residual, res);
    plain_in.push_back(res < tol::range);
    if (res >= tol::range) out.all_in_range = false;
    plain.push_back(std::move(v));
    auto vc = product_amplitudes(a, b, true);
    conj_in.push_back(membership_residual(pr_pt.projector, vc) < tol::range);
    conjd.push_back(std::move(vc));
  }

  out.span_rank = span_rank(pr.projector, plain, plain_in);
  out.span_pt_rank = span_rank(pr_pt.projector, conjd, conj_in);
  out.spans_range = out.span_rank == out.rank_rho && !candidates.empty();
  out.spans_pt_range = out.span_pt_rank == out.rank_pt && !candidates.empty();
  return out;
}

namespace {

// <a (x) f| M |b (x) f> contracted over the B side.
ComplexMatrix side_a_contraction(const ComplexMatrix& m, const std::vector<cplx>& f,
                                 std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < da; ++b) {
      cplx s = 0.0;
      for (std::size_t mu = 0; mu < db; ++mu) {
        const cplx* row = m.row(a * db + mu) + b * db;
        for (std::size_t nu = 0; nu < db; ++nu) s += std::conj(f[mu]) * row[nu] * f[nu];
      }
      out(a, b) = s;
    }
  }
  return out;
}

ComplexMatrix side_b_contraction(const ComplexMatrix& m, const std::vector<cplx>& e,
                                 std::size_t da, std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t mu = 0; mu < db; ++mu) {
    for (std::size_t nu = 0; nu < db; ++nu) {
      cplx s = 0.0;
      for (std::size_t a = 0; a < da; ++a) {
        const cplx* row = m.row(a * db + mu);
        for (std::size_t b = 0; b < da; ++b) s += std::conj(e[a]) * row[b * db + nu] * e[b];
      }
      out(mu, nu) = s;
    }
  }
  return out;
}

std::vector<cplx> smallest_eigvec(const ComplexMatrix& m) {
  const auto eig = la::eigh(m);
  const std::size_t n = m.rows();
  const std::size_t last = n - 1;  // values sorted non-increasing
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, last);
  return v;
}

struct SearchOutcome {
  std::vector<ProductVector> found;
  double best_residual = 1e300;
};

SearchOutcome run_search(const DensityMatrix& rho, const BipartiteSplit& split,
                         std::size_t budget, std::uint64_t seed) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  if (da > 4 || db > 4)
    throw std::domain_error("range_search_product_vectors: sides larger than 4 unsupported");

  const RangeProjector pr = range_projector(merged.matrix());
  // Complement projector; residual^2 = <e,f| (I - P) |e,f>.
  ComplexMatrix comp = ComplexMatrix::identity(da * db);
  comp -= pr.projector;

  SearchOutcome out;
  auto rng = make_rng(seed);
  for (std::size_t restart = 0; restart < budget; ++restart) {
    std::vector<cplx> e = haar_pure(DimensionList({da}), rng).amplitudes();
    std::vector<cplx> f = haar_pure(DimensionList({db}), rng).amplitudes();
    double value = 1e300;
    int stalled = 0;
    for (int iter = 0; iter < 3000; ++iter) {
      const ComplexMatrix me = side_a_contraction(comp, f, da, db);
      e = smallest_eigvec(me);
      const ComplexMatrix mf = side_b_contraction(comp, e, da, db);
      const auto eig = la::eigh(mf);
      f.assign(db, cplx{});
      for (std::size_t i = 0; i < db; ++i) f[i] = eig.vectors(i, db - 1);
      const double next = std::max(eig.values.back(), 0.0);
      // The descent rate can approach one near a flat product valley; stop
      // only on a genuine stall or once membership is settled either way.
      stalled = (value - next < 1e-20) ? stalled + 1 : 0;
      value = next;
      if (value < 1e-18 || stalled >= 3) break;
    }
    const double residual = std::sqrt(std::max(value, 0.0));
    out.best_residual = std::min(out.best_residual, residual);
    if (residual < tol::range) {
      out.found.emplace_back(PureState(e, DimensionList({da})),
                             PureState(f, DimensionList({db})));
    }
  }
  return out;
}

}  // namespace

std::vector<ProductVector> range_search_product_vectors(const DensityMatrix& rho,
                                                        const BipartiteSplit& split,
                                                        std::size_t budget, std::uint64_t seed) {
  return run_search(rho, split, budget, seed).found;
}

double range_search_best_residual(const DensityMatrix& rho, const BipartiteSplit& split,
                                  std::size_t budget, std::uint64_t seed) {
  return run_search(rho, split, budget, seed).best_residual;
}

}  // namespace entkit
