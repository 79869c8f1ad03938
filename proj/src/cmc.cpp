#include "entkit/cmc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "entkit/linalg.hpp"

namespace entkit {

namespace {

// Covariance matrix of a single system: gamma_ij = <M_i M_j> - <M_i><M_j>,
// symmetrizing the first term when requested.
ComplexMatrix covariance(const DensityMatrix& rho, const std::vector<ComplexMatrix>& obs,
                         bool symmetric) {
  const std::size_t n = obs.size();
  std::vector<double> mean(n);
  for (std::size_t i = 0; i < n; ++i) mean[i] = expectation_real(rho, obs[i]);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx mij = expectation(rho, obs[i] * obs[j]);
      g(i, j) = mij - mean[i] * mean[j];
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const cplx s = 0.5 * (g(i, j) + g(j, i));
        g(i, j) = s;
        g(j, i) = s;
      }
    }
  }
  return g;
}

}  // namespace

CovarianceMatrixBundle cmc_build(const DensityMatrix& rho, const BipartiteSplit& split,
                                 bool symmetric) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  const DensityMatrix rho_a = partial_trace(merged, {0});
  const DensityMatrix rho_b = partial_trace(merged, {1});
  const auto obs_a = hermitian_basis(da);
  const auto obs_b = hermitian_basis(db);

  CovarianceMatrixBundle bundle;
  bundle.symmetric = symmetric;
  bundle.dim_a = da;
  bundle.dim_b = db;
  bundle.purity_a = rho_a.purity();
  bundle.purity_b = rho_b.purity();
  bundle.block_a = covariance(rho_a, obs_a, symmetric);
  bundle.block_b = covariance(rho_b, obs_b, symmetric);

  std::vector<double> mean_a(obs_a.size()), mean_b(obs_b.size());
  for (std::size_t i = 0; i < obs_a.size(); ++i) mean_a[i] = expectation_real(rho_a, obs_a[i]);
  for (std::size_t j = 0; j < obs_b.size(); ++j) mean_b[j] = expectation_real(rho_b, obs_b[j]);

  bundle.block_x = ComplexMatrix(obs_a.size(), obs_b.size());
  for (std::size_t i = 0; i < obs_a.size(); ++i) {
    for (std::size_t j = 0; j < obs_b.size(); ++j) {
      const double joint =
          expectation_real(merged, ComplexMatrix::kron(obs_a[i], obs_b[j]));
      bundle.block_x(i, j) = joint - mean_a[i] * mean_b[j];
    }
  }

  const std::size_t na = obs_a.size(), nb = obs_b.size();
  bundle.gamma = ComplexMatrix(na + nb, na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) bundle.gamma(i, j) = bundle.block_a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) bundle.gamma(na + i, na + j) = bundle.block_b(i, j);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      bundle.gamma(i, na + j) = bundle.block_x(i, j);
      bundle.gamma(na + j, i) = bundle.block_x(i, j);
    }
  }
  return bundle;
}

namespace {

void check_bundle_matches(const CovarianceMatrixBundle& bundle, const DensityMatrix& rho) {
  if (bundle.dim_a * bundle.dim_b != rho.dim())
    throw std::invalid_argument("cmc: bundle was built for a different state size");
}

}  // namespace

CriterionVerdict cmc_corollary1(const CovarianceMatrixBundle& bundle, const DensityMatrix& rho) {
  check_bundle_matches(bundle, rho);
  const double x_norm = la::trace_norm(bundle.block_x);
  const double rhs = (1.0 - bundle.purity_a) * (1.0 - bundle.purity_b);

  CriterionVerdict v;
  v.criterion = "cmc_corollary1";
  v.score = x_norm * x_norm - rhs;
  v.threshold = 0.0;
  v.details["x_trace_norm"] = x_norm;
  v.details["rhs"] = rhs;
  v.outcome = v.score > tol::detect ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

CriterionVerdict cmc_corollary2(const CovarianceMatrixBundle& bundle, const DensityMatrix& rho,
                                std::optional<std::vector<std::size_t>> j_set) {
  check_bundle_matches(bundle, rho);
  if (!bundle.symmetric)
    throw std::invalid_argument("cmc_corollary2: symmetric covariance bundle required");
  const std::size_t rows_n = bundle.block_x.rows();
  const std::size_t cols_n = bundle.block_x.cols();
  // The bound sums one entry per observable of the smaller side, over
  // distinct indices of the larger side.
  const bool a_side_small = rows_n <= cols_n;
  const std::size_t small_n = a_side_small ? rows_n : cols_n;
  const std::size_t large_n = a_side_small ? cols_n : rows_n;

  std::vector<bool> allowed(large_n, true);
  if (j_set) {
    if (j_set->size() != small_n)
      throw std::invalid_argument("cmc_corollary2: index set must have (min dim)^2 entries");
    allowed.assign(large_n, false);
    for (std::size_t j : *j_set) {
      if (j >= large_n) throw std::invalid_argument("cmc_corollary2: index out of range");
      allowed[j] = true;
    }
  }

  auto x_abs = [&](std::size_t s, std::size_t l) {
    return a_side_small ? std::abs(bundle.block_x(s, l)) : std::abs(bundle.block_x(l, s));
  };

  // Greedy maximum-weight matching of small-side rows to distinct large-side
  // columns.
  std::vector<std::tuple<double, std::size_t, std::size_t>> entries;
  for (std::size_t s = 0; s < small_n; ++s)
    for (std::size_t l = 0; l < large_n; ++l)
      if (allowed[l]) entries.emplace_back(x_abs(s, l), s, l);
  std::sort(entries.begin(), entries.end(),
            [](const auto& p, const auto& q) { return std::get<0>(p) > std::get<0>(q); });
  std::vector<bool> used_s(small_n, false), used_l(large_n, false);
  double lhs = 0.0;
  std::vector<std::size_t> matched(small_n, 0);
  std::size_t taken = 0;
  for (const auto& [w, s, l] : entries) {
    if (used_s[s] || used_l[l]) continue;
    used_s[s] = true;
    used_l[l] = true;
    matched[s] = l;
    lhs += w;
    if (++taken == small_n) break;
  }
  lhs *= 2.0;

  const double rhs = (1.0 - bundle.purity_a) + (1.0 - bundle.purity_b);

  CriterionVerdict v;
  v.criterion = "cmc_corollary2";
  v.score = lhs - rhs;
  v.threshold = 0.0;
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  for (std::size_t s = 0; s < small_n; ++s)
    v.details["match_" + std::to_string(s)] = static_cast<double>(matched[s]);
  v.outcome = v.score > tol::detect ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

CriterionVerdict cmc_corollary3(const DensityMatrix& rho, const BipartiteSplit& split) {
  const auto os = operator_schmidt(rho, split);
  double lhs = 0.0, weighted = 0.0;
  for (std::size_t k = 0; k < os.values.size(); ++k) {
    const double l = os.values[k];
    if (l == 0.0) continue;
    const double ga = os.ops_a[k].trace().real();
    const double gb = os.ops_b[k].trace().real();
    lhs += std::abs(l - l * l * ga * gb);
    weighted += l * l * (ga * ga + gb * gb);
  }
  lhs *= 2.0;
  const double rhs = 2.0 - weighted;

  CriterionVerdict v;
  v.criterion = "cmc_corollary3";
  v.score = lhs - rhs;
  v.threshold = 0.0;
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  v.outcome = v.score > tol::detect ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

}  // namespace entkit
