#include "entkit/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "entkit/linalg.hpp"
#include "entkit/schmidt.hpp"

namespace entkit {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Entangled: return "entangled";
    case Outcome::NotDetected: return "not_detected";
    case Outcome::SeparableCertified: return "separable_certified";
  }
  return "unknown";
}

CriterionVerdict ppt_check(const DensityMatrix& rho, const BipartiteSplit& split) {
  const DensityMatrix merged = merge_split(rho, split);
  const ComplexMatrix pt = partial_transpose(merged, 0);
  const auto vals = la::eigh(pt).values;
  const double min_eig = vals.back();

  CriterionVerdict v;
  v.criterion = "ppt";
  v.score = min_eig;
  v.threshold = 0.0;
  v.details["min_eigenvalue"] = min_eig;
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  const bool low_dim = (da == 2 && db == 2) || (da == 2 && db == 3) || (da == 3 && db == 2);
  if (min_eig < -tol::psd) {
    v.outcome = Outcome::Entangled;
  } else if (low_dim) {
    v.outcome = Outcome::SeparableCertified;
  } else {
    v.outcome = Outcome::NotDetected;
  }
  return v;
}

namespace {

// Largest violation of "x majorized by y": max over prefixes of the
// descending prefix-sum excess of x over y (y zero-padded to x's length).
double majorization_violation(const std::vector<double>& x, const std::vector<double>& y) {
  double worst = 0.0;
  double sx = 0.0, sy = 0.0;
  for (std::size_t l = 0; l < x.size(); ++l) {
    sx += x[l];
    if (l < y.size()) sy += y[l];
    worst = std::max(worst, sx - sy);
  }
  return worst;
}

}  // namespace

CriterionVerdict majorization_check(const DensityMatrix& rho, const BipartiteSplit& split) {
  const auto global = la::eigh(rho.matrix()).values;
  const auto spec_a = la::eigh(partial_trace(rho, split.party_a()).matrix()).values;
  const auto spec_b = la::eigh(partial_trace(rho, split.party_b()).matrix()).values;

  const double va = majorization_violation(global, spec_a);
  const double vb = majorization_violation(global, spec_b);

  CriterionVerdict v;
  v.criterion = "majorization";
  v.score = std::max(va, vb);
  v.threshold = 0.0;
  v.details["violation_vs_a"] = va;
  v.details["violation_vs_b"] = vb;
  v.outcome = v.score > tol::psd ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

CriterionVerdict entropy_check(const DensityMatrix& rho, const BipartiteSplit& split) {
  const double s = von_neumann_entropy(rho);
  const double sa = von_neumann_entropy(partial_trace(rho, split.party_a()));
  const double sb = von_neumann_entropy(partial_trace(rho, split.party_b()));
  const double max_marginal = std::max(sa, sb);

  CriterionVerdict v;
  v.criterion = "entropy";
  v.score = s - max_marginal;
  v.threshold = 0.0;
  v.details["entropy_global"] = s;
  v.details["entropy_a"] = sa;
  v.details["entropy_b"] = sb;
  v.outcome = v.score < -tol::detect ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

CriterionVerdict ccnr_check(const DensityMatrix& rho, const BipartiteSplit& split) {
  const auto vals = realign(rho, split);
  double sum = 0.0;
  for (double x : vals) sum += x;

  CriterionVerdict v;
  v.criterion = "ccnr";
  v.score = sum;
  v.threshold = 1.0;
  v.details["singular_value_sum"] = sum;
  v.outcome = sum > 1.0 + tol::detect ? Outcome::Entangled : Outcome::NotDetected;
  return v;
}

}  // namespace entkit
