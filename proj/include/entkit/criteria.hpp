// Operational separability criteria.  Each check returns a CriterionVerdict:
// Entangled when the criterion's bound is violated beyond tol::detect,
// SeparableCertified only where the criterion is necessary and sufficient,
// NotDetected otherwise.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "entkit/state.hpp"
#include "entkit/tensor.hpp"

namespace entkit {

enum class Outcome { Entangled, NotDetected, SeparableCertified };

std::string_view to_string(Outcome o);

struct CriterionVerdict {
  std::string criterion;
  Outcome outcome = Outcome::NotDetected;
  double score = 0.0;
  double threshold = 0.0;
  std::map<std::string, double> details;
};

// Partial transposition: score is the minimum eigenvalue of rho^{T_A};
// negative beyond tolerance means entangled, and a clean spectrum certifies
// separability on 2x2 and 2x3 systems.
CriterionVerdict ppt_check(const DensityMatrix& rho, const BipartiteSplit& split);

// Spectral majorization against both marginals; score is the worst prefix-sum
// violation.
CriterionVerdict majorization_check(const DensityMatrix& rho, const BipartiteSplit& split);

// Entropy comparison S(rho) >= max marginal entropy; weaker than
// majorization by construction.
CriterionVerdict entropy_check(const DensityMatrix& rho, const BipartiteSplit& split);

// Cross-norm / realignment: score is the operator-Schmidt singular value sum.
CriterionVerdict ccnr_check(const DensityMatrix& rho, const BipartiteSplit& split);

}  // namespace entkit
