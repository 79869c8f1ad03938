#include "entkit/densecoding.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/linalg.hpp"
#include "entkit/schmidt.hpp"

namespace entkit {

std::string_view to_string(DcClass c) {
  switch (c) {
    case DcClass::Separable: return "separable";
    case DcClass::PPTEntangled: return "ppt_entangled";
    case DcClass::NPTnonDC: return "npt_non_dc";
    case DcClass::DC: return "dense_codeable";
    case DcClass::PPTUndecided: return "ppt_undecided";
  }
  return "unknown";
}

double holevo_chi(const std::vector<double>& weights, const std::vector<DensityMatrix>& members) {
  if (weights.size() != members.size() || weights.empty())
    throw std::invalid_argument("holevo_chi: weight/member mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("holevo_chi: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::norm)
    throw std::invalid_argument("holevo_chi: weights do not sum to one");
  const std::size_t d = members.front().dim();
  ComplexMatrix avg(d, d);
  double mean_entropy = 0.0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k].dim() != d) throw std::invalid_argument("holevo_chi: dimension mismatch");
    ComplexMatrix scaled = members[k].matrix();
    scaled *= cplx{weights[k], 0.0};
    avg += scaled;
    mean_entropy += weights[k] * von_neumann_entropy(members[k]);
  }
  const double chi =
      entropy_of_spectrum(la::eigh(avg).values) - mean_entropy;
  return std::max(chi, 0.0);
}

DenseCodingReport dc_capacity(const DensityMatrix& rho, const BipartiteSplit& split) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  const double s_rho = von_neumann_entropy(merged);
  const double s_b = von_neumann_entropy(partial_trace(merged, {1}));

  DenseCodingReport rep;
  rep.advantage = s_b - s_rho;
  const double log_da = std::log2(static_cast<double>(da));
  rep.capacity = log_da + std::max(rep.advantage, 0.0);

  const auto pt_vals = la::eigh(partial_transpose(merged, 0)).values;
  const bool ppt = pt_vals.back() >= -tol::psd;
  const bool low_dim = (da == 2 && db == 2) || (da == 2 && db == 3) || (da == 3 && db == 2);
  if (ppt) {
    rep.cls = low_dim ? DcClass::Separable : DcClass::PPTUndecided;
  } else if (rep.advantage > tol::detect) {
    rep.cls = DcClass::DC;
  } else {
    rep.cls = DcClass::NPTnonDC;
  }
  return rep;
}

std::vector<ComplexMatrix> weyl_operators(std::size_t d) {
  if (d < 2) throw std::invalid_argument("weyl_operators: dimension must be >= 2");
  ComplexMatrix shift(d, d), clock(d, d);
  const double step = 2.0 * M_PI / static_cast<double>(d);
  for (std::size_t k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = cplx{std::cos(step * k), std::sin(step * k)};
  }
  std::vector<ComplexMatrix> ws;
  ws.reserve(d * d);
  ComplexMatrix xa = ComplexMatrix::identity(d);
  for (std::size_t a = 0; a < d; ++a) {
    ComplexMatrix w = xa;
    for (std::size_t b = 0; b < d; ++b) {
      ws.push_back(w);
      w = w * clock;
    }
    xa = shift * xa;
  }
  return ws;
}

void dense_coding_ensemble(const DensityMatrix& rho, const BipartiteSplit& split,
                           std::vector<double>& weights, std::vector<DensityMatrix>& members) {
  const DensityMatrix merged = merge_split(rho, split);
  const std::size_t da = merged.dims()[0];
  const std::size_t db = merged.dims()[1];
  const auto ws = weyl_operators(da);
  const ComplexMatrix eye_b = ComplexMatrix::identity(db);
  weights.assign(ws.size(), 1.0 / static_cast<double>(ws.size()));
  members.clear();
  for (const auto& w : ws) {
    const ComplexMatrix u = ComplexMatrix::kron(w, eye_b);
    members.push_back(
        DensityMatrix::trusted(u * merged.matrix() * u.adjoint(), merged.dims()));
  }
}

}  // namespace entkit
