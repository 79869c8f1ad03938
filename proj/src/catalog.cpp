#include "entkit/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/tensor.hpp"

namespace entkit {

namespace {

double require_param(const std::map<std::string, double>& params, const std::string& key,
                     double lo, double hi, bool open_lo, bool open_hi) {
  const auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("catalog: missing parameter '" + key + "'");
  const double v = it->second;
  const bool below = open_lo ? v <= lo : v < lo;
  const bool above = open_hi ? v >= hi : v > hi;
  if (below || above) {
    throw std::invalid_argument("catalog: parameter '" + key + "' = " + std::to_string(v) +
                                " outside " + (open_lo ? "(" : "[") + std::to_string(lo) + ", " +
                                std::to_string(hi) + (open_hi ? ")" : "]"));
  }
  return v;
}

PureState bell(int which) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amp(4);
  switch (which) {
    case 0: amp[1] = s; amp[2] = -s; break;  // psi-minus (singlet)
    case 1: amp[1] = s; amp[2] = s; break;   // psi-plus
    case 2: amp[0] = s; amp[3] = s; break;   // phi-plus
    default: amp[0] = s; amp[3] = -s; break; // phi-minus
  }
  return PureState(std::move(amp), DimensionList({2, 2}));
}

DensityMatrix werner(double p) {
  const PureState singlet = bell(0);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= cplx{(1.0 - p) / 4.0, 0.0};
  const auto& a = singlet.amplitudes();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) += p * a[i] * std::conj(a[j]);
  return DensityMatrix(std::move(m), DimensionList({2, 2}));
}

PureState ghz3() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amp(8);
  amp[0] = s;
  amp[7] = s;
  return PureState(std::move(amp), DimensionList({2, 2, 2}));
}

PureState w3(bool complemented) {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<cplx> amp(8);
  if (!complemented) {
    amp[1] = s;  // |001>
    amp[2] = s;  // |010>
    amp[4] = s;  // |100>
  } else {
    amp[6] = s;  // |110>
    amp[5] = s;  // |101>
    amp[3] = s;  // |011>
  }
  return PureState(std::move(amp), DimensionList({2, 2, 2}));
}

// 3x3 PPT-entangled family with the rank-deficient product-vector structure.
DensityMatrix horodecki_a(double a) {
  ComplexMatrix m(9, 9);
  const double h = (1.0 + a) / 2.0;
  const double g = std::sqrt(1.0 - a * a) / 2.0;
  for (int i = 0; i < 9; ++i) m(i, i) = a;
  m(6, 6) = h;
  m(8, 8) = h;
  m(0, 4) = a; m(4, 0) = a;
  m(0, 8) = a; m(8, 0) = a;
  m(4, 8) = a; m(8, 4) = a;
  m(6, 8) = g; m(8, 6) = g;
  m *= cplx{1.0 / (8.0 * a + 1.0), 0.0};
  return DensityMatrix(std::move(m), DimensionList({3, 3}));
}

// 3x3 family 2/7 |psi+><psi+| + alpha/7 rho_+ + (5-alpha)/7 rho_-, with
// rho_+- the cyclic-shift product mixtures.
DensityMatrix horodecki_alpha(double alpha) {
  ComplexMatrix m(9, 9);
  const double t = 1.0 / 3.0;
  // (2/7) |psi+><psi+|, psi+ = (|00> + |11> + |22>)/sqrt(3).
  const int diag_idx[3] = {0, 4, 8};
  for (int i : diag_idx)
    for (int j : diag_idx) m(i, j) += (2.0 / 7.0) * t;
  // (alpha/7) * (|01><01| + |12><12| + |20><20|)/3.
  for (int i : {1, 5, 6}) m(i, i) += (alpha / 7.0) * t;
  // ((5-alpha)/7) * (|10><10| + |21><21| + |02><02|)/3.
  for (int i : {3, 7, 2}) m(i, i) += ((5.0 - alpha) / 7.0) * t;
  return DensityMatrix(std::move(m), DimensionList({3, 3}));
}

std::vector<PureState> tiles() {
  const double s = 1.0 / std::sqrt(2.0);
  const double t = 1.0 / 3.0;
  auto mk = [](std::vector<cplx> v) { return PureState(std::move(v), DimensionList({3, 3})); };
  std::vector<PureState> out;
  out.push_back(mk({s, -s, 0, 0, 0, 0, 0, 0, 0}));
  out.push_back(mk({0, 0, s, 0, 0, -s, 0, 0, 0}));
  out.push_back(mk({0, 0, 0, 0, 0, 0, 0, s, -s}));
  out.push_back(mk({0, 0, 0, s, 0, 0, -s, 0, 0}));
  out.push_back(mk({t, t, t, t, t, t, t, t, t}));
  return out;
}

DensityMatrix upb_tiles() {
  ComplexMatrix m = ComplexMatrix::identity(9);
  for (const auto& psi : tiles()) {
    const auto& v = psi.amplitudes();
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) m(i, j) -= v[i] * std::conj(v[j]);
  }
  m *= cplx{0.25, 0.0};
  return DensityMatrix(std::move(m), DimensionList({3, 3}));
}

}  // namespace

CatalogState catalog(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "singlet" || name == "psi-minus") return bell(0);
  if (name == "psi-plus") return bell(1);
  if (name == "phi-plus") return bell(2);
  if (name == "phi-minus") return bell(3);
  if (name == "werner") {
    return werner(require_param(params, "p", 0.0, 1.0, false, false));
  }
  if (name == "ghz") return ghz3();
  if (name == "w") return w3(false);
  if (name == "wbar") return w3(true);
  if (name == "horodecki-a") {
    return horodecki_a(require_param(params, "a", 0.0, 1.0, true, true));
  }
  if (name == "horodecki-alpha") {
    return horodecki_alpha(require_param(params, "alpha", 0.0, 5.0, false, false));
  }
  if (name == "upb-tiles") return upb_tiles();
  if (name == "maximally-mixed-2x2") return DensityMatrix::maximally_mixed(DimensionList({2, 2}));
  throw std::invalid_argument("catalog: unknown state name '" + name +
                              "'; run `catalog list` for the available names");
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries{
      {"singlet", "two-qubit singlet (|01> - |10>)/sqrt(2)", {}},
      {"psi-plus", "Bell state (|01> + |10>)/sqrt(2)", {}},
      {"phi-plus", "Bell state (|00> + |11>)/sqrt(2)", {}},
      {"phi-minus", "Bell state (|00> - |11>)/sqrt(2)", {}},
      {"werner", "p |Psi-><Psi-| + (1-p) I/4", {"p in [0, 1]"}},
      {"ghz", "(|000> + |111>)/sqrt(2)", {}},
      {"w", "(|001> + |010> + |100>)/sqrt(3)", {}},
      {"wbar", "(|110> + |101> + |011>)/sqrt(3)", {}},
      {"horodecki-a", "3x3 PPT entangled family, range-criterion target", {"a in (0, 1)"}},
      {"horodecki-alpha", "3x3 family mixing |psi+> with cyclic product states",
       {"alpha in [0, 5]"}},
      {"upb-tiles", "normalized projector complementary to the tiles product basis", {}},
      {"maximally-mixed-2x2", "I/4 on two qubits", {}},
  };
  return entries;
}

DensityMatrix as_density(const CatalogState& state) {
  if (std::holds_alternative<DensityMatrix>(state)) return std::get<DensityMatrix>(state);
  return DensityMatrix::pure(std::get<PureState>(state));
}

const DimensionList& catalog_dims(const CatalogState& state) {
  if (std::holds_alternative<DensityMatrix>(state)) return std::get<DensityMatrix>(state).dims();
  return std::get<PureState>(state).dims();
}

}  // namespace entkit
