// Named state catalog: the reference states every verification suite runs on.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "entkit/state.hpp"

namespace entkit {

using CatalogState = std::variant<PureState, DensityMatrix>;

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;  // "p in [0,1]" style range text
};

// Known names: singlet, psi-plus, phi-plus, phi-minus, werner(p), ghz, w,
// wbar, horodecki-a(a), horodecki-alpha(alpha), upb-tiles, maximally-mixed.
CatalogState catalog(const std::string& name, const std::map<std::string, double>& params = {});

const std::vector<CatalogEntry>& catalog_list();

DensityMatrix as_density(const CatalogState& state);
const DimensionList& catalog_dims(const CatalogState& state);

}  // namespace entkit
