// State file format: a JSON document with fields `dims` (integer list),
// `kind` ("pure" | "density"), `data` (row-major [re, im] pairs), and an
// optional `label`.  Doubles are written with 17 significant digits so the
// round trip is exact.

#pragma once

#include <string>
#include <variant>

#include "entkit/state.hpp"

namespace entkit {

struct LoadedState {
  std::variant<PureState, DensityMatrix> state;
  std::string label;
};

std::string serialize_state(const PureState& psi, const std::string& label = "");
std::string serialize_state(const DensityMatrix& rho, const std::string& label = "");

// Parses and validates; throws std::invalid_argument with actionable text on
// malformed documents or unphysical states.
LoadedState parse_state(const std::string& json_text);

LoadedState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const std::string& serialized);

}  // namespace entkit
