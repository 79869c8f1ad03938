#include "entkit/state_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "entkit/jsonio.hpp"
#include "json.hpp"

namespace entkit {

namespace {

jsonio::Value data_array(const cplx* data, std::size_t n) {
  auto arr = jsonio::Value::array();
  for (std::size_t i = 0; i < n; ++i) {
    auto pair = jsonio::Value::array();
    pair.push(jsonio::Value::number(data[i].real()));
    pair.push(jsonio::Value::number(data[i].imag()));
    arr.push(std::move(pair));
  }
  return arr;
}

jsonio::Value dims_array(const DimensionList& dims) {
  auto arr = jsonio::Value::array();
  for (std::size_t d : dims.dims()) arr.push(jsonio::Value::integer(static_cast<std::int64_t>(d)));
  return arr;
}

std::string serialize(const char* kind, const DimensionList& dims, const cplx* data,
                      std::size_t n, const std::string& label) {
  auto doc = jsonio::Value::object();
  doc.set("kind", jsonio::Value::string(kind));
  doc.set("dims", dims_array(dims));
  doc.set("data", data_array(data, n));
  if (!label.empty()) doc.set("label", jsonio::Value::string(label));
  return doc.dump(2);
}

}  // namespace

std::string serialize_state(const PureState& psi, const std::string& label) {
  return serialize("pure", psi.dims(), psi.amplitudes().data(), psi.dim(), label);
}

std::string serialize_state(const DensityMatrix& rho, const std::string& label) {
  return serialize("density", rho.dims(), rho.matrix().data(), rho.matrix().size(), label);
}

LoadedState parse_state(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state file: JSON parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw std::invalid_argument("state file: missing string field 'kind' (\"pure\"|\"density\")");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw std::invalid_argument("state file: missing non-empty integer array 'dims'");
  if (!doc.contains("data") || !doc["data"].is_array())
    throw std::invalid_argument("state file: missing array 'data' of [re, im] pairs");

  std::vector<std::size_t> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 2)
      throw std::invalid_argument("state file: every entry of 'dims' must be an integer >= 2");
    dims.push_back(d.get<std::size_t>());
  }
  DimensionList dim_list(dims);

  std::vector<cplx> data;
  data.reserve(doc["data"].size());
  for (const auto& pair : doc["data"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("state file: 'data' entries must be [re, im] number pairs");
    data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }

  const std::string kind = doc["kind"].get<std::string>();
  std::string label = doc.contains("label") && doc["label"].is_string()
                          ? doc["label"].get<std::string>()
                          : "";
  const std::size_t total = dim_list.total();
  if (kind == "pure") {
    if (data.size() != total)
      throw std::invalid_argument("state file: pure state needs " + std::to_string(total) +
                                  " amplitudes, got " + std::to_string(data.size()));
    try {
      return {PureState(std::move(data), std::move(dim_list)), std::move(label)};
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("state file: invalid pure state: ") + e.what());
    }
  }
  if (kind == "density") {
    if (data.size() != total * total)
      throw std::invalid_argument("state file: density matrix needs " +
                                  std::to_string(total * total) + " entries, got " +
                                  std::to_string(data.size()));
    try {
      return {DensityMatrix(ComplexMatrix(total, total, std::move(data)), std::move(dim_list)),
              std::move(label)};
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("state file: invalid density matrix: ") + e.what());
    }
  }
  throw std::invalid_argument("state file: 'kind' must be \"pure\" or \"density\", got \"" +
                              kind + "\"");
}

LoadedState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

void write_state_file(const std::string& path, const std::string& serialized) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << serialized;
  if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

}  // namespace entkit
