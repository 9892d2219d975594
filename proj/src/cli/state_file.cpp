#include "entangle/cli/state_file.hpp"

#include <fstream>

namespace entangle::cli {

namespace {

using nlohmann::json;

cplx complex_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw StateFileError(std::string(field) + ": every entry must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z) {
  return json::array({z.real(), z.imag()});
}

BipartiteDims dims_from_json(const json& j) {
  if (!j.contains("dims")) throw StateFileError("missing field \"dims\"");
  const json& d = j.at("dims");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
    throw StateFileError("\"dims\" must be a pair of positive integers");
  }
  const int da = d[0].get<int>();
  const int db = d[1].get<int>();
  if (da < 1 || db < 1) throw StateFileError("\"dims\" must be a pair of positive integers");
  return BipartiteDims(da, db);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw StateFileError(path.string() + ": not valid JSON (" + e.what() + ")");
  }
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.empty()) {
    throw StateFileError(std::string(field) + " must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw StateFileError(std::string(field) + " rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw StateFileError(std::string(field) + " is ragged");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], field);
    }
  }
  return m;
}

StateFile parse_state(const json& j) {
  if (!j.is_object()) throw StateFileError("state file must be a JSON object");
  StateFile out;
  out.dims = dims_from_json(j);
  const std::string kind = j.value("kind", j.contains("amplitudes") ? "pure" : "mixed");
  if (kind == "pure") {
    if (!j.contains("amplitudes")) throw StateFileError("pure state needs \"amplitudes\"");
    const json& a = j.at("amplitudes");
    if (!a.is_array()) throw StateFileError("\"amplitudes\" must be an array");
    ComplexVector v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = complex_from_json(a[i], "amplitudes");
    }
    if (v.size() != out.dims.total()) {
      throw StateFileError("\"amplitudes\" length does not equal d_A * d_B");
    }
    out.data = std::move(v);
  } else if (kind == "mixed") {
    if (!j.contains("matrix")) throw StateFileError("mixed state needs \"matrix\"");
    ComplexMatrix m = matrix_from_json(j.at("matrix"), "matrix");
    if (m.rows() != out.dims.total() || m.cols() != out.dims.total()) {
      throw StateFileError("\"matrix\" is not (d_A d_B) x (d_A d_B)");
    }
    out.data = std::move(m);
  } else {
    throw StateFileError("\"kind\" must be \"pure\" or \"mixed\"");
  }
  if (j.contains("name") && j.at("name").is_string()) out.name = j.at("name").get<std::string>();
  if (j.contains("seed") && j.at("seed").is_number_unsigned()) {
    out.seed = j.at("seed").get<std::uint64_t>();
  }
  return out;
}

StateFile read_state_file(const std::filesystem::path& path) {
  return parse_state(read_json(path));
}

DensityMatrix StateFile::density(double tol) const {
  if (is_pure()) return projector(pure());
  return DensityMatrix(std::get<ComplexMatrix>(data), dims, tol);
}

PureState StateFile::pure() const {
  if (!is_pure()) throw StateFileError("operation requires a pure state file (kind \"pure\")");
  return PureState(std::get<ComplexVector>(data), dims, 1e-10);
}

nlohmann::ordered_json to_json(const StateFile& file) {
  nlohmann::ordered_json j;
  if (file.name) j["name"] = *file.name;
  if (file.seed) j["seed"] = *file.seed;
  j["dims"] = {file.dims.d_a(), file.dims.d_b()};
  if (file.is_pure()) {
    j["kind"] = "pure";
    const auto& v = std::get<ComplexVector>(file.data);
    json amps = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) amps.push_back(complex_to_json(v(i)));
    j["amplitudes"] = std::move(amps);
  } else {
    j["kind"] = "mixed";
    j["matrix"] = matrix_to_json(std::get<ComplexMatrix>(file.data));
  }
  return j;
}

StateFile make_state_file(const DensityMatrix& rho, std::optional<std::string> name,
                          std::optional<std::uint64_t> seed) {
  return {rho.dims(), rho.matrix(), std::move(name), seed};
}

StateFile make_state_file(const PureState& psi, std::optional<std::string> name,
                          std::optional<std::uint64_t> seed) {
  return {psi.dims(), psi.amplitudes(), std::move(name), seed};
}

Witness parse_witness(const json& j, double tol) {
  if (!j.is_object()) throw StateFileError("witness file must be a JSON object");
  const BipartiteDims dims = dims_from_json(j);
  if (!j.contains("matrix")) throw StateFileError("witness file needs \"matrix\"");
  ComplexMatrix op = matrix_from_json(j.at("matrix"), "matrix");
  std::optional<WitnessDecomposition> dec;
  if (j.contains("P") || j.contains("Q")) {
    if (!j.contains("P") || !j.contains("Q")) {
      throw StateFileError("witness decomposition needs both \"P\" and \"Q\"");
    }
    dec = WitnessDecomposition{matrix_from_json(j.at("P"), "P"), matrix_from_json(j.at("Q"), "Q")};
  }
  return Witness(std::move(op), dims, std::move(dec), tol);
}

Witness read_witness_file(const std::filesystem::path& path, double tol) {
  return parse_witness(read_json(path), tol);
}

}  // namespace entangle::cli
