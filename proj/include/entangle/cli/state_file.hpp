#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "entangle/states.hpp"
#include "entangle/witness.hpp"

namespace entangle::cli {

/// Malformed or inconsistent input file.
class StateFileError : public Error {
 public:
  using Error::Error;
};

/// On-disk state description.
///
///   {"name": "...", "seed": 7, "dims": [2, 2], "kind": "mixed",
///    "matrix": [[[re, im], ...], ...]}
///   {"dims": [2, 2], "kind": "pure", "amplitudes": [[re, im], ...]}
struct StateFile {
  BipartiteDims dims{1, 1};
  std::variant<ComplexMatrix, ComplexVector> data;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;

  bool is_pure() const { return std::holds_alternative<ComplexVector>(data); }

  /// Validated state; pure files are converted to their projector.
  DensityMatrix density(double tol = kDefaultTol) const;
  /// Throws StateFileError for mixed files.
  PureState pure() const;
};

StateFile parse_state(const nlohmann::json& j);
StateFile read_state_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const StateFile& file);
StateFile make_state_file(const DensityMatrix& rho, std::optional<std::string> name = {},
                          std::optional<std::uint64_t> seed = {});
StateFile make_state_file(const PureState& psi, std::optional<std::string> name = {},
                          std::optional<std::uint64_t> seed = {});

/// {"dims": [dA, dB], "matrix": ..., optional "P": ..., "Q": ...}
Witness read_witness_file(const std::filesystem::path& path, double tol = kDefaultTol);
Witness parse_witness(const nlohmann::json& j, double tol = kDefaultTol);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const char* field);

}  // namespace entangle::cli
