#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qpredict/errors.hpp"
#include "qpredict/twoqubit_state.hpp"

namespace qpredict::app {

// Malformed input document (exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written (exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

/// {"t_a":[x,y,z], "t_b":[x,y,z], "c":[[..],[..],[..]]}, C row-major.
/// Throws ParseError on schema violations and NonPhysical for invalid states.
FanoState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const FanoState& s);

FanoState read_state_file(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qpredict::app
