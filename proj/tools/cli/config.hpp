#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace strichartz::cli {

using Json = nlohmann::json;

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kSchemaError = 2;
inline constexpr int kGuardTrip = 3;
inline constexpr int kIoError = 4;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& experiment_names();

struct ExperimentConfig {
  std::string experiment;
  Json params = Json::object();  // flat key -> scalar or list
};

// Flat key=value text (one pair per line, '#' comments) or a JSON object.
// Values in key=value text are read as JSON when possible, a bare comma list
// becomes an array, anything else a string.
ExperimentConfig parse_config(std::string_view text, const std::string& experiment);
ExperimentConfig load_config(const std::filesystem::path& path, const std::string& experiment);

// Checks keys and types against the experiment's schema, fills defaults and
// returns the resolved parameter object. Throws SchemaError.
Json resolve(const ExperimentConfig& config);

}  // namespace strichartz::cli
