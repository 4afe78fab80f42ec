// Copyright 2026 The dlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace dlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

enum class ValueType { Int, Real, String, Bool, IntList, StringList };

/// One namespaced configuration key and the command-line flag that sets it.
struct KeySpec {
  std::string key;   ///< e.g. "bounds.delta"
  std::string flag;  ///< e.g. "--delta"
  ValueType type = ValueType::String;
  nlohmann::json default_value;  ///< null: no default
  std::string help;
};

/// Keys accepted by a subcommand, in registration order. Throws
/// std::invalid_argument for unknown commands.
const std::vector<KeySpec>& keys_for(std::string_view command);

/// "dla", "bound eval", "bound budget", "bound curve", "data gen", "train",
/// "sweep", "report".
const std::vector<std::string>& known_commands();

/**
 * Fully resolved, validated parameters for one invocation.
 *
 * `params` is a flat JSON object keyed by namespaced keys; every key for
 * the command is present (defaults filled). Keys without a value and
 * without a default are absent.
 */
struct RunConfig {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  /// Notes about where values came from (e.g. a flag overriding the file).
  std::vector<std::string> provenance;

  std::uint64_t seed() const;
  std::string out_dir() const;
  bool has(const std::string& key) const;

  /// {"command": ..., "params": {...}}; object keys are sorted so equal
  /// configs serialize identically.
  std::string to_json() const;
  static RunConfig from_json(std::string_view text);

  /// FNV-1a 64 of to_json(), as 16 hex digits.
  std::string hash() const;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;
  int exit_code = kExitOk;
  /// Set when --help was requested; print and exit 0.
  std::string help;
};

/**
 * Parses argv (without the program name). `--config <file>` loads a flat
 * JSON object of namespaced keys first; flags then override file values.
 * Unknown flags, unknown file keys and unparsable values are usage errors
 * (exit 2); out-of-domain values are domain errors (exit 3). All errors are
 * collected before returning.
 */
ParseOutcome parse_config(std::span<const std::string> args);

/// Applies the per-command domain checks to an already-typed config.
std::vector<std::string> validate(const RunConfig& config);

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "DLAB_OUT_DIR";

}  // namespace dlab::cli
