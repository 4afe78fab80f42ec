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

#include <iosfwd>

#include "dlab/config.hpp"
#include "dlab/report.hpp"

namespace dlab::cli {

Provenance provenance_for(const RunConfig& config);

/**
 * Runs one validated command. Results go to `out`; failures are reported on
 * `err` as a one-line JSON object {"error", "kind", "exit_code"} and mapped
 * to the exit-code table in config.hpp.
 */
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace dlab::cli
