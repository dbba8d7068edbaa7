// Copyright 2026 The oqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Batch front end shared by the `oqw` executable and the tests. Every command
// writes CSV (or a text report) to `out`, diagnostics to `err`, and returns
// the process exit code.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oqw/circuit.hpp"

namespace oqw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  /// "toffoli", "qft3", "qft4", or a path to a circuit file.
  std::string circuit = "toffoli";
  /// Single value "0.8" or inclusive grid "start:stop:step".
  std::string omega = "0.5";
  /// Defaults to 1e-7, or 1e-5 for qft4.
  std::optional<double> tol;
  std::size_t max_steps = 1'000'000;
  /// Input bitstring; defaults to 110 for toffoli and all zeros otherwise.
  std::optional<std::string> input;
  /// Output file; empty writes to the `out` stream.
  std::string out_path;
  /// Sweep workers; 0 reads OQW_THREADS, then the hardware concurrency.
  std::size_t threads = 0;

  // lindblad only
  double dt = 0.01;
  double stop_tol = 1e-8;
  double max_time = 2000.0;
  double sample_interval = 1.0;
  bool reset = false;
};

/// Built-in name or circuit file. Throws ParseError or DomainError.
Circuit load_circuit(std::string_view name_or_path);

/// Parses "x" or "a:b:step" into ascending omega values in (0, 1].
/// Throws DomainError.
std::vector<double> parse_omega_spec(std::string_view spec);

/// Tolerance the run would use for this config.
double effective_tol(const RunConfig& config);

/// Input bitstring the run would use for this circuit.
std::string effective_input(const RunConfig& config, const Circuit& circuit);

/// Worker count for sweeps.
std::size_t effective_threads(const RunConfig& config, std::size_t jobs);

/// %.17g
std::string format_real(double value);

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lindblad(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace oqw::cli
