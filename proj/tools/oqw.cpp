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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oqw/cli.hpp"
#include "oqw/error.hpp"
#include "oqw/kernels.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Open quantum walk simulator for dissipative circuit computation"};
  app.require_subcommand(1);

  oqw::cli::RunConfig config;
  std::string kernels;
  app.add_option("--kernels", kernels, "Kernel backend: scalar, avx2, neon or auto");

  const auto add_common = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--circuit", config.circuit, "Built-in (toffoli, qft3, qft4) or circuit file")
        ->capture_default_str();
    cmd->add_option("--omega", config.omega, "Forward weight x or grid start:stop:step")->capture_default_str();
    cmd->add_option("--input", config.input, "Input bitstring, qubit 1 first");
    cmd->add_option("--out", config.out_path, "Write output to this file instead of stdout");
  };
  const auto add_walk = [&](CLI::App* cmd) {
    cmd->add_option("--tol", config.tol, "Convergence tolerance (default 1e-7, 1e-5 for qft4)");
    cmd->add_option("--max-steps", config.max_steps, "Step limit")->capture_default_str();
  };

  CLI::App* validate = app.add_subcommand("validate", "Check gate unitarity and walk normalization");
  add_common(validate);

  CLI::App* run = app.add_subcommand("run", "Run one walk and emit the node distribution per step");
  add_common(run);
  add_walk(run);

  CLI::App* sweep = app.add_subcommand("sweep", "Steps to converge and detection over an omega grid");
  add_common(sweep);
  add_walk(sweep);
  sweep->add_option("--threads", config.threads, "Worker threads (default OQW_THREADS or all cores)");

  CLI::App* lindblad = app.add_subcommand("lindblad", "Integrate the continuous-time master equation");
  add_common(lindblad);
  lindblad->add_option("--dt", config.dt, "RK4 time step")->capture_default_str();
  lindblad->add_option("--stop-tol", config.stop_tol, "Stop when ||rhs||_F drops below this")
      ->capture_default_str();
  lindblad->add_option("--max-time", config.max_time, "Integration time limit")->capture_default_str();
  lindblad->add_option("--sample", config.sample_interval, "Marginal sampling interval")->capture_default_str();
  lindblad->add_flag("--reset", config.reset, "Add the register-0 qubit reset jumps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : oqw::cli::kExitInputError;
  }

  if (!kernels.empty()) {
    try {
      oqw::kernels::set_active(oqw::kernels::parse_backend(kernels));
    } catch (const oqw::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return oqw::cli::kExitInputError;
    }
  }

  if (*validate) return oqw::cli::cmd_validate(config, std::cout, std::cerr);
  if (*run) return oqw::cli::cmd_run(config, std::cout, std::cerr);
  if (*sweep) return oqw::cli::cmd_sweep(config, std::cout, std::cerr);
  return oqw::cli::cmd_lindblad(config, std::cout, std::cerr);
}
