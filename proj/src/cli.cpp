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

#include "oqw/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "oqw/chain.hpp"
#include "oqw/engine.hpp"
#include "oqw/error.hpp"
#include "oqw/lindblad.hpp"
#include "oqw/walk.hpp"

namespace oqw::cli {
namespace {

std::optional<double> to_real(std::string_view s) {
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Runs `body` against the configured output (file or `out`). Input problems
// surface as exit code 2 with the message on `err`.
int guarded(const RunConfig& config, std::ostream& out, std::ostream& err,
            const std::function<int(std::ostream&)>& body) {
  try {
    if (config.out_path.empty()) return body(out);
    std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << config.out_path << "\n";
      return kExitInputError;
    }
    const int code = body(file);
    file.flush();
    if (!file) {
      err << "error: failed writing " << config.out_path << "\n";
      return kExitInputError;
    }
    return code;
  } catch (const ParseError& e) {
    err << "error: " << config.circuit << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

double single_omega(const RunConfig& config) {
  const std::vector<double> values = parse_omega_spec(config.omega);
  if (values.size() != 1) throw DomainError("this command takes a single omega, not a grid");
  return values.front();
}

struct Prepared {
  Circuit circuit;
  std::vector<ComplexMatrix> unitaries;
  std::vector<Complex> psi0;
  std::vector<Complex> target;
};

Prepared prepare(const RunConfig& config) {
  Circuit circuit = load_circuit(config.circuit);
  if (circuit.num_slices() == 0) throw DomainError("circuit has no slices");
  const std::string bits = effective_input(config, circuit);
  if (bits.size() != circuit.num_qubits()) {
    throw DomainError("input '" + bits + "' must have " + std::to_string(circuit.num_qubits()) + " bits");
  }
  std::vector<Complex> psi0 = basis_state(bits);
  std::vector<ComplexMatrix> unitaries = circuit_unitaries(circuit);
  std::vector<Complex> target = computation_path(unitaries, psi0).back();
  return {std::move(circuit), std::move(unitaries), std::move(psi0), std::move(target)};
}

ConvergenceReport run_one(const Prepared& p, double omega, double tol, std::size_t max_steps, bool history) {
  const OpenQuantumWalk walk = build_dqc_chain(std::span<const ComplexMatrix>(p.unitaries), ChainParams(omega));
  const BlockState init = BlockState::localized(walk.num_nodes(), 0, p.psi0);
  return run_until_converged(walk, init, tol, max_steps, walk.num_nodes() - 1, p.target, history);
}

}  // namespace

Circuit load_circuit(std::string_view name_or_path) {
  if (name_or_path == "toffoli") return toffoli13();
  if (name_or_path == "qft3") return qft(3);
  if (name_or_path == "qft4") return qft(4);
  const std::string path(name_or_path);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read circuit file '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_circuit(text.str(), path);
}

std::vector<double> parse_omega_spec(std::string_view spec) {
  const auto check = [](double w) {
    if (!(w > 0.0 && w <= 1.0)) throw DomainError("omega " + format_real(w) + " is outside (0, 1]");
    return w;
  };
  const std::size_t c1 = spec.find(':');
  if (c1 == std::string_view::npos) {
    const auto w = to_real(spec);
    if (!w) throw DomainError("bad omega '" + std::string(spec) + "'");
    return {check(*w)};
  }
  const std::size_t c2 = spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos) {
    throw DomainError("omega grid must be start:stop:step");
  }
  const auto start = to_real(spec.substr(0, c1));
  const auto stop = to_real(spec.substr(c1 + 1, c2 - c1 - 1));
  const auto stride = to_real(spec.substr(c2 + 1));
  if (!start || !stop || !stride) throw DomainError("bad omega grid '" + std::string(spec) + "'");
  if (!(*stride > 0.0) || *stop < *start) throw DomainError("omega grid must ascend with a positive step");
  const auto count = static_cast<std::size_t>(std::floor((*stop - *start) / *stride + 1e-9)) + 1;
  std::vector<double> values;
  for (std::size_t k = 0; k < count; ++k) {
    // Snap to 12 decimals so 0.5 + 3 * 0.05 prints as 0.65.
    const double w = std::round((*start + static_cast<double>(k) * *stride) * 1e12) / 1e12;
    values.push_back(check(w));
  }
  return values;
}

double effective_tol(const RunConfig& config) {
  if (config.tol) {
    if (!(*config.tol > 0.0)) throw DomainError("tol must be positive");
    return *config.tol;
  }
  return config.circuit == "qft4" ? 1e-5 : 1e-7;
}

std::string effective_input(const RunConfig& config, const Circuit& circuit) {
  if (config.input) return *config.input;
  if (config.circuit == "toffoli") return "110";
  return std::string(circuit.num_qubits(), '0');
}

std::size_t effective_threads(const RunConfig& config, std::size_t jobs) {
  std::size_t n = config.threads;
  if (n == 0) {
    if (const char* env = std::getenv("OQW_THREADS"); env != nullptr && *env != '\0') {
      n = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(jobs, 1));
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& os) {
    constexpr double kGate = 1e-10;
    const Circuit circuit = load_circuit(config.circuit);
    if (circuit.num_slices() == 0) throw DomainError("circuit has no slices");
    const double omega = parse_omega_spec(config.omega).front();
    const std::vector<ComplexMatrix> unitaries = circuit_unitaries(circuit);
    double unitarity = 0.0;
    for (const ComplexMatrix& u : unitaries) unitarity = std::max(unitarity, unitarity_residual(u));
    const OpenQuantumWalk walk = build_dqc_chain(std::span<const ComplexMatrix>(unitaries), ChainParams(omega));
    double normalization = 0.0;
    for (const auto& v : validate(walk, 0.0)) normalization = std::max(normalization, v.residual);
    const bool ok = unitarity <= kGate && normalization <= kGate;

    os << "circuit: " << circuit.name() << "\n"
       << "qubits: " << circuit.num_qubits() << "\n"
       << "slices: " << circuit.num_slices() << "\n"
       << "max_unitarity_residual: " << format_real(unitarity) << "\n"
       << "walk_nodes: " << walk.num_nodes() << "\n"
       << "omega: " << format_real(omega) << "\n"
       << "max_normalization_residual: " << format_real(normalization) << "\n"
       << "status: " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) err << "error: residuals exceed " << kGate << "\n";
    return ok ? kExitOk : kExitInputError;
  });
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& os) {
    const double omega = single_omega(config);
    const double tol = effective_tol(config);
    const Prepared p = prepare(config);
    const ConvergenceReport report = run_one(p, omega, tol, config.max_steps, true);

    os << "step,node,probability\n";
    for (std::size_t s = 0; s < report.history.size(); ++s) {
      for (std::size_t node = 0; node < report.history[s].size(); ++node) {
        os << s << ',' << node << ',' << format_real(report.history[s][node]) << '\n';
      }
    }
    os << "steps_to_converge,final_detection,final_fidelity,converged\n"
       << report.steps << ',' << format_real(report.final_detection) << ','
       << format_real(report.final_fidelity) << ',' << (report.converged ? "true" : "false") << '\n';
    if (!report.converged) {
      err << "warning: not converged after " << report.steps << " steps\n";
      return kExitNotConverged;
    }
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& os) {
    const std::vector<double> omegas = parse_omega_spec(config.omega);
    const double tol = effective_tol(config);
    const Prepared p = prepare(config);

    struct Cell {
      std::size_t steps = 0;
      double detection = 0.0;
      bool converged = false;
    };
    std::vector<Cell> cells(omegas.size());
    std::vector<std::exception_ptr> failures(omegas.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < omegas.size(); i = next.fetch_add(1)) {
        try {
          const ConvergenceReport r = run_one(p, omegas[i], tol, config.max_steps, false);
          cells[i] = {r.steps, r.final_detection, r.converged};
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      const std::size_t n = effective_threads(config, omegas.size());
      for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }

    bool all_converged = true;
    os << "omega,steps_to_converge,final_detection,converged\n";
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      os << format_real(omegas[i]) << ',' << cells[i].steps << ',' << format_real(cells[i].detection) << ','
         << (cells[i].converged ? "true" : "false") << '\n';
      all_converged = all_converged && cells[i].converged;
    }
    if (!all_converged) {
      err << "warning: some sweep cells did not converge\n";
      return kExitNotConverged;
    }
    return kExitOk;
  });
}

int cmd_lindblad(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&](std::ostream& os) {
    const Prepared p = prepare(config);
    const LindbladModel model = build_dqc_lindblad(p.circuit, config.reset);
    const std::size_t nodes = model.num_nodes();
    const ComplexMatrix rho0 = lift_to_register(ComplexMatrix::projector(p.psi0), nodes, 0);
    IntegrateOptions options;
    options.dt = config.dt;
    options.stop_tol = config.stop_tol;
    options.max_time = config.max_time;
    options.sample_interval = config.sample_interval;
    const IntegrationResult result = integrate(model, rho0, options);

    os << "time,node,probability\n";
    for (const MarginalSample& s : result.samples) {
      for (std::size_t node = 0; node < s.marginals.size(); ++node) {
        os << format_real(s.time) << ',' << node << ',' << format_real(s.marginals[node]) << '\n';
      }
    }
    const std::vector<double> final_marginals = node_marginals(model, result.rho);
    double deviation = 0.0;
    for (double v : final_marginals) deviation = std::max(deviation, std::abs(v - 1.0 / static_cast<double>(nodes)));
    os << "final_time,stationary,max_deviation_from_uniform\n"
       << format_real(result.time) << ',' << (result.stationary ? "true" : "false") << ','
       << format_real(deviation) << '\n';
    err << "max deviation from uniform 1/" << nodes << ": " << format_real(deviation) << "\n";
    if (!result.stationary) {
      err << "warning: not stationary by t = " << format_real(result.time) << "\n";
      return kExitNotConverged;
    }
    return kExitOk;
  });
}

}  // namespace oqw::cli
