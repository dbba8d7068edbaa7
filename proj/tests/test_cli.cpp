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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oqw/chain.hpp"
#include "oqw/cli.hpp"
#include "oqw/error.hpp"

namespace oqw::cli {
namespace {

const std::string kData = OQW_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

template <typename Cmd>
Outcome invoke(Cmd cmd, const RunConfig& config) {
  std::ostringstream out, err;
  const int code = cmd(config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

// Exit status of the real executable.
int run_binary(const std::string& args) {
  const int status = std::system((std::string(OQW_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("oqw_cli_test_" + name);
}

TEST(Validate, Toffoli) {
  const Outcome r = invoke(cmd_validate, {.circuit = "toffoli"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("slices: 13"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status: ok"), std::string::npos);
  for (const std::string& row : lines(r.out)) {
    if (row.rfind("max_unitarity_residual: ", 0) == 0) EXPECT_LT(std::stod(row.substr(24)), 1e-12);
  }
}

TEST(Validate, Qft3HasNineSlices) {
  const Outcome r = invoke(cmd_validate, {.circuit = "qft3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("slices: 9"), std::string::npos);
}

TEST(Validate, CircuitFile) {
  const Outcome r = invoke(cmd_validate, {.circuit = kData + "/bell.circ"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("slices: 2"), std::string::npos);
}

TEST(Validate, MalformedFileReportsLine) {
  const Outcome r = invoke(cmd_validate, {.circuit = kData + "/malformed.circ"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Validate, MissingFile) {
  EXPECT_EQ(invoke(cmd_validate, {.circuit = kData + "/does_not_exist.circ"}).code, kExitInputError);
}

TEST(Run, ToffoliUniform) {
  const Outcome r = invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "step,node,probability");
  EXPECT_EQ(rows[rows.size() - 2], "steps_to_converge,final_detection,final_fidelity,converged");
  const auto summary = fields(rows.back());
  EXPECT_NEAR(std::stod(summary[1]), 1.0 / 14.0, 1e-6);
  EXPECT_EQ(summary[3], "true");
  // step 0 is the initial state; every step lists all 14 nodes
  const std::size_t steps = std::stoul(summary[0]);
  EXPECT_EQ(rows.size(), 1 + 14 * (steps + 1) + 2);
  EXPECT_EQ(rows[1], "0,0,1");
}

TEST(Run, ToffoliBiasedMatchesAnalytic) {
  const Outcome r = invoke(cmd_run, {.circuit = "toffoli", .omega = "0.9"});
  ASSERT_EQ(r.code, kExitOk);
  const double expected = analytic_chain_steady(ChainParams(0.9), 13)[13];
  EXPECT_NEAR(std::stod(fields(lines(r.out).back())[1]), expected, 1e-6);
}

TEST(Run, Qft3AbsorbingReachesTerminalAtStepNine) {
  const Outcome r = invoke(cmd_run, {.circuit = "qft3", .omega = "1.0"});
  ASSERT_EQ(r.code, kExitOk);
  double at8 = -1.0, at9 = -1.0;
  for (const std::string& row : lines(r.out)) {
    const auto f = fields(row);
    if (f.size() == 3 && f[1] == "9" && f[0] == "8") at8 = std::stod(f[2]);
    if (f.size() == 3 && f[1] == "9" && f[0] == "9") at9 = std::stod(f[2]);
  }
  EXPECT_EQ(at8, 0.0);
  EXPECT_NEAR(at9, 1.0, 1e-12);
}

TEST(Run, NonConvergenceExitsOne) {
  const Outcome r = invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5", .max_steps = 5});
  EXPECT_EQ(r.code, kExitNotConverged);
  EXPECT_EQ(fields(lines(r.out).back())[3], "false");
}

TEST(Run, InputErrors) {
  EXPECT_EQ(invoke(cmd_run, {.circuit = "toffoli", .omega = "1.5"}).code, kExitInputError);
  EXPECT_EQ(invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5:0.9:0.1"}).code, kExitInputError);
  EXPECT_EQ(invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5", .tol = -1.0}).code, kExitInputError);
  EXPECT_EQ(invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5", .input = "11"}).code, kExitInputError);
  EXPECT_EQ(invoke(cmd_run, {.circuit = "toffoli", .omega = "0.5", .input = "1x0"}).code, kExitInputError);
}

TEST(Run, ZeroLengthCircuitRejected) {
  const auto path = temp_file("empty.circ");
  std::ofstream(path) << "qubits 2\n";
  EXPECT_EQ(invoke(cmd_run, {.circuit = path.string(), .omega = "0.5"}).code, kExitInputError);
  EXPECT_EQ(invoke(cmd_lindblad, {.circuit = path.string()}).code, kExitInputError);
  std::filesystem::remove(path);
}

TEST(Run, OutputIsByteStable) {
  const RunConfig config{.circuit = "qft3", .omega = "0.7"};
  EXPECT_EQ(invoke(cmd_run, config).out, invoke(cmd_run, config).out);
}

TEST(Run, WritesToFile) {
  const auto path = temp_file("run.csv");
  const RunConfig config{.circuit = "qft3", .omega = "0.7", .out_path = path.string()};
  ASSERT_EQ(invoke(cmd_run, config).code, kExitOk);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, invoke(cmd_run, {.circuit = "qft3", .omega = "0.7"}).out);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Sweep, ToffoliDetectionIncreases) {
  const Outcome r = invoke(cmd_sweep, {.circuit = "toffoli", .omega = "0.5:0.9:0.1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "omega,steps_to_converge,final_detection,converged");
  ASSERT_EQ(rows.size(), 6u);
  double last_omega = 0.0, last_detection = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    EXPECT_GT(std::stod(f[0]), last_omega);
    EXPECT_GT(std::stod(f[2]), last_detection);
    last_omega = std::stod(f[0]);
    last_detection = std::stod(f[2]);
  }
}

TEST(Sweep, Qft4StepsNonIncreasing) {
  const Outcome r = invoke(cmd_sweep, {.circuit = "qft4", .omega = "0.5:0.9:0.1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  std::size_t last = SIZE_MAX;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t steps = std::stoul(fields(rows[i])[1]);
    EXPECT_LE(steps, last);
    last = steps;
  }
}

TEST(Sweep, SinglePointEqualsRunSummary) {
  const Outcome sweep = invoke(cmd_sweep, {.circuit = "qft3", .omega = "0.8"});
  const Outcome run = invoke(cmd_run, {.circuit = "qft3", .omega = "0.8"});
  const auto s = fields(lines(sweep.out).back());
  const auto r = fields(lines(run.out).back());
  EXPECT_EQ(s[0], "0.80000000000000004");
  EXPECT_EQ(s[1], r[0]);
  EXPECT_EQ(s[2], r[1]);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const Outcome one = invoke(cmd_sweep, {.circuit = "qft3", .omega = "0.5:0.95:0.05", .threads = 1});
  const Outcome four = invoke(cmd_sweep, {.circuit = "qft3", .omega = "0.5:0.95:0.05", .threads = 4});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(lines(one.out).size(), 11u);
}

TEST(Sweep, NonConvergentCellFlagged) {
  const Outcome r = invoke(cmd_sweep, {.circuit = "toffoli", .omega = "0.5:0.9:0.4", .max_steps = 60});
  EXPECT_EQ(r.code, kExitNotConverged);
  EXPECT_EQ(fields(lines(r.out)[1])[3], "false");
  EXPECT_EQ(fields(lines(r.out)[2])[3], "true");
}

TEST(Threads, EnvironmentBoundsWorkers) {
  ::setenv("OQW_THREADS", "3", 1);
  EXPECT_EQ(effective_threads({}, 10), 3u);
  EXPECT_EQ(effective_threads({}, 2), 2u);
  EXPECT_EQ(effective_threads({.threads = 5}, 10), 5u);
  ::unsetenv("OQW_THREADS");
  EXPECT_GE(effective_threads({}, 10), 1u);
}

TEST(OmegaSpec, GridsAndErrors) {
  EXPECT_EQ(parse_omega_spec("0.5:0.95:0.05").size(), 10u);
  EXPECT_EQ(parse_omega_spec("0.5:0.9:0.1").back(), 0.9);
  EXPECT_EQ(parse_omega_spec("1"), std::vector<double>{1.0});
  EXPECT_THROW(parse_omega_spec("0"), DomainError);
  EXPECT_THROW(parse_omega_spec("0.9:0.5:0.1"), DomainError);
  EXPECT_THROW(parse_omega_spec("0.5:0.9:0"), DomainError);
  EXPECT_THROW(parse_omega_spec("abc"), DomainError);
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Lindblad, SingleGateFileGivesHalfHalf) {
  const auto path = temp_file("h.circ");
  std::ofstream(path) << "qubits 1\nH 1\n";
  const Outcome r = invoke(cmd_lindblad, {.circuit = path.string(), .stop_tol = 1e-10});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "time,node,probability");
  EXPECT_EQ(rows[rows.size() - 2], "final_time,stationary,max_deviation_from_uniform");
  EXPECT_LT(std::stod(fields(rows.back())[2]), 1e-6);
}

TEST(Lindblad, CapacityErrorForQft4) { EXPECT_EQ(invoke(cmd_lindblad, {.circuit = "qft4"}).code, kExitInputError); }

TEST(Lindblad, NotStationaryExitsOne) {
  EXPECT_EQ(invoke(cmd_lindblad, {.circuit = "qft3", .max_time = 1.0}).code, kExitNotConverged);
}

TEST(Executable, ExitCodes) {
  EXPECT_EQ(run_binary("validate --circuit toffoli"), 0);
  EXPECT_EQ(run_binary("validate --circuit " + kData + "/malformed.circ"), 2);
  EXPECT_EQ(run_binary("run --circuit qft3 --omega 0.5 --max-steps 3"), 1);
  EXPECT_EQ(run_binary("run --circuit qft3 --bogus"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("run --circuit qft3 --omega 0.8 --kernels scalar"), 0);
}

TEST(Executable, KernelBackendsGiveIdenticalCsv) {
  const auto a = temp_file("scalar.csv"), b = temp_file("auto.csv");
  ASSERT_EQ(run_binary("sweep --circuit toffoli --omega 0.6:0.9:0.1 --kernels scalar --out " + a.string()), 0);
  ASSERT_EQ(run_binary("sweep --circuit toffoli --omega 0.6:0.9:0.1 --kernels auto --out " + b.string()), 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {}), tb((std::istreambuf_iterator<char>(fb)), {});
  const auto ra = lines(ta), rb = lines(tb);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 1; i < ra.size(); ++i) {
    const auto fa_ = fields(ra[i]), fb_ = fields(rb[i]);
    EXPECT_EQ(fa_[1], fb_[1]);
    EXPECT_NEAR(std::stod(fa_[2]), std::stod(fb_[2]), 1e-12);
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

}  // namespace
}  // namespace oqw::cli
