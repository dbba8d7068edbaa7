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

#include <chrono>
#include <cmath>

#include "oqw/circuit.hpp"
#include "oqw/error.hpp"
#include "oqw/lindblad.hpp"
#include "oqw/matrix.hpp"
#include "test_util.hpp"

namespace oqw {
namespace {

Circuit single_gate(GateKind kind) { return Circuit("g", 1, {Slice{{Gate::single(kind, 1)}}}); }

Circuit bell_pair() {
  return Circuit("bell", 2, {Slice{{Gate::single(GateKind::kH, 1)}}, Slice{{Gate::cnot(1, 2)}}});
}

// Dense generator written directly from the master-equation definition.
ComplexMatrix rhs_oracle(const std::vector<ComplexMatrix>& jumps, const ComplexMatrix& rho) {
  using testing::naive_dagger;
  using testing::naive_matmul;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const ComplexMatrix& l : jumps) {
    const ComplexMatrix ld = naive_dagger(l);
    const ComplexMatrix ldl = naive_matmul(ld, l);
    out += naive_matmul(naive_matmul(l, rho), ld);
    out -= Complex(0.5) * (naive_matmul(ldl, rho) + naive_matmul(rho, ldl));
  }
  return out;
}

TEST(BuildDqcLindblad, SingleHadamardJump) {
  const LindbladModel m = build_dqc_lindblad(single_gate(GateKind::kH), false);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_EQ(m.num_nodes(), 2u);
  ASSERT_EQ(m.jumps().size(), 1u);
  // H (x) |1><0| + H^dagger (x) |0><1|, node index fastest.
  const ComplexMatrix h = gate_matrix(GateKind::kH);
  ComplexMatrix up(2, 2), down(2, 2);
  up(1, 0) = 1.0;
  down(0, 1) = 1.0;
  const ComplexMatrix oracle = kron(h, up) + kron(dagger(h), down);
  EXPECT_LT(frobenius_distance(m.jumps()[0], oracle), 1e-15);
}

TEST(BuildDqcLindblad, CountsAndHermiticity) {
  const LindbladModel plain = build_dqc_lindblad(toffoli13(), false);
  EXPECT_EQ(plain.jumps().size(), 13u);
  EXPECT_EQ(plain.dim(), 112u);
  for (const ComplexMatrix& l : plain.jumps()) EXPECT_LT(hermiticity_residual(l), 1e-12);
  const LindbladModel reset = build_dqc_lindblad(toffoli13(), true);
  EXPECT_EQ(reset.jumps().size(), 16u);
}

TEST(BuildDqcLindblad, CapacityAndEmpty) {
  EXPECT_THROW(build_dqc_lindblad(qft(4), false), CapacityError);
  EXPECT_NO_THROW(build_dqc_lindblad(qft(3), false));
  EXPECT_THROW(build_dqc_lindblad(Circuit("e", 1, {}), false), DomainError);
  EXPECT_THROW(build_dqc_lindblad(toffoli13(), false, 100), CapacityError);
}

TEST(LindbladModel, ShapeChecks) {
  EXPECT_THROW(LindbladModel(4, {ComplexMatrix::identity(2)}), ShapeError);
  EXPECT_THROW(LindbladModel(4, {}, 3), ShapeError);
}

TEST(LindbladRhs, AmplitudeDamping) {
  const LindbladModel m(2, {ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}});
  const ComplexMatrix out = lindblad_rhs(m, ComplexMatrix::diagonal({0.0, 1.0}));
  EXPECT_LT(frobenius_distance(out, ComplexMatrix::diagonal({1.0, -1.0})), 1e-15);
  EXPECT_THROW(lindblad_rhs(m, ComplexMatrix::identity(3)), ShapeError);
}

TEST(LindbladRhs, DarkStateIsStationary) {
  for (const Circuit& c : {single_gate(GateKind::kH), single_gate(GateKind::kS), bell_pair(), toffoli13()}) {
    const LindbladModel m = build_dqc_lindblad(c, false);
    const std::size_t n = c.num_slices() + 1;
    const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
    const ComplexMatrix rho = dqc_mixture(c, testing::random_product_state(c.num_qubits()), uniform);
    EXPECT_NEAR(trace(rho).real(), 1.0, 1e-14);
    EXPECT_LT(frobenius_norm(lindblad_rhs(m, rho)), 1e-10) << c.name();
  }
}

TEST(LindbladRhs, NonUniformMixtureIsNotStationary) {
  const Circuit c = single_gate(GateKind::kH);
  const ComplexMatrix rho = dqc_mixture(c, basis_state("0"), std::vector<double>{0.8, 0.2});
  EXPECT_GT(frobenius_norm(lindblad_rhs(build_dqc_lindblad(c, false), rho)), 0.1);
}

TEST(LindbladRhs, TracelessAndHermitianOnRandomStates) {
  const LindbladModel m = build_dqc_lindblad(bell_pair(), true);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = testing::random_density(m.dim());
    const ComplexMatrix out = lindblad_rhs(m, rho);
    EXPECT_LT(std::abs(trace(out)), 1e-10);
    EXPECT_LT(hermiticity_residual(out), 1e-10);
    EXPECT_LT(testing::max_abs_diff(out, rhs_oracle(m.jumps(), rho)), 1e-13);
  }
}

TEST(Liouvillian, MatchesDenseGenerator) {
  const LindbladModel m = build_dqc_lindblad(toffoli13(), true);
  const Liouvillian sup(m);
  const ComplexMatrix rho = testing::random_density(m.dim());
  ComplexMatrix out(m.dim(), m.dim());
  sup.apply(rho, out);
  EXPECT_LT(testing::max_abs_diff(out, lindblad_rhs(m, rho)), 1e-13);
}

TEST(Integrate, SingleGateReachesUniformMixture) {
  const Circuit c = single_gate(GateKind::kH);
  const LindbladModel m = build_dqc_lindblad(c, false);
  const auto psi = testing::random_product_state(1);
  const ComplexMatrix rho0 = dqc_mixture(c, psi, std::vector<double>{1.0, 0.0});
  const IntegrationResult r = integrate(m, rho0, {.dt = 0.01, .stop_tol = 1e-10, .max_time = 200.0});
  ASSERT_TRUE(r.stationary);
  const auto p = node_marginals(m, r.rho);
  EXPECT_NEAR(p[0], 0.5, 1e-6);
  EXPECT_NEAR(p[1], 0.5, 1e-6);
  const ComplexMatrix target = dqc_mixture(c, psi, std::vector<double>{0.5, 0.5});
  EXPECT_LT(0.5 * trace_norm(r.rho - target), 1e-6);
  EXPECT_FALSE(r.samples.empty());
}

TEST(Integrate, ZeroJumpModelLeavesStateUnchanged) {
  const LindbladModel m(3, {});
  const ComplexMatrix rho0 = testing::random_density(3);
  const IntegrationResult r = integrate(m, rho0);
  EXPECT_TRUE(r.stationary);
  EXPECT_LT(testing::max_abs_diff(r.rho, rho0), 1e-15);
}

TEST(Integrate, PreservesTraceAndHermiticityAlongTrajectory) {
  const LindbladModel m = build_dqc_lindblad(bell_pair(), false);
  ComplexMatrix rho = testing::random_density(m.dim());
  for (int chunk = 0; chunk < 5; ++chunk) {
    rho = integrate(m, rho, {.dt = 0.01, .stop_tol = 1e-300, .max_time = 0.5}).rho;
    EXPECT_NEAR(trace(rho).real(), 1.0, 1e-10);
    EXPECT_LT(hermiticity_residual(rho), 1e-12);
    EXPECT_TRUE(psd_check(rho, 1e-10));
  }
}

TEST(Integrate, RejectsBadInput) {
  const LindbladModel m = build_dqc_lindblad(single_gate(GateKind::kX), false);
  const ComplexMatrix rho0 = lift_to_register(ComplexMatrix::diagonal({1.0, 0.0}), 2, 0);
  EXPECT_THROW(integrate(m, rho0, {.dt = 0.0}), DomainError);
  EXPECT_THROW(integrate(m, Complex(2.0) * rho0), DomainError);
}

TEST(Integrate, ResetJumpsGiveSameStationaryStateFromDifferentStarts) {
  const Circuit c = bell_pair();
  const LindbladModel m = build_dqc_lindblad(c, true);
  const IntegrateOptions opts{.dt = 0.01, .stop_tol = 1e-9, .max_time = 2000.0, .sample_interval = 0.0};
  const IntegrationResult a = integrate(m, dqc_mixture(c, basis_state("00"), std::vector<double>{1.0, 0.0, 0.0}), opts);
  const IntegrationResult b = integrate(m, testing::random_density(m.dim()), opts);
  ASSERT_TRUE(a.stationary);
  ASSERT_TRUE(b.stationary);
  EXPECT_LT(0.5 * trace_norm(a.rho - b.rho), 1e-6);
  const ComplexMatrix dark = dqc_mixture(c, basis_state("00"), std::vector<double>(3, 1.0 / 3.0));
  EXPECT_LT(0.5 * trace_norm(a.rho - dark), 1e-6);
}

TEST(Integrate, ToffoliTerminalRegisterCarriesTheResult) {
  const Circuit c = toffoli13();
  const LindbladModel m = build_dqc_lindblad(c, false);
  const auto psi = testing::random_product_state(3);
  std::vector<double> start(14, 0.0);
  start[0] = 1.0;
  const auto t0 = std::chrono::steady_clock::now();
  const IntegrationResult r = integrate(m, dqc_mixture(c, psi, start));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_TRUE(r.stationary);
  EXPECT_LT(seconds, 60.0);
  for (double p : node_marginals(m, r.rho)) EXPECT_NEAR(p, 1.0 / 14.0, 1e-4);
  ComplexMatrix block = register_block(m, r.rho, 13);
  block *= 1.0 / trace(block).real();
  const auto expected = matvec(circuit_product(c), psi);
  EXPECT_GE(expectation(expected, block).real(), 1.0 - 1e-4);
}

TEST(Helpers, LiftAndExtractRoundTrip) {
  const ComplexMatrix internal = testing::random_density(2);
  const ComplexMatrix lifted = lift_to_register(internal, 3, 1);
  EXPECT_EQ(lifted.rows(), 6u);
  const LindbladModel m(6, {}, 3);
  EXPECT_LT(testing::max_abs_diff(register_block(m, lifted, 1), internal), 1e-16);
  EXPECT_EQ(node_marginals(m, lifted)[1], trace(internal).real());
}

}  // namespace
}  // namespace oqw
