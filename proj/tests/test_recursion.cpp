#include <doctest.h>

#include <cmath>
#include <random>

#include "qglue/builders.hpp"
#include "qglue/glue.hpp"
#include "qglue/recursion.hpp"
#include "support.hpp"

using namespace qglue;
using test::fidelity;
using test::max_amp_diff;
using test::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

RecursionMatrix random_recursion(int d, int parties, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<cplx>> entries(static_cast<std::size_t>(d) * d);
  for (auto& e : entries) {
    e.resize(checked_pow(static_cast<std::size_t>(d), parties));
    for (cplx& c : e) c = {gauss(rng), gauss(rng)};
  }
  return RecursionMatrix(d, parties, std::move(entries));
}

}  // namespace

TEST_SUITE_BEGIN("recursion");

TEST_CASE("recursion matrices extracted from the builtin gates") {
  // Bell-measurement gate: (1/sqrt 2) [[|0>, |1>], [|1>, |0>]]
  const RecursionMatrix g1 = recursion_from_gate(builtin_gate(BuiltinGate::V1));
  CHECK(max_amp_diff(g1.entry(0, 0), {kInvSqrt2, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g1.entry(0, 1), {0.0, kInvSqrt2}) < 1e-15);
  CHECK(max_amp_diff(g1.entry(1, 0), {0.0, kInvSqrt2}) < 1e-15);
  CHECK(max_amp_diff(g1.entry(1, 1), {kInvSqrt2, 0.0}) < 1e-15);

  // second entangling gate: (1/sqrt 2) [[|0>, |1>], [-|1>, |0>]]
  const RecursionMatrix g2 = recursion_from_gate(builtin_gate(BuiltinGate::V2));
  CHECK(max_amp_diff(g2.entry(1, 0), {0.0, -kInvSqrt2}) < 1e-15);
  CHECK(max_amp_diff(g2.entry(1, 1), {kInvSqrt2, 0.0}) < 1e-15);

  // copy gate: diag(|0>, |1>)
  const RecursionMatrix g3 = recursion_from_gate(builtin_gate(BuiltinGate::V3));
  CHECK(max_amp_diff(g3.entry(0, 0), {1.0, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g3.entry(0, 1), {0.0, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g3.entry(1, 0), {0.0, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g3.entry(1, 1), {0.0, 1.0}) < 1e-15);

  // asymmetric gate: [[|0>/sqrt 2, |1>], [0, |0>/sqrt 2]]
  const RecursionMatrix g4 = recursion_from_gate(builtin_gate(BuiltinGate::V4));
  CHECK(max_amp_diff(g4.entry(0, 0), {kInvSqrt2, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g4.entry(0, 1), {0.0, 1.0}) < 1e-15);
  CHECK(max_amp_diff(g4.entry(1, 0), {0.0, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g4.entry(1, 1), {kInvSqrt2, 0.0}) < 1e-15);

  CHECK(g1.block_parties() == 1);
  CHECK_THROWS_AS(recursion_from_gate(builtin_gate(BuiltinGate::V1), 2), argument_error);
  CHECK_THROWS_AS(g1.entry(2, 0), argument_error);
}

TEST_CASE("nonzero outcomes read the gate rows with the measured digit fixed") {
  const RecursionMatrix g = recursion_from_gate(builtin_gate(BuiltinGate::V1), 1);
  CHECK(max_amp_diff(g.entry(0, 0), {0.0, kInvSqrt2}) < 1e-15);
  CHECK(max_amp_diff(g.entry(0, 1), {kInvSqrt2, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g.entry(1, 0), {-kInvSqrt2, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g.entry(1, 1), {0.0, -kInvSqrt2}) < 1e-15);
}

TEST_CASE("compose tensors entries pairwise and sums over the middle index") {
  const RecursionMatrix g1 = recursion_from_gate(builtin_gate(BuiltinGate::V1));
  const RecursionMatrix g1g1 = compose(g1, g1);
  CHECK(g1g1.block_parties() == 2);
  CHECK(max_amp_diff(g1g1.entry(0, 0), {0.5, 0.0, 0.0, 0.5}) < 1e-15);
  CHECK(max_amp_diff(g1g1.entry(0, 1), {0.0, 0.5, 0.5, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g1g1.entry(1, 0), {0.0, 0.5, 0.5, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g1g1.entry(1, 1), {0.5, 0.0, 0.0, 0.5}) < 1e-15);

  // composing the two entangling gates gives the Bell basis scaled by
  // 1/sqrt 2: entries phi+, psi+, psi-, phi-
  const RecursionMatrix g2 = recursion_from_gate(builtin_gate(BuiltinGate::V2));
  const RecursionMatrix g2g1 = compose(g2, g1);
  CHECK(max_amp_diff(g2g1.entry(0, 0), {0.5, 0.0, 0.0, 0.5}) < 1e-15);
  CHECK(max_amp_diff(g2g1.entry(0, 1), {0.0, 0.5, 0.5, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g2g1.entry(1, 0), {0.0, 0.5, -0.5, 0.0}) < 1e-15);
  CHECK(max_amp_diff(g2g1.entry(1, 1), {0.5, 0.0, 0.0, -0.5}) < 1e-15);
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(59);
  for (int d = 2; d <= 3; ++d) {
    const RecursionMatrix a = random_recursion(d, 1, rng);
    const RecursionMatrix b = random_recursion(d, 2, rng);
    const RecursionMatrix c = random_recursion(d, 1, rng);
    const RecursionMatrix left = compose(compose(a, b), c);
    const RecursionMatrix right = compose(a, compose(b, c));
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        CHECK(max_amp_diff(left.entry(r, s), right.entry(r, s)) < 1e-12);
  }
  CHECK_THROWS_AS(compose(random_recursion(2, 1, rng), random_recursion(3, 1, rng)),
                  dimension_error);
}

TEST_CASE("power of the Bell-gate recursion keeps the 1/sqrt 2 prefactor") {
  // The n-fold composition is (1/sqrt 2) [[e_n, o_n], [o_n, e_n]] with e_n,
  // o_n the normalized even/odd parity states: forced by the base case and
  // norm preservation of the chain, for every n.
  const RecursionMatrix g1 = recursion_from_gate(builtin_gate(BuiltinGate::V1));
  const RecursionMatrix cubed = power(g1, 3);
  CHECK(cubed.block_parties() == 3);
  const double v = kInvSqrt2 * 0.5;  // (1/sqrt 2) times the parity-state amplitude 1/2
  std::vector<cplx> e3(8), o3(8);
  for (int idx : {0, 3, 5, 6}) e3[idx] = v;
  for (int idx : {1, 2, 4, 7}) o3[idx] = v;
  CHECK(max_amp_diff(cubed.entry(0, 0), e3) < 1e-14);
  CHECK(max_amp_diff(cubed.entry(0, 1), o3) < 1e-14);
  CHECK(max_amp_diff(cubed.entry(1, 0), o3) < 1e-14);
  CHECK(max_amp_diff(cubed.entry(1, 1), e3) < 1e-14);

  CHECK_THROWS_AS(power(g1, 0), argument_error);
}

TEST_CASE("expand and assemble reproduce the GHZ recursion") {
  const RecursionMatrix g3 = recursion_from_gate(builtin_gate(BuiltinGate::V3));
  std::vector<std::vector<cplx>> coeffs{{kInvSqrt2}, {kInvSqrt2}};
  for (int step = 0; step < 3; ++step) coeffs = expand(coeffs, g3);
  const PureState state = assemble(coeffs);
  CHECK(fidelity(state, ghz(4)) > 1.0 - 1e-12);
}

TEST_CASE("expand and assemble reproduce the asymmetric W step") {
  const RecursionMatrix g4 = recursion_from_gate(builtin_gate(BuiltinGate::V4));
  const std::vector<std::vector<cplx>> coeffs =
      expand(coefficient_states(bell(BellState::PhiPlus), 1), g4);
  // out_0 = |00>/2, out_1 = |01>/sqrt 2 + |10>/2
  CHECK(max_amp_diff(coeffs[0], {0.5, 0.0, 0.0, 0.0}) < 1e-15);
  CHECK(max_amp_diff(coeffs[1], {0.0, kInvSqrt2, 0.5, 0.0}) < 1e-15);

  const PureState state = assemble(coeffs);
  std::vector<cplx> expected(8);
  expected[0] = 0.5;
  expected[3] = kInvSqrt2;
  expected[5] = 0.5;
  CHECK(max_amp_diff(state.amplitudes(), expected) < 1e-14);

  // flipping the last party gives the asymmetric W state
  const PureState flipped = apply_local(state, pauli_x(), {2});
  CHECK(max_amp_diff(flipped, asymmetric_w3()) < 1e-14);
}

TEST_CASE("assemble validates input") {
  CHECK_THROWS_AS(assemble({{1.0, 0.0}}), argument_error);
  CHECK_THROWS_AS(assemble({{1.0, 0.0}, {1.0}}), dimension_error);
  CHECK_THROWS_AS(assemble({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}), dimension_error);
  CHECK_THROWS_AS(assemble({{0.0, 0.0}, {0.0, 0.0}}), degenerate_input_error);
  CHECK_THROWS_AS(expand({{1.0}, {0.0}, {0.0}}, recursion_from_gate(builtin_gate(BuiltinGate::V1))),
                  dimension_error);
}

TEST_CASE("recursion route matches the physical chain for every builtin gate") {
  for (BuiltinGate which :
       {BuiltinGate::V1, BuiltinGate::V2, BuiltinGate::V3, BuiltinGate::V4}) {
    const TwoQuditGate gate = builtin_gate(which);
    const RecursionMatrix g = recursion_from_gate(gate);
    std::vector<std::vector<cplx>> coeffs =
        coefficient_states(bell(BellState::PhiPlus), 1);
    PureState direct = bell(BellState::PhiPlus);
    for (int step = 1; step <= 4; ++step) {
      coeffs = expand(coeffs, g);
      direct = glue_star(direct, direct.num_parties() - 1, bell(BellState::PhiPlus), 0,
                         gate, 0)
                   .state;
      CHECK(fidelity(assemble(coeffs), direct) > 1.0 - 1e-12);
    }
  }
}

TEST_CASE("recursion route matches the physical chain for nonzero outcomes") {
  const TwoQuditGate gate = builtin_gate(BuiltinGate::V4);
  const RecursionMatrix g = recursion_from_gate(gate, 1);
  const PureState direct =
      glue_star(bell(BellState::PhiPlus), 1, bell(BellState::PhiPlus), 0, gate, 1).state;
  const PureState routed = assemble(expand(coefficient_states(bell(BellState::PhiPlus), 1), g));
  CHECK(fidelity(routed, direct) > 1.0 - 1e-12);
}

TEST_CASE("recursion route matches the physical chain for qudits") {
  const TwoQuditGate gate = generalized_bell_gate(3);
  const RecursionMatrix g = recursion_from_gate(gate);
  std::mt19937_64 rng(61);
  const PureState start = random_state(3, 2, rng);
  const PureState direct = glue_star(start, 1, max_entangled_pair(3), 0, gate, 0).state;
  const PureState routed = assemble(expand(coefficient_states(start, 1), g));
  CHECK(fidelity(routed, direct) > 1.0 - 1e-12);
}

TEST_CASE("run_chain grows GHZ states with the copy gate") {
  const ChainResult chain = run_chain(builtin_gate(BuiltinGate::V3), 2);
  CHECK(chain.state.num_parties() == 4);
  CHECK(fidelity(chain.state, ghz(4)) > 1.0 - 1e-12);
  CHECK(chain.probability == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(chain.outcomes == std::vector<int>{0, 0});
  CHECK_THROWS_AS(run_chain(builtin_gate(BuiltinGate::V3), 0), argument_error);
}

TEST_CASE("run_chain sampling is seed-reproducible") {
  const ChainResult a = run_chain(builtin_gate(BuiltinGate::V1), 5, ChainOutcomePolicy::Sample, 7);
  const ChainResult b = run_chain(builtin_gate(BuiltinGate::V1), 5, ChainOutcomePolicy::Sample, 7);
  CHECK(a.outcomes == b.outcomes);
  CHECK(a.probability == b.probability);
  CHECK(max_amp_diff(a.state, b.state) == 0.0);
  CHECK(a.state.num_parties() == 7);
}

TEST_SUITE_END();
