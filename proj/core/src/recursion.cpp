#include "qglue/recursion.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "qglue/builders.hpp"
#include "qglue/glue.hpp"

namespace qglue {

namespace {

// q with d^q == len, or -1 when len is not a power of d.
int log_base(std::size_t d, std::size_t len) {
  int q = 0;
  std::size_t v = 1;
  while (v < len) {
    v *= d;
    ++q;
  }
  return v == len ? q : -1;
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

void check_coeffs(const std::vector<std::vector<cplx>>& coeffs, int local_dim,
                  const char* op) {
  if (static_cast<int>(coeffs.size()) != local_dim)
    throw dimension_error(std::string(op) + ": expected d coefficient vectors");
  for (const auto& c : coeffs)
    if (c.size() != coeffs[0].size())
      throw dimension_error(std::string(op) + ": coefficient lengths differ");
  if (log_base(static_cast<std::size_t>(local_dim), coeffs[0].size()) < 0)
    throw dimension_error(std::string(op) + ": coefficient length is not a power of d");
}

}  // namespace

RecursionMatrix::RecursionMatrix(int local_dim, int block_parties,
                                 std::vector<std::vector<cplx>> entries)
    : local_dim_(local_dim), block_parties_(block_parties), entries_(std::move(entries)) {
  if (local_dim < 2) throw argument_error("RecursionMatrix: local_dim must be at least 2");
  if (block_parties < 1) throw argument_error("RecursionMatrix: block_parties must be at least 1");
  const auto d = static_cast<std::size_t>(local_dim);
  if (entries_.size() != d * d)
    throw dimension_error("RecursionMatrix: expected d^2 entries");
  const std::size_t len = checked_pow(d, block_parties);
  for (const auto& e : entries_)
    if (e.size() != len)
      throw dimension_error("RecursionMatrix: entry length does not match d^block_parties");
}

const std::vector<cplx>& RecursionMatrix::entry(int a, int b) const {
  if (a < 0 || a >= local_dim_ || b < 0 || b >= local_dim_)
    throw argument_error("RecursionMatrix::entry: index out of range");
  return entries_[static_cast<std::size_t>(a) * local_dim_ + b];
}

RecursionMatrix recursion_from_gate(const TwoQuditGate& gate, int outcome) {
  const int d = gate.local_dim();
  if (outcome < 0 || outcome >= d)
    throw argument_error("recursion_from_gate: outcome out of range");
  const auto dd = static_cast<std::size_t>(d);
  std::vector<std::vector<cplx>> entries(dd * dd);
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t b = 0; b < dd; ++b) {
      std::vector<cplx> vec(dd);
      for (std::size_t j = 0; j < dd; ++j)
        vec[j] = gate.matrix().at(static_cast<std::size_t>(outcome) * dd + j, a * dd + b);
      entries[a * dd + b] = std::move(vec);
    }
  return RecursionMatrix(d, 1, std::move(entries));
}

RecursionMatrix compose(const RecursionMatrix& g1, const RecursionMatrix& g2) {
  if (g1.local_dim() != g2.local_dim())
    throw dimension_error("compose: local dimensions differ");
  const int d = g1.local_dim();
  const auto dd = static_cast<std::size_t>(d);
  const std::size_t len =
      checked_pow(dd, g1.block_parties()) * checked_pow(dd, g2.block_parties());
  std::vector<std::vector<cplx>> entries(dd * dd);
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t c = 0; c < dd; ++c) {
      std::vector<cplx> acc(len);
      for (std::size_t b = 0; b < dd; ++b) {
        const std::vector<cplx> term =
            kron(g1.entry(static_cast<int>(a), static_cast<int>(b)),
                 g2.entry(static_cast<int>(b), static_cast<int>(c)));
        for (std::size_t i = 0; i < len; ++i) acc[i] += term[i];
      }
      entries[a * dd + c] = std::move(acc);
    }
  return RecursionMatrix(d, g1.block_parties() + g2.block_parties(), std::move(entries));
}

RecursionMatrix power(const RecursionMatrix& g, int n) {
  if (n < 1) throw argument_error("power: exponent must be at least 1");
  RecursionMatrix result = g;
  for (int i = 1; i < n; ++i) result = compose(result, g);
  return result;
}

std::vector<std::vector<cplx>> expand(const std::vector<std::vector<cplx>>& coeffs,
                                      const RecursionMatrix& g) {
  check_coeffs(coeffs, g.local_dim(), "expand");
  const auto d = static_cast<std::size_t>(g.local_dim());
  const std::size_t len = coeffs[0].size() * checked_pow(d, g.block_parties());
  std::vector<std::vector<cplx>> out(d);
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<cplx> acc(len);
    for (std::size_t a = 0; a < d; ++a) {
      const std::vector<cplx> term =
          kron(coeffs[a], g.entry(static_cast<int>(a), static_cast<int>(b)));
      for (std::size_t i = 0; i < len; ++i) acc[i] += term[i];
    }
    out[b] = std::move(acc);
  }
  return out;
}

PureState assemble(const std::vector<std::vector<cplx>>& coeffs) {
  if (coeffs.size() < 2) throw argument_error("assemble: need at least two coefficient vectors");
  const int d = static_cast<int>(coeffs.size());
  check_coeffs(coeffs, d, "assemble");
  const std::size_t len = coeffs[0].size();
  const int q = log_base(static_cast<std::size_t>(d), len);
  std::vector<cplx> amps(len * coeffs.size());
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t c = 0; c < coeffs.size(); ++c) amps[i * coeffs.size() + c] = coeffs[c][i];
  if (norm_squared(amps) < 1e-24)
    throw degenerate_input_error("assemble: zero state");
  return from_amplitudes(d, q + 1, std::move(amps));
}

ChainResult run_chain(const TwoQuditGate& gate, int steps, ChainOutcomePolicy policy,
                      std::uint64_t seed) {
  if (steps < 1) throw argument_error("run_chain: steps must be at least 1");
  const int d = gate.local_dim();
  std::mt19937_64 master(seed);
  PureState state = max_entangled_pair(d);
  double probability = 1.0;
  std::vector<int> outcomes;
  outcomes.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const std::uint64_t step_seed = master();
    std::optional<int> forced;
    if (policy == ChainOutcomePolicy::ForceZero) forced = 0;
    GlueOutcome out = glue_star(state, state.num_parties() - 1, max_entangled_pair(d), 0,
                                gate, forced, step_seed);
    probability *= out.probability;
    outcomes.push_back(out.measured[0].second);
    state = std::move(out.state);
  }
  return {std::move(state), probability, std::move(outcomes)};
}

}  // namespace qglue
