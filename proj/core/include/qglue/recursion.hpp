#pragma once

#include <cstdint>
#include <vector>

#include "qglue/gates.hpp"
#include "qglue/state.hpp"

namespace qglue {

/// d x d matrix whose entries are (generally unnormalized) coefficient
/// vectors over block_parties() qudits. Composing recursion matrices tracks
/// a chain of gluings symbolically: entries stay unnormalized so that
/// composition remains associative; normalization happens once, at
/// assemble().
class RecursionMatrix {
 public:
  /// entries in row-major (a,b) order, each of length d^block_parties.
  RecursionMatrix(int local_dim, int block_parties,
                  std::vector<std::vector<cplx>> entries);

  int local_dim() const { return local_dim_; }
  int block_parties() const { return block_parties_; }

  const std::vector<cplx>& entry(int a, int b) const;

 private:
  int local_dim_;
  int block_parties_;
  std::vector<std::vector<cplx>> entries_;  // d*d, row-major
};

/// Recursion matrix of one glue_star step with the given gate and measured
/// outcome o: entry (a,b) is the single-party vector sum_j V_(o j),(a b) |j>.
RecursionMatrix recursion_from_gate(const TwoQuditGate& gate, int outcome = 0);

/// (g1 g2)_(a,c) = sum_b g1_(a,b) (x) g2_(b,c); g1's parties come first.
RecursionMatrix compose(const RecursionMatrix& g1, const RecursionMatrix& g2);

/// n-fold composition of g with itself; n >= 1.
RecursionMatrix power(const RecursionMatrix& g, int n);

/// One chain step on coefficient vectors: out_b = sum_a coeffs[a] (x)
/// g_(a,b). coeffs must have d entries of one common length d^q.
std::vector<std::vector<cplx>> expand(const std::vector<std::vector<cplx>>& coeffs,
                                      const RecursionMatrix& g);

/// Reattaches the chain digit as the last party and normalizes:
/// state = N sum_i coeffs[i] (x) |i>. coeffs must have d >= 2 entries of one
/// common length d^q and a nonzero total norm.
PureState assemble(const std::vector<std::vector<cplx>>& coeffs);

/// Chain branch probability bookkeeping for run_chain.
enum class ChainOutcomePolicy {
  ForceZero,  // project every step on outcome 0
  Sample,     // Born-sample each step
};

struct ChainResult {
  PureState state;
  double probability;         // product of the per-step branch probabilities
  std::vector<int> outcomes;  // one per step
};

/// Starts from the maximally entangled pair of dimension d and performs
/// `steps` glue_star operations, each gluing a fresh maximally entangled
/// pair onto the last party with the given gate. steps >= 1.
ChainResult run_chain(const TwoQuditGate& gate, int steps,
                      ChainOutcomePolicy policy = ChainOutcomePolicy::ForceZero,
                      std::uint64_t seed = 0);

}  // namespace qglue
