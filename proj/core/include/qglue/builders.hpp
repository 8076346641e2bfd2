#pragma once

#include <string_view>

#include "qglue/state.hpp"

namespace qglue {

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
enum class Parity { Even, Odd };

/// The four qubit Bell states.
PureState bell(BellState which);

/// (1/sqrt d) sum_i |ii>.
PureState max_entangled_pair(int local_dim);

/// (1/sqrt 2)(|0...0> + |1...1>), n >= 2 qubits.
PureState ghz(int n);

/// Uniform superposition of the n single-excitation basis states, n >= 2.
PureState w_state(int n);

/// (1/2)|001> + (1/sqrt 2)|010> + (1/2)|100>: the W-class state produced by
/// one asymmetric-gate chain step.
PureState asymmetric_w3();

/// Uniform superposition of all n-bit strings of the given parity, n >= 1.
PureState parity_state(int n, Parity parity);

/// The 1-uniform four-qubit state (1/2)(|00> phi+ + |01> psi+ + |10> psi- +
/// |11> phi-) with average half-body purity 1/3.
PureState m4();

/// Cycle graph state on n >= 3 qubits: |+>^n with CZ on every ring edge.
PureState ring_graph_state(int n);

/// Parses builder names as used by the CLI: "bell:phi+", "bell:psi-",
/// "mep:3", "ghz:4", "w:3", "aw3", "parity:4:even", "m4", "ring:5".
/// Unknown names or out-of-range parameters throw argument_error.
PureState make_state(std::string_view name);

}  // namespace qglue
