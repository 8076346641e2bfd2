#pragma once

#include <string_view>
#include <vector>

#include "qglue/state.hpp"
#include "qglue/types.hpp"

namespace qglue {

/// Unitary on two qudits of equal dimension d, stored as a d^2 x d^2 matrix
/// over the computational basis |row1 row2> -> |col1 col2| with big-endian
/// pair indices (i,j) -> i*d + j. Unitarity is checked at construction
/// (within 1e-10).
class TwoQuditGate {
 public:
  TwoQuditGate(int local_dim, CMatrix matrix);

  int local_dim() const { return local_dim_; }
  const CMatrix& matrix() const { return matrix_; }

  /// True when every column, reshaped to a d x d matrix M, satisfies
  /// M M^dag = I/d within 1e-10, i.e. the gate maps the computational basis
  /// to a maximally entangled basis.
  bool entangling_basis() const { return entangling_basis_; }

 private:
  int local_dim_;
  CMatrix matrix_;
  bool entangling_basis_;
};

/// The d^2 states chi_ij = (1/sqrt d) sum_k w^(ik) |k, (k+j) mod d> with
/// w = exp(2 pi i / d), listed in row-major (i,j) order. For d = 2 these are
/// phi+, psi+, phi-, psi- in that order.
std::vector<PureState> generalized_bell_basis(int local_dim);

/// Gate whose column (i,j) is basis[i*d+j]. The basis must hold d^2
/// two-party states of equal local dimension and be orthonormal within
/// 1e-10.
TwoQuditGate gate_from_basis(const std::vector<PureState>& basis);

/// gate_from_basis(generalized_bell_basis(d)).
TwoQuditGate generalized_bell_gate(int local_dim);

/// Built-in qubit gates used throughout the examples. V1 maps the
/// computational basis to the Bell basis (columns phi+, psi+, psi-, phi-)
/// and is its own inverse; V2 is a second entangling-basis gate; V3 is the
/// permutation fixing |00>, |10> and swapping |01>, |11>; V4 mixes only the
/// |00>, |11> block.
enum class BuiltinGate { V1, V2, V3, V4 };

TwoQuditGate builtin_gate(BuiltinGate which);

/// Accepts "V1".."V4" (case-insensitive); throws argument_error otherwise.
TwoQuditGate builtin_gate(std::string_view name);

// Small fixed matrices used for local corrections.
CMatrix pauli_x();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix cz();

}  // namespace qglue
