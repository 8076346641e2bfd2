#include "qglue/gates.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace qglue {

namespace {

// Every column, reshaped to d x d, must satisfy M M^dag = I/d: exactly the
// statement that the column is a maximally entangled two-party state.
bool columns_are_maximally_entangled(int d, const CMatrix& m, double tol) {
  const auto dd = static_cast<std::size_t>(d);
  for (std::size_t col = 0; col < m.cols; ++col) {
    for (std::size_t r = 0; r < dd; ++r)
      for (std::size_t c = 0; c < dd; ++c) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < dd; ++k)
          acc += m.at(r * dd + k, col) * std::conj(m.at(c * dd + k, col));
        const cplx expected = (r == c) ? cplx{1.0 / d, 0.0} : cplx{0.0, 0.0};
        if (std::abs(acc - expected) > tol) return false;
      }
  }
  return true;
}

}  // namespace

TwoQuditGate::TwoQuditGate(int local_dim, CMatrix matrix)
    : local_dim_(local_dim), matrix_(std::move(matrix)) {
  if (local_dim < 2) throw argument_error("TwoQuditGate: local_dim must be at least 2");
  const std::size_t dim = checked_pow(static_cast<std::size_t>(local_dim), 2);
  if (matrix_.rows != dim || matrix_.cols != dim)
    throw dimension_error("TwoQuditGate: matrix is not d^2 x d^2");
  if (!is_unitary(matrix_, 1e-10)) throw validation_error("TwoQuditGate: matrix is not unitary");
  entangling_basis_ = columns_are_maximally_entangled(local_dim, matrix_, 1e-10);
}

std::vector<PureState> generalized_bell_basis(int local_dim) {
  if (local_dim < 2) throw argument_error("generalized_bell_basis: local_dim must be at least 2");
  const auto d = static_cast<std::size_t>(local_dim);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<PureState> basis;
  basis.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<cplx> amps(d * d);
      for (std::size_t k = 0; k < d; ++k) {
        // w^(ik) with the exponent reduced mod d, so the phase angle stays
        // small and exact for the common cases.
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>((i * k) % d) / static_cast<double>(d);
        amps[k * d + (k + j) % d] = std::polar(inv_sqrt_d, angle);
      }
      basis.emplace_back(local_dim, 2, std::move(amps));
    }
  return basis;
}

TwoQuditGate gate_from_basis(const std::vector<PureState>& basis) {
  if (basis.empty()) throw argument_error("gate_from_basis: empty basis");
  const int d = basis[0].local_dim();
  const std::size_t dim = checked_pow(static_cast<std::size_t>(d), 2);
  if (basis.size() != dim)
    throw dimension_error("gate_from_basis: expected d^2 basis states");
  for (const PureState& s : basis)
    if (s.local_dim() != d || s.num_parties() != 2)
      throw dimension_error("gate_from_basis: basis states must be two-party with one local dim");
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) {
      const cplx g = inner_product(basis[a], basis[b]);
      const cplx expected = (a == b) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(g - expected) > 1e-10)
        throw validation_error("gate_from_basis: basis is not orthonormal");
    }
  CMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row) m.at(row, col) = basis[col].amplitudes()[row];
  return TwoQuditGate(d, std::move(m));
}

TwoQuditGate generalized_bell_gate(int local_dim) {
  return gate_from_basis(generalized_bell_basis(local_dim));
}

TwoQuditGate builtin_gate(BuiltinGate which) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix m(4, 4);
  switch (which) {
    case BuiltinGate::V1:
      m.data = {s, 0, 0, s,    //
                0, s, s, 0,    //
                0, s, -s, 0,   //
                s, 0, 0, -s};  // columns: phi+, psi+, psi-, phi-
      break;
    case BuiltinGate::V2:
      m.data = {s, 0, 0, s,    //
                0, s, -s, 0,   //
                0, s, s, 0,    //
                s, 0, 0, -s};  // columns: phi+, psi+, -psi-, phi-
      break;
    case BuiltinGate::V3:
      m.data = {1, 0, 0, 0,   //
                0, 0, 0, 1,   //
                0, 0, 1, 0,   //
                0, 1, 0, 0};  // fixes |00>, |10>; swaps |01>, |11>
      break;
    case BuiltinGate::V4:
      m.data = {s, 0, 0, s,   //
                0, 1, 0, 0,   //
                0, 0, 1, 0,   //
                s, 0, 0, -s};  // Hadamard on the |00>,|11> block
      break;
  }
  return TwoQuditGate(2, std::move(m));
}

TwoQuditGate builtin_gate(std::string_view name) {
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "V1") return builtin_gate(BuiltinGate::V1);
  if (upper == "V2") return builtin_gate(BuiltinGate::V2);
  if (upper == "V3") return builtin_gate(BuiltinGate::V3);
  if (upper == "V4") return builtin_gate(BuiltinGate::V4);
  throw argument_error("builtin_gate: unknown gate name: " + std::string(name));
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m.data = {0, 1, 1, 0};
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m.data = {1, 0, 0, -1};
  return m;
}

CMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix m(2, 2);
  m.data = {s, s, s, -s};
  return m;
}

CMatrix cz() {
  CMatrix m = CMatrix::identity(4);
  m.at(3, 3) = -1.0;
  return m;
}

}  // namespace qglue
