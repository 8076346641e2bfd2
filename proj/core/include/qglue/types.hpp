#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qglue {

using cplx = std::complex<double>;

/// Operand shapes or local dimensions do not match.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument value is out of range or malformed.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric input fails a validity check (non-unitary matrix,
/// non-orthonormal basis, malformed serialized data, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector that must be nonzero is numerically zero.
class degenerate_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A forced measurement outcome has numerically zero probability.
class zero_probability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^exp for sizes; throws argument_error on overflow.
std::size_t checked_pow(std::size_t base, int exp);

/// sum |v_i|^2, accumulated in extended precision.
double norm_squared(std::span<const cplx> v);

/// sum conj(a_i) b_i, accumulated in extended precision. Lengths must match.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);

/// Deterministic pairwise summation; the result does not depend on how the
/// values were produced (chunking, thread count).
double pairwise_sum(std::span<const double> v);

/// Dense row-major complex matrix. Used for gates and density operators;
/// sizes stay at desk scale, so no sparsity or blocking.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static CMatrix identity(std::size_t n);
};

/// Max entrywise |a - b|. Shapes must match.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// True when m is square and ||m m^dag - I||_max <= tol.
bool is_unitary(const CMatrix& m, double tol);

}  // namespace qglue
