#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qglue/types.hpp"

namespace qglue {

/// Immutable dense pure state of num_parties() qudits, each of dimension
/// local_dim(). Amplitude indices are big-endian: party 0 is the most
/// significant base-d digit, so party p has stride d^(n-1-p).
class PureState {
 public:
  /// Takes amplitudes that are already normalized (within 1e-8); use
  /// from_amplitudes() to normalize arbitrary input.
  PureState(int local_dim, int num_parties, std::vector<cplx> amplitudes);

  int local_dim() const { return local_dim_; }
  int num_parties() const { return num_parties_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }

  /// Stride of party p in the amplitude index: d^(n-1-p).
  std::size_t stride(int party) const;

 private:
  int local_dim_;
  int num_parties_;
  std::vector<cplx> amplitudes_;
};

/// Density operator on a subset of parties: Hermitian within 1e-10 and unit
/// trace within 1e-10, both checked at construction. Positivity is not
/// checked here (it needs an eigensolve); eigenvalues() exposes the spectrum
/// for callers that want it.
class DensityMatrix {
 public:
  DensityMatrix(int local_dim, int num_parties, CMatrix entries);

  int local_dim() const { return local_dim_; }
  int num_parties() const { return num_parties_; }
  std::size_t dim() const { return entries_.rows; }
  const CMatrix& entries() const { return entries_; }

  /// Tr rho^2. Equals sum |rho_rc|^2 for Hermitian rho.
  double purity() const;

  /// ||rho - I/D||_max where D = dim().
  double max_deviation_from_maximally_mixed() const;

  /// Real spectrum in ascending order.
  std::vector<double> eigenvalues() const;

 private:
  int local_dim_;
  int num_parties_;
  CMatrix entries_;
};

/// Normalizes and wraps raw amplitudes. The vector length must equal
/// local_dim^num_parties; a numerically zero vector is rejected.
PureState from_amplitudes(int local_dim, int num_parties, std::vector<cplx> amplitudes);

/// <a|b>. Both states must share local_dim and num_parties.
cplx inner_product(const PureState& a, const PureState& b);

/// Kronecker product; parties of a come first. Local dims must match.
PureState tensor(const PureState& a, const PureState& b);

/// Applies a unitary acting on the listed parties (distinct, in order
/// matching the gate's index grouping: sites[0] is the most significant
/// digit of the gate row index). The gate must be d^k x d^k and unitary
/// within 1e-10.
PureState apply_local(const PureState& state, const CMatrix& gate,
                      const std::vector<int>& sites);

struct MeasurementResult {
  int outcome;
  double probability;
  PureState post_state;  // measured party removed
};

/// Computational-basis measurement of one party. With a forced outcome the
/// branch is projected directly (zero_probability_error below 1e-12);
/// otherwise the outcome is Born-sampled from mt19937_64 seeded with seed,
/// reproducibly across platforms. The state must have at least two parties,
/// since the measured party is removed.
MeasurementResult measure_computational(const PureState& state, int site,
                                        std::optional<int> outcome = std::nullopt,
                                        std::uint64_t seed = 0);

/// Reorders parties: new party k is old party order[k]. order must be a
/// permutation of 0..n-1.
PureState permute_parties(const PureState& state, const std::vector<int>& order);

/// Unnormalized coefficient vectors c_i with
/// state = sum_i c_i (x) |i>_site, the site's digit factored out. Entry i
/// has the remaining parties in their original order.
std::vector<std::vector<cplx>> coefficient_states(const PureState& state, int site);

}  // namespace qglue
