#include "qglue/state.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "internal.hpp"

namespace qglue {

namespace {

void check_shape_args(int local_dim, int num_parties) {
  if (local_dim < 2) throw argument_error("local_dim must be at least 2");
  if (num_parties < 1) throw argument_error("num_parties must be at least 1");
}

void check_same_shape(const PureState& a, const PureState& b, const char* op) {
  if (a.local_dim() != b.local_dim() || a.num_parties() != b.num_parties())
    throw dimension_error(std::string(op) + ": operand shapes differ");
}

}  // namespace

PureState::PureState(int local_dim, int num_parties, std::vector<cplx> amplitudes)
    : local_dim_(local_dim), num_parties_(num_parties), amplitudes_(std::move(amplitudes)) {
  check_shape_args(local_dim, num_parties);
  const std::size_t expected = checked_pow(static_cast<std::size_t>(local_dim), num_parties);
  if (amplitudes_.size() != expected)
    throw dimension_error("PureState: amplitude count does not match d^n");
  const double n2 = norm_squared(amplitudes_);
  if (std::abs(n2 - 1.0) > 1e-8)
    throw validation_error("PureState: amplitudes are not normalized");
}

std::size_t PureState::stride(int party) const {
  if (party < 0 || party >= num_parties_) throw argument_error("stride: party out of range");
  return checked_pow(static_cast<std::size_t>(local_dim_), num_parties_ - 1 - party);
}

PureState from_amplitudes(int local_dim, int num_parties, std::vector<cplx> amplitudes) {
  check_shape_args(local_dim, num_parties);
  const std::size_t expected = checked_pow(static_cast<std::size_t>(local_dim), num_parties);
  if (amplitudes.size() != expected)
    throw dimension_error("from_amplitudes: amplitude count does not match d^n");
  const double n2 = norm_squared(amplitudes);
  if (n2 < 1e-24) throw degenerate_input_error("from_amplitudes: zero vector");
  // Already-normalized input is passed through bit-identically so that
  // serialization round trips exactly.
  if (std::abs(n2 - 1.0) > 1e-12) {
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& c : amplitudes) c *= inv;
  }
  return PureState(local_dim, num_parties, std::move(amplitudes));
}

cplx inner_product(const PureState& a, const PureState& b) {
  check_same_shape(a, b, "inner_product");
  return inner(a.amplitudes(), b.amplitudes());
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.local_dim() != b.local_dim())
    throw dimension_error("tensor: local dimensions differ");
  const std::size_t dim_b = b.dim();
  std::vector<cplx> out(checked_pow(static_cast<std::size_t>(a.local_dim()),
                                    a.num_parties() + b.num_parties()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const cplx ai = a.amplitudes()[i];
    if (ai == cplx{}) continue;
    for (std::size_t j = 0; j < dim_b; ++j) out[i * dim_b + j] = ai * b.amplitudes()[j];
  }
  return PureState(a.local_dim(), a.num_parties() + b.num_parties(), std::move(out));
}

PureState apply_local(const PureState& state, const CMatrix& gate,
                      const std::vector<int>& sites) {
  const int n = state.num_parties();
  const std::size_t d = static_cast<std::size_t>(state.local_dim());
  if (sites.empty()) throw argument_error("apply_local: no target sites");
  for (int s : sites)
    if (s < 0 || s >= n) throw argument_error("apply_local: site out of range");
  std::vector<int> sorted(sites);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw argument_error("apply_local: repeated site");

  const int k = static_cast<int>(sites.size());
  const std::size_t dim_k = checked_pow(d, k);
  if (gate.rows != dim_k || gate.cols != dim_k)
    throw dimension_error("apply_local: gate shape does not match site count");
  if (!is_unitary(gate, 1e-10)) throw validation_error("apply_local: gate is not unitary");

  // Offset of each gate basis index inside the full amplitude index, with
  // sites[0] as the most significant gate digit.
  std::vector<std::size_t> site_offsets(dim_k, 0);
  for (std::size_t j = 0; j < dim_k; ++j) {
    std::size_t rest = j;
    for (int t = k - 1; t >= 0; --t) {
      site_offsets[j] += (rest % d) * state.stride(sites[t]);
      rest /= d;
    }
  }

  // Base offsets spanning the non-target parties.
  std::vector<std::size_t> rest_offsets{0};
  rest_offsets.reserve(state.dim() / dim_k);
  for (int p = 0; p < n; ++p) {
    if (std::binary_search(sorted.begin(), sorted.end(), p)) continue;
    const std::size_t stride = state.stride(p);
    std::vector<std::size_t> grown;
    grown.reserve(rest_offsets.size() * d);
    for (std::size_t base : rest_offsets)
      for (std::size_t v = 0; v < d; ++v) grown.push_back(base + v * stride);
    rest_offsets = std::move(grown);
  }

  std::vector<cplx> out(state.amplitudes());
  std::vector<cplx> in_block(dim_k);
  for (std::size_t base : rest_offsets) {
    for (std::size_t j = 0; j < dim_k; ++j) in_block[j] = out[base + site_offsets[j]];
    for (std::size_t i = 0; i < dim_k; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < dim_k; ++j) acc += gate.at(i, j) * in_block[j];
      out[base + site_offsets[i]] = acc;
    }
  }
  return PureState(state.local_dim(), n, std::move(out));
}

MeasurementResult measure_computational(const PureState& state, int site,
                                        std::optional<int> outcome, std::uint64_t seed) {
  const int n = state.num_parties();
  const std::size_t d = static_cast<std::size_t>(state.local_dim());
  if (site < 0 || site >= n) throw argument_error("measure_computational: site out of range");
  if (n < 2)
    throw argument_error("measure_computational: cannot remove the last party");

  const std::size_t s = state.stride(site);
  const std::size_t block = s * d;
  const std::size_t outer = state.dim() / block;
  const std::vector<cplx>& amps = state.amplitudes();

  std::vector<long double> probs(d, 0.0L);
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t o = 0; o < d; ++o)
      for (std::size_t b = 0; b < s; ++b) {
        const cplx& c = amps[a * block + o * s + b];
        probs[o] += static_cast<long double>(c.real()) * c.real() +
                    static_cast<long double>(c.imag()) * c.imag();
      }

  int chosen;
  if (outcome) {
    chosen = *outcome;
    if (chosen < 0 || chosen >= static_cast<int>(d))
      throw argument_error("measure_computational: outcome out of range");
    if (probs[chosen] < 1e-12)
      throw zero_probability_error("measure_computational: forced outcome has zero probability");
  } else {
    std::mt19937_64 rng(seed);
    const double u = detail::canonical_unit(rng);
    long double cum = 0.0L;
    chosen = static_cast<int>(d) - 1;
    for (std::size_t o = 0; o < d; ++o) {
      cum += probs[o];
      if (u < static_cast<double>(cum)) {
        chosen = static_cast<int>(o);
        break;
      }
    }
  }

  const double p = static_cast<double>(probs[chosen]);
  const double inv = 1.0 / std::sqrt(p);
  std::vector<cplx> post(state.dim() / d);
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t b = 0; b < s; ++b)
      post[a * s + b] = amps[a * block + chosen * s + b] * inv;

  return {chosen, p, PureState(state.local_dim(), n - 1, std::move(post))};
}

PureState permute_parties(const PureState& state, const std::vector<int>& order) {
  const int n = state.num_parties();
  const std::size_t d = static_cast<std::size_t>(state.local_dim());
  if (static_cast<int>(order.size()) != n)
    throw argument_error("permute_parties: order length does not match party count");
  std::vector<bool> seen(n, false);
  for (int p : order) {
    if (p < 0 || p >= n || seen[p]) throw argument_error("permute_parties: not a permutation");
    seen[p] = true;
  }

  std::vector<std::size_t> old_strides(n);
  for (int p = 0; p < n; ++p) old_strides[p] = state.stride(p);

  std::vector<cplx> out(state.dim());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::size_t rest = idx;
    std::size_t old_idx = 0;
    for (int k = n - 1; k >= 0; --k) {
      old_idx += (rest % d) * old_strides[order[k]];
      rest /= d;
    }
    out[idx] = state.amplitudes()[old_idx];
  }
  return PureState(state.local_dim(), n, std::move(out));
}

std::vector<std::vector<cplx>> coefficient_states(const PureState& state, int site) {
  const int n = state.num_parties();
  const std::size_t d = static_cast<std::size_t>(state.local_dim());
  if (site < 0 || site >= n) throw argument_error("coefficient_states: site out of range");

  const std::size_t s = state.stride(site);
  const std::size_t block = s * d;
  const std::size_t outer = state.dim() / block;
  std::vector<std::vector<cplx>> coeffs(d, std::vector<cplx>(state.dim() / d));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t o = 0; o < d; ++o)
      for (std::size_t b = 0; b < s; ++b)
        coeffs[o][a * s + b] = state.amplitudes()[a * block + o * s + b];
  return coeffs;
}

DensityMatrix::DensityMatrix(int local_dim, int num_parties, CMatrix entries)
    : local_dim_(local_dim), num_parties_(num_parties), entries_(std::move(entries)) {
  check_shape_args(local_dim, num_parties);
  const std::size_t expected = checked_pow(static_cast<std::size_t>(local_dim), num_parties);
  if (entries_.rows != expected || entries_.cols != expected)
    throw dimension_error("DensityMatrix: entry shape does not match d^n");
  long double trace = 0.0L;
  for (std::size_t r = 0; r < entries_.rows; ++r) {
    trace += entries_.at(r, r).real();
    if (std::abs(entries_.at(r, r).imag()) > 1e-10)
      throw validation_error("DensityMatrix: diagonal is not real");
    for (std::size_t c = r + 1; c < entries_.cols; ++c)
      if (std::abs(entries_.at(r, c) - std::conj(entries_.at(c, r))) > 1e-10)
        throw validation_error("DensityMatrix: not Hermitian");
  }
  if (std::abs(static_cast<double>(trace) - 1.0) > 1e-10)
    throw validation_error("DensityMatrix: trace is not 1");
}

double DensityMatrix::purity() const {
  long double acc = 0.0L;
  for (const cplx& c : entries_.data)
    acc += static_cast<long double>(c.real()) * c.real() +
           static_cast<long double>(c.imag()) * c.imag();
  return static_cast<double>(acc);
}

double DensityMatrix::max_deviation_from_maximally_mixed() const {
  const double inv_dim = 1.0 / static_cast<double>(entries_.rows);
  double worst = 0.0;
  for (std::size_t r = 0; r < entries_.rows; ++r)
    for (std::size_t c = 0; c < entries_.cols; ++c) {
      const cplx target = (r == c) ? cplx{inv_dim, 0.0} : cplx{0.0, 0.0};
      worst = std::max(worst, std::abs(entries_.at(r, c) - target));
    }
  return worst;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  const auto n = static_cast<Eigen::Index>(entries_.rows);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = entries_.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw validation_error("DensityMatrix::eigenvalues: eigensolver failed");
  std::vector<double> out(entries_.rows);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

}  // namespace qglue
