#include "qglue/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

namespace qglue {

std::vector<std::vector<int>> combinations(int n, int k) {
  if (k < 0 || k > n) throw argument_error("combinations: k out of range");
  if (k == 0) return {{}};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int analysis_thread_count() {
  if (const char* env = std::getenv("QGLUE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs fn(i) for i in [0, count) on up to max_threads workers, each owning a
// contiguous index range. Results must be written to preallocated per-index
// slots so the outcome does not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, int max_threads, const Fn& fn) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(max_threads, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = count * t / threads;
    const std::size_t hi = count * (t + 1) / threads;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

int resolve_threads(int max_threads) {
  return max_threads > 0 ? max_threads : analysis_thread_count();
}

void check_subset(const PureState& state, const std::vector<int>& subset, const char* op) {
  if (subset.empty()) throw argument_error(std::string(op) + ": empty subset");
  std::vector<bool> seen(state.num_parties(), false);
  for (int p : subset) {
    if (p < 0 || p >= state.num_parties())
      throw argument_error(std::string(op) + ": party out of range");
    if (seen[p]) throw argument_error(std::string(op) + ": repeated party");
    seen[p] = true;
  }
}

// Amplitude-index offsets spanned by the listed parties, big-endian in list
// order: offsets[v] with v running over the parties' joint digits.
std::vector<std::size_t> party_offsets(const PureState& state, const std::vector<int>& parties) {
  const std::size_t d = static_cast<std::size_t>(state.local_dim());
  std::vector<std::size_t> offsets{0};
  for (int p : parties) {
    const std::size_t stride = state.stride(p);
    std::vector<std::size_t> grown;
    grown.reserve(offsets.size() * d);
    for (std::size_t base : offsets)
      for (std::size_t v = 0; v < d; ++v) grown.push_back(base + v * stride);
    offsets = std::move(grown);
  }
  return offsets;
}

std::vector<int> complement_parties(int n, const std::vector<int>& subset) {
  std::vector<bool> in_subset(n, false);
  for (int p : subset) in_subset[p] = true;
  std::vector<int> rest;
  rest.reserve(n - subset.size());
  for (int p = 0; p < n; ++p)
    if (!in_subset[p]) rest.push_back(p);
  return rest;
}

// rho_subset as a flat dim_s x dim_s array, without DensityMatrix
// validation; the subset scans call this in a hot loop.
std::vector<cplx> traced_block(const PureState& state, const std::vector<int>& subset) {
  const std::vector<std::size_t> sub_offsets = party_offsets(state, subset);
  const std::vector<std::size_t> env_offsets =
      party_offsets(state, complement_parties(state.num_parties(), subset));
  const std::size_t dim_s = sub_offsets.size();
  std::vector<cplx> rho(dim_s * dim_s);
  std::vector<cplx> slice(dim_s);
  const std::vector<cplx>& amps = state.amplitudes();
  for (std::size_t e : env_offsets) {
    for (std::size_t r = 0; r < dim_s; ++r) slice[r] = amps[e + sub_offsets[r]];
    for (std::size_t r = 0; r < dim_s; ++r) {
      if (slice[r] == cplx{}) continue;
      const cplx sr = slice[r];
      for (std::size_t c = 0; c < dim_s; ++c) rho[r * dim_s + c] += sr * std::conj(slice[c]);
    }
  }
  return rho;
}

double subset_deviation(const PureState& state, const std::vector<int>& subset) {
  const std::vector<cplx> rho = traced_block(state, subset);
  const std::size_t dim_s =
      checked_pow(static_cast<std::size_t>(state.local_dim()), static_cast<int>(subset.size()));
  const double inv_dim = 1.0 / static_cast<double>(dim_s);
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_s; ++r)
    for (std::size_t c = 0; c < dim_s; ++c) {
      const cplx target = (r == c) ? cplx{inv_dim, 0.0} : cplx{0.0, 0.0};
      worst = std::max(worst, std::abs(rho[r * dim_s + c] - target));
    }
  return worst;
}

double subset_purity(const PureState& state, const std::vector<int>& subset) {
  const std::vector<cplx> rho = traced_block(state, subset);
  long double acc = 0.0L;
  for (const cplx& c : rho)
    acc += static_cast<long double>(c.real()) * c.real() +
           static_cast<long double>(c.imag()) * c.imag();
  return static_cast<double>(acc);
}

}  // namespace

DensityMatrix reduced_density(const PureState& state, const std::vector<int>& subset) {
  check_subset(state, subset, "reduced_density");
  std::vector<cplx> rho = traced_block(state, subset);
  const std::size_t dim_s =
      checked_pow(static_cast<std::size_t>(state.local_dim()), static_cast<int>(subset.size()));
  CMatrix m(dim_s, dim_s);
  m.data = std::move(rho);
  return DensityMatrix(state.local_dim(), static_cast<int>(subset.size()), std::move(m));
}

bool is_k_uniform(const PureState& state, int k, double tol, int max_threads) {
  const int n = state.num_parties();
  if (n < 2) throw argument_error("is_k_uniform: need at least two parties");
  if (k < 1 || k > n / 2)
    throw argument_error("is_k_uniform: k must lie in [1, floor(n/2)]");
  const std::vector<std::vector<int>> subsets = combinations(n, k);
  std::atomic<bool> uniform{true};
  parallel_for(subsets.size(), resolve_threads(max_threads), [&](std::size_t i) {
    if (!uniform.load(std::memory_order_relaxed)) return;
    if (subset_deviation(state, subsets[i]) >= tol)
      uniform.store(false, std::memory_order_relaxed);
  });
  return uniform.load();
}

std::vector<SubsetDeviation> uniformity_failures(const PureState& state, int k, double tol,
                                                 int max_threads) {
  const int n = state.num_parties();
  if (n < 2) throw argument_error("uniformity_failures: need at least two parties");
  if (k < 1 || k > n / 2)
    throw argument_error("uniformity_failures: k must lie in [1, floor(n/2)]");
  const std::vector<std::vector<int>> subsets = combinations(n, k);
  std::vector<double> deviations(subsets.size());
  parallel_for(subsets.size(), resolve_threads(max_threads),
               [&](std::size_t i) { deviations[i] = subset_deviation(state, subsets[i]); });
  std::vector<SubsetDeviation> failures;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (deviations[i] >= tol) failures.push_back({subsets[i], deviations[i]});
  return failures;
}

int max_uniformity(const PureState& state, double tol, int max_threads) {
  const int n = state.num_parties();
  if (n < 2) throw argument_error("max_uniformity: need at least two parties");
  int best = 0;
  for (int k = 1; k <= n / 2; ++k) {
    if (!is_k_uniform(state, k, tol, max_threads)) break;
    best = k;
  }
  return best;
}

double average_purity(const PureState& state, int max_threads) {
  const int n = state.num_parties();
  if (n < 2) throw argument_error("average_purity: need at least two parties");
  const std::vector<std::vector<int>> subsets = combinations(n, n / 2);
  std::vector<double> purities(subsets.size());
  parallel_for(subsets.size(), resolve_threads(max_threads),
               [&](std::size_t i) { purities[i] = subset_purity(state, subsets[i]); });
  return pairwise_sum(purities) / static_cast<double>(purities.size());
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  if (a.local_dim() != b.local_dim() || a.num_parties() != b.num_parties())
    throw dimension_error("equal_up_to_phase: operand shapes differ");
  return std::abs(inner_product(a, b)) > 1.0 - tol;
}

bool lu_correctable(const std::vector<GlueOutcome>& branches,
                    const std::vector<std::vector<CMatrix>>& corrections, double tol) {
  if (branches.empty()) throw argument_error("lu_correctable: no branches");
  if (corrections.size() != branches.size())
    throw argument_error("lu_correctable: need one correction list per branch");

  std::vector<PureState> corrected;
  corrected.reserve(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const PureState& s = branches[i].state;
    if (static_cast<int>(corrections[i].size()) != s.num_parties())
      throw argument_error("lu_correctable: need one gate per party");
    PureState cur = s;
    for (int p = 0; p < s.num_parties(); ++p)
      cur = apply_local(cur, corrections[i][p], {p});
    corrected.push_back(std::move(cur));
  }
  for (std::size_t i = 0; i + 1 < corrected.size(); ++i)
    for (std::size_t j = i + 1; j < corrected.size(); ++j)
      if (!equal_up_to_phase(corrected[i], corrected[j], tol)) return false;
  return true;
}

AnalysisReport analyze(const PureState& state, bool check_uniformity, bool check_purity,
                       double tol) {
  AnalysisReport report;
  if (check_uniformity) {
    const int k_max = max_uniformity(state, tol);
    report.k_max = k_max;
    if (k_max < state.num_parties() / 2)
      report.failures = uniformity_failures(state, k_max + 1, tol);
  }
  if (check_purity) report.pi_me = average_purity(state);
  return report;
}

}  // namespace qglue
