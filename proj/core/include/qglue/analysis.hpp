#pragma once

#include <optional>
#include <vector>

#include "qglue/glue.hpp"
#include "qglue/state.hpp"
#include "qglue/types.hpp"

namespace qglue {

/// All k-subsets of {0..n-1} in lexicographic order. This order is part of
/// the reported output (failure lists), so it is fixed here.
std::vector<std::vector<int>> combinations(int n, int k);

/// Number of worker threads the subset scans use: QGLUE_THREADS when set to
/// a positive integer, hardware concurrency otherwise, at least 1.
int analysis_thread_count();

/// Partial trace of |state><state| onto the given parties (distinct,
/// nonempty; all n parties returns the full projector). Row/column indices
/// are big-endian over the subset in the order given.
DensityMatrix reduced_density(const PureState& state, const std::vector<int>& subset);

/// True when every k-party reduction is maximally mixed:
/// ||rho_S - I/d^k||_max < tol for all |S| = k. k must lie in
/// [1, floor(n/2)]. max_threads = 0 uses analysis_thread_count().
bool is_k_uniform(const PureState& state, int k, double tol = 1e-9,
                  int max_threads = 0);

/// Largest k with is_k_uniform (0 when not even 1-uniform). Scans k upward
/// and stops at the first failure, which is sound because k-uniformity
/// implies (k-1)-uniformity.
int max_uniformity(const PureState& state, double tol = 1e-9, int max_threads = 0);

/// Subsets of size k whose reduction deviates from maximally mixed by at
/// least tol, with their deviations, in lexicographic subset order.
struct SubsetDeviation {
  std::vector<int> subset;
  double deviation;
};
std::vector<SubsetDeviation> uniformity_failures(const PureState& state, int k,
                                                 double tol = 1e-9,
                                                 int max_threads = 0);

/// Mean purity over all floor(n/2)-party reductions; ranges over
/// [1/d^floor(n/2), 1] with the minimum reached exactly by absolutely
/// maximally entangled states. Summed pairwise, so the value is independent
/// of thread count. n >= 2.
double average_purity(const PureState& state, int max_threads = 0);

/// |<a|b>| > 1 - tol: equality as physical states, ignoring global phase.
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = 1e-9);

/// True when applying the per-party single-qudit gates corrections[i] to
/// branches[i].state makes all branches equal up to phase. corrections[i]
/// must hold one d x d unitary per party of branch i.
bool lu_correctable(const std::vector<GlueOutcome>& branches,
                    const std::vector<std::vector<CMatrix>>& corrections,
                    double tol = 1e-9);

/// Combined report consumed by the CLI. k_max / failures are present when
/// the uniformity check ran, pi_me when the purity check ran. failures
/// lists the (k_max+1)-subsets that broke uniformity (empty when k_max hit
/// floor(n/2)).
struct AnalysisReport {
  std::optional<int> k_max;
  std::optional<double> pi_me;
  std::vector<SubsetDeviation> failures;
};

AnalysisReport analyze(const PureState& state, bool check_uniformity = true,
                       bool check_purity = true, double tol = 1e-9);

}  // namespace qglue
