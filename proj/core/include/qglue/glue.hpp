#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qglue/gates.hpp"
#include "qglue/state.hpp"

namespace qglue {

/// Result of a gluing variant that measures. `measured` lists the measured
/// parties as ("x", digit) / ("y", digit) in that order; `probability` is
/// the Born probability of this branch.
struct GlueOutcome {
  PureState state;
  std::vector<std::pair<std::string, int>> measured;
  double probability;
};

/// Applies the entangling gate across party x of phi and party y of psi
/// without measuring. The result has m+n parties in the layout
/// (x-bar in original order, x, y, y-bar in original order), where x-bar are
/// phi's other parties and y-bar are psi's. States and gate must share one
/// local dimension.
PureState glue(const PureState& phi, int x, const PureState& psi, int y,
               const TwoQuditGate& gate);

/// glue() followed by a computational measurement of x. The result has
/// m+n-1 parties, layout (x-bar, y, y-bar). A forced outcome below
/// probability 1e-12 throws zero_probability_error; without one the
/// outcome is Born-sampled from the given seed.
GlueOutcome glue_star(const PureState& phi, int x, const PureState& psi, int y,
                      const TwoQuditGate& gate,
                      std::optional<int> outcome = std::nullopt,
                      std::uint64_t seed = 0);

/// glue() followed by computational measurements of x and y. The result has
/// m+n-2 parties, layout (x-bar, y-bar); both states of one party each is
/// rejected since the result would have no parties left.
GlueOutcome glue_star_star(const PureState& phi, int x, const PureState& psi, int y,
                           const TwoQuditGate& gate,
                           std::optional<std::pair<int, int>> outcomes = std::nullopt,
                           std::uint64_t seed = 0);

}  // namespace qglue
