#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qglue/analysis.hpp"
#include "qglue/gates.hpp"
#include "qglue/glue.hpp"
#include "qglue/state.hpp"

namespace qglue {

// All writers format doubles with 17 significant digits, enough for a
// lossless double round trip. Readers accept anything a JSON parser takes
// and validate shape; malformed input throws validation_error, shape
// mismatches dimension_error.

/// {"d": 2, "n": 1, "amps": [[re, im], ...]} with d^n amplitude pairs in
/// index order.
std::string state_to_json(const PureState& state);
PureState state_from_json(std::string_view text);

/// {"d": 2, "matrix": [[[re, im], ...], ...]} row-major, d^2 x d^2.
std::string gate_to_json(const TwoQuditGate& gate);
TwoQuditGate gate_from_json(std::string_view text);

/// {"state": {...}, "measured": [["x", 0], ...], "prob": p}.
std::string outcome_to_json(const GlueOutcome& outcome);
GlueOutcome outcome_from_json(std::string_view text);

/// {"k_max": k, "pi_me": p, "failures": [{"subset": [...], "deviation": v}]}
/// with k_max/pi_me present only when the corresponding check ran.
std::string report_to_json(const AnalysisReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

PureState load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const PureState& state);

}  // namespace qglue
