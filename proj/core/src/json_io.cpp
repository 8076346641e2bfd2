#include "qglue/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace qglue {

namespace {

using nlohmann::json;

// All numeric output goes through one formatter: 17 significant digits,
// enough to reproduce any double exactly on read-back.
void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void append_pair(std::string& out, const cplx& c) {
  out += '[';
  append_double(out, c.real());
  out += ", ";
  append_double(out, c.imag());
  out += ']';
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed JSON: ") + e.what());
  }
}

int get_int_field(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field) || !j[field].is_number_integer())
    throw validation_error(std::string("JSON: missing integer field \"") + field + "\"");
  return j[field].get<int>();
}

cplx get_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw validation_error(std::string("JSON: ") + what + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

PureState state_from_parsed(const json& j) {
  const int d = get_int_field(j, "d");
  const int n = get_int_field(j, "n");
  if (d < 2) throw validation_error("JSON state: d must be at least 2");
  if (n < 1) throw validation_error("JSON state: n must be at least 1");
  if (!j.contains("amps") || !j["amps"].is_array())
    throw validation_error("JSON state: missing amplitude array \"amps\"");
  const json& amps_json = j["amps"];
  const std::size_t expected = checked_pow(static_cast<std::size_t>(d), n);
  if (amps_json.size() != expected)
    throw dimension_error("JSON state: amplitude count does not match d^n");
  std::vector<cplx> amps;
  amps.reserve(expected);
  for (const json& entry : amps_json) amps.push_back(get_pair(entry, "amplitude"));
  return from_amplitudes(d, n, std::move(amps));
}

}  // namespace

std::string state_to_json(const PureState& state) {
  std::string out;
  out.reserve(state.dim() * 48 + 64);
  out += "{\"d\": ";
  out += std::to_string(state.local_dim());
  out += ", \"n\": ";
  out += std::to_string(state.num_parties());
  out += ", \"amps\": [";
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (i != 0) out += ", ";
    append_pair(out, state.amplitudes()[i]);
  }
  out += "]}\n";
  return out;
}

PureState state_from_json(std::string_view text) {
  return state_from_parsed(parse_text(text));
}

std::string gate_to_json(const TwoQuditGate& gate) {
  const CMatrix& m = gate.matrix();
  std::string out;
  out.reserve(m.data.size() * 48 + 64);
  out += "{\"d\": ";
  out += std::to_string(gate.local_dim());
  out += ", \"matrix\": [";
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r != 0) out += ", ";
    out += '[';
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c != 0) out += ", ";
      append_pair(out, m.at(r, c));
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

TwoQuditGate gate_from_json(std::string_view text) {
  const json j = parse_text(text);
  const int d = get_int_field(j, "d");
  if (d < 2) throw validation_error("JSON gate: d must be at least 2");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw validation_error("JSON gate: missing row array \"matrix\"");
  const json& rows = j["matrix"];
  const std::size_t dim = checked_pow(static_cast<std::size_t>(d), 2);
  if (rows.size() != dim) throw dimension_error("JSON gate: expected d^2 rows");
  CMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      throw dimension_error("JSON gate: expected d^2 entries per row");
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = get_pair(rows[r][c], "matrix entry");
  }
  return TwoQuditGate(d, std::move(m));
}

std::string outcome_to_json(const GlueOutcome& outcome) {
  std::string out;
  out += "{\"state\": ";
  std::string state_text = state_to_json(outcome.state);
  state_text.pop_back();  // writers end with a newline; not wanted inline
  out += state_text;
  out += ", \"measured\": [";
  for (std::size_t i = 0; i < outcome.measured.size(); ++i) {
    if (i != 0) out += ", ";
    out += "[\"";
    out += outcome.measured[i].first;
    out += "\", ";
    out += std::to_string(outcome.measured[i].second);
    out += ']';
  }
  out += "], \"prob\": ";
  append_double(out, outcome.probability);
  out += "}\n";
  return out;
}

GlueOutcome outcome_from_json(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("state"))
    throw validation_error("JSON outcome: missing field \"state\"");
  PureState state = state_from_parsed(j["state"]);
  if (!j.contains("measured") || !j["measured"].is_array())
    throw validation_error("JSON outcome: missing array \"measured\"");
  std::vector<std::pair<std::string, int>> measured;
  for (const json& entry : j["measured"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number_integer())
      throw validation_error("JSON outcome: measured entries must be [label, digit]");
    measured.emplace_back(entry[0].get<std::string>(), entry[1].get<int>());
  }
  if (!j.contains("prob") || !j["prob"].is_number())
    throw validation_error("JSON outcome: missing number \"prob\"");
  return {std::move(state), std::move(measured), j["prob"].get<double>()};
}

std::string report_to_json(const AnalysisReport& report) {
  std::string out = "{";
  bool first = true;
  if (report.k_max) {
    out += "\"k_max\": ";
    out += std::to_string(*report.k_max);
    first = false;
  }
  if (report.pi_me) {
    if (!first) out += ", ";
    out += "\"pi_me\": ";
    append_double(out, *report.pi_me);
    first = false;
  }
  if (!first) out += ", ";
  out += "\"failures\": [";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    if (i != 0) out += ", ";
    out += "{\"subset\": [";
    for (std::size_t p = 0; p < report.failures[i].subset.size(); ++p) {
      if (p != 0) out += ", ";
      out += std::to_string(report.failures[i].subset[p]);
    }
    out += "], \"deviation\": ";
    append_double(out, report.failures[i].deviation);
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file for reading: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw validation_error("failed reading file: " + path.string());
  return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw validation_error("cannot open file for writing: " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw validation_error("failed writing file: " + path.string());
}

PureState load_state(const std::filesystem::path& path) {
  return state_from_json(read_text_file(path));
}

void save_state(const std::filesystem::path& path, const PureState& state) {
  write_text_file(path, state_to_json(state));
}

}  // namespace qglue
