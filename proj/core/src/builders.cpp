#include "qglue/builders.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "qglue/gates.hpp"

namespace qglue {

PureState bell(BellState which) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amps(4);
  switch (which) {
    case BellState::PhiPlus:
      amps[0] = s;
      amps[3] = s;
      break;
    case BellState::PhiMinus:
      amps[0] = s;
      amps[3] = -s;
      break;
    case BellState::PsiPlus:
      amps[1] = s;
      amps[2] = s;
      break;
    case BellState::PsiMinus:
      amps[1] = s;
      amps[2] = -s;
      break;
  }
  return PureState(2, 2, std::move(amps));
}

PureState max_entangled_pair(int local_dim) {
  if (local_dim < 2) throw argument_error("max_entangled_pair: local_dim must be at least 2");
  const auto d = static_cast<std::size_t>(local_dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<cplx> amps(d * d);
  for (std::size_t i = 0; i < d; ++i) amps[i * d + i] = s;
  return PureState(local_dim, 2, std::move(amps));
}

PureState ghz(int n) {
  if (n < 2) throw argument_error("ghz: need at least two parties");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amps(checked_pow(2, n));
  amps.front() = s;
  amps.back() = s;
  return PureState(2, n, std::move(amps));
}

PureState w_state(int n) {
  if (n < 2) throw argument_error("w_state: need at least two parties");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> amps(checked_pow(2, n));
  for (int p = 0; p < n; ++p) amps[std::size_t{1} << (n - 1 - p)] = s;
  return PureState(2, n, std::move(amps));
}

PureState asymmetric_w3() {
  std::vector<cplx> amps(8);
  amps[0b001] = 0.5;
  amps[0b010] = 1.0 / std::sqrt(2.0);
  amps[0b100] = 0.5;
  return PureState(2, 3, std::move(amps));
}

PureState parity_state(int n, Parity parity) {
  if (n < 1) throw argument_error("parity_state: need at least one party");
  const std::size_t dim = checked_pow(2, n);
  const int want = parity == Parity::Even ? 0 : 1;
  const double s = n == 1 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(dim / 2));
  std::vector<cplx> amps(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (std::popcount(i) % 2 == want) amps[i] = s;
  return PureState(2, n, std::move(amps));
}

PureState m4() {
  // (1/2)(|00> phi+ + |01> psi+ + |10> psi- + |11> phi-): 1-uniform but not
  // 2-uniform, with average half-body purity 1/3.
  std::vector<cplx> amps(16);
  const PureState pairs[] = {bell(BellState::PhiPlus), bell(BellState::PsiPlus),
                             bell(BellState::PsiMinus), bell(BellState::PhiMinus)};
  for (std::size_t block = 0; block < 4; ++block)
    for (std::size_t i = 0; i < 4; ++i)
      amps[block * 4 + i] = 0.5 * pairs[block].amplitudes()[i];
  return PureState(2, 4, std::move(amps));
}

PureState ring_graph_state(int n) {
  if (n < 3) throw argument_error("ring_graph_state: need at least three parties");
  const std::size_t dim = checked_pow(2, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<cplx> amps(dim, cplx{s, 0.0});
  PureState state(2, n, std::move(amps));
  const CMatrix cz_gate = cz();
  for (int p = 0; p < n; ++p) state = apply_local(state, cz_gate, {p, (p + 1) % n});
  return state;
}

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw argument_error(std::string("make_state: bad ") + what + ": " + std::string(text));
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

PureState make_state(std::string_view name) {
  const std::vector<std::string_view> parts = split(name, ':');
  const std::string_view head = parts[0];

  if (head == "bell") {
    if (parts.size() != 2) throw argument_error("make_state: bell needs a variant, e.g. bell:phi+");
    if (parts[1] == "phi+") return bell(BellState::PhiPlus);
    if (parts[1] == "phi-") return bell(BellState::PhiMinus);
    if (parts[1] == "psi+") return bell(BellState::PsiPlus);
    if (parts[1] == "psi-") return bell(BellState::PsiMinus);
    throw argument_error("make_state: unknown bell variant: " + std::string(parts[1]));
  }
  if (head == "mep") {
    if (parts.size() != 2) throw argument_error("make_state: mep needs a dimension, e.g. mep:3");
    return max_entangled_pair(parse_int(parts[1], "dimension"));
  }
  if (head == "ghz") {
    if (parts.size() != 2) throw argument_error("make_state: ghz needs a size, e.g. ghz:4");
    return ghz(parse_int(parts[1], "size"));
  }
  if (head == "w") {
    if (parts.size() != 2) throw argument_error("make_state: w needs a size, e.g. w:3");
    return w_state(parse_int(parts[1], "size"));
  }
  if (head == "aw3") {
    if (parts.size() != 1) throw argument_error("make_state: aw3 takes no parameters");
    return asymmetric_w3();
  }
  if (head == "parity") {
    if (parts.size() != 3)
      throw argument_error("make_state: parity needs size and parity, e.g. parity:4:even");
    const int n = parse_int(parts[1], "size");
    if (parts[2] == "even") return parity_state(n, Parity::Even);
    if (parts[2] == "odd") return parity_state(n, Parity::Odd);
    throw argument_error("make_state: parity must be even or odd");
  }
  if (head == "m4") {
    if (parts.size() != 1) throw argument_error("make_state: m4 takes no parameters");
    return m4();
  }
  if (head == "ring") {
    if (parts.size() != 2) throw argument_error("make_state: ring needs a size, e.g. ring:5");
    return ring_graph_state(parse_int(parts[1], "size"));
  }
  throw argument_error("make_state: unknown builder: " + std::string(name));
}

}  // namespace qglue
