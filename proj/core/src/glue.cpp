#include "qglue/glue.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "internal.hpp"

namespace qglue {

namespace {

void check_glue_args(const PureState& phi, int x, const PureState& psi, int y,
                     const TwoQuditGate& gate) {
  if (phi.local_dim() != psi.local_dim() || phi.local_dim() != gate.local_dim())
    throw dimension_error("glue: states and gate must share one local dimension");
  if (x < 0 || x >= phi.num_parties()) throw argument_error("glue: x out of range");
  if (y < 0 || y >= psi.num_parties()) throw argument_error("glue: y out of range");
}

std::vector<int> move_to_back(int n, int site) {
  std::vector<int> order;
  order.reserve(n);
  for (int p = 0; p < n; ++p)
    if (p != site) order.push_back(p);
  order.push_back(site);
  return order;
}

std::vector<int> move_to_front(int n, int site) {
  std::vector<int> order;
  order.reserve(n);
  order.push_back(site);
  for (int p = 0; p < n; ++p)
    if (p != site) order.push_back(p);
  return order;
}

}  // namespace

PureState glue(const PureState& phi, int x, const PureState& psi, int y,
               const TwoQuditGate& gate) {
  check_glue_args(phi, x, psi, y, gate);
  const int m = phi.num_parties();
  // Layout after the permutations: (x-bar..., x, y, y-bar...).
  const PureState left = permute_parties(phi, move_to_back(m, x));
  const PureState right = permute_parties(psi, move_to_front(psi.num_parties(), y));
  return apply_local(tensor(left, right), gate.matrix(), {m - 1, m});
}

GlueOutcome glue_star(const PureState& phi, int x, const PureState& psi, int y,
                      const TwoQuditGate& gate, std::optional<int> outcome,
                      std::uint64_t seed) {
  const PureState glued = glue(phi, x, psi, y, gate);
  const int m = phi.num_parties();
  const std::size_t d = static_cast<std::size_t>(glued.local_dim());
  const std::size_t s = glued.stride(m - 1);  // x sits at position m-1
  const std::size_t block = s * d;
  const std::size_t outer = glued.dim() / block;
  const std::vector<cplx>& amps = glued.amplitudes();

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
      throw argument_error("glue_star: outcome out of range");
    if (probs[chosen] < 1e-12)
      throw zero_probability_error("glue_star: forced outcome has zero probability");
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
  std::vector<cplx> post(glued.dim() / d);
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t b = 0; b < s; ++b)
      post[a * s + b] = amps[a * block + chosen * s + b] * inv;

  return {PureState(glued.local_dim(), glued.num_parties() - 1, std::move(post)),
          {{"x", chosen}},
          p};
}

GlueOutcome glue_star_star(const PureState& phi, int x, const PureState& psi, int y,
                           const TwoQuditGate& gate,
                           std::optional<std::pair<int, int>> outcomes,
                           std::uint64_t seed) {
  const int m = phi.num_parties();
  const int n = psi.num_parties();
  if (m + n - 2 < 1)
    throw argument_error("glue_star_star: result would have no parties left");

  const PureState glued = glue(phi, x, psi, y, gate);
  const std::size_t d = static_cast<std::size_t>(glued.local_dim());
  // x sits at position m-1 and y at position m of the glued layout.
  const std::size_t sy = glued.stride(m);
  const std::size_t sx = glued.stride(m - 1);  // = sy * d
  const std::size_t block = sx * d;
  const std::size_t outer = glued.dim() / block;
  const std::vector<cplx>& amps = glued.amplitudes();

  std::vector<long double> probs(d * d, 0.0L);
  for (std::size_t u = 0; u < outer; ++u)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t v = 0; v < sy; ++v) {
          const cplx& c = amps[u * block + a * sx + b * sy + v];
          probs[a * d + b] += static_cast<long double>(c.real()) * c.real() +
                              static_cast<long double>(c.imag()) * c.imag();
        }

  int ox, oy;
  if (outcomes) {
    ox = outcomes->first;
    oy = outcomes->second;
    if (ox < 0 || ox >= static_cast<int>(d) || oy < 0 || oy >= static_cast<int>(d))
      throw argument_error("glue_star_star: outcome out of range");
    if (probs[static_cast<std::size_t>(ox) * d + oy] < 1e-12)
      throw zero_probability_error("glue_star_star: forced outcome has zero probability");
  } else {
    std::mt19937_64 rng(seed);
    const double u = detail::canonical_unit(rng);
    long double cum = 0.0L;
    std::size_t flat = d * d - 1;
    for (std::size_t i = 0; i < d * d; ++i) {
      cum += probs[i];
      if (u < static_cast<double>(cum)) {
        flat = i;
        break;
      }
    }
    ox = static_cast<int>(flat / d);
    oy = static_cast<int>(flat % d);
  }

  const double p = static_cast<double>(probs[static_cast<std::size_t>(ox) * d + oy]);
  const double inv = 1.0 / std::sqrt(p);
  std::vector<cplx> post(glued.dim() / (d * d));
  for (std::size_t u = 0; u < outer; ++u)
    for (std::size_t v = 0; v < sy; ++v)
      post[u * sy + v] =
          amps[u * block + static_cast<std::size_t>(ox) * sx + static_cast<std::size_t>(oy) * sy + v] * inv;

  return {PureState(glued.local_dim(), glued.num_parties() - 2, std::move(post)),
          {{"x", ox}, {"y", oy}},
          p};
}

}  // namespace qglue
