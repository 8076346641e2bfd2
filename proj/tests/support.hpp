#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qglue/state.hpp"
#include "qglue/types.hpp"

namespace qglue::test {

inline double max_amp_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_amp_diff(const PureState& a, const PureState& b) {
  return max_amp_diff(a.amplitudes(), b.amplitudes());
}

inline double fidelity(const PureState& a, const PureState& b) {
  return std::abs(inner_product(a, b));
}

inline PureState random_state(int d, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(checked_pow(static_cast<std::size_t>(d), n));
  for (cplx& c : amps) c = {gauss(rng), gauss(rng)};
  return from_amplitudes(d, n, std::move(amps));
}

inline CMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = cplx{gauss(rng), gauss(rng)};
  const Eigen::MatrixXcd q =
      Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
  CMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out.at(r, c) = q(r, c);
  return out;
}

// Partial-trace oracle, deliberately different from the library algorithm:
// compares environment digits pairwise instead of enumerating offsets.
inline CMatrix naive_reduced(const PureState& s, const std::vector<int>& subset) {
  const int n = s.num_parties();
  const std::size_t d = static_cast<std::size_t>(s.local_dim());
  std::vector<bool> in_subset(n, false);
  for (int p : subset) in_subset[p] = true;

  const auto digits_of = [&](std::size_t idx) {
    std::vector<int> digits(n);
    for (int p = n - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(idx % d);
      idx /= d;
    }
    return digits;
  };
  const auto sub_index = [&](const std::vector<int>& digits) {
    std::size_t v = 0;
    for (int p : subset) v = v * d + static_cast<std::size_t>(digits[p]);
    return v;
  };

  const std::size_t dim_s = checked_pow(d, static_cast<int>(subset.size()));
  CMatrix rho(dim_s, dim_s);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.amplitudes()[i] == cplx{}) continue;
    const std::vector<int> di = digits_of(i);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (s.amplitudes()[j] == cplx{}) continue;
      const std::vector<int> dj = digits_of(j);
      bool same_env = true;
      for (int p = 0; p < n; ++p)
        if (!in_subset[p] && di[p] != dj[p]) {
          same_env = false;
          break;
        }
      if (!same_env) continue;
      rho.at(sub_index(di), sub_index(dj)) += s.amplitudes()[i] * std::conj(s.amplitudes()[j]);
    }
  }
  return rho;
}

}  // namespace qglue::test
