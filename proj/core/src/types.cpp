#include "qglue/types.hpp"

#include <cmath>
#include <limits>

namespace qglue {

std::size_t checked_pow(std::size_t base, int exp) {
  if (exp < 0) throw argument_error("checked_pow: negative exponent");
  std::size_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base)
      throw argument_error("checked_pow: overflow");
    result *= base;
  }
  return result;
}

double norm_squared(std::span<const cplx> v) {
  long double acc = 0.0L;
  for (const cplx& c : v) {
    acc += static_cast<long double>(c.real()) * c.real();
    acc += static_cast<long double>(c.imag()) * c.imag();
  }
  return static_cast<double>(acc);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw dimension_error("inner: length mismatch");
  long double re = 0.0L;
  long double im = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const cplx p = std::conj(a[i]) * b[i];
    re += p.real();
    im += p.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

namespace {

double pairwise_sum_range(const double* v, std::size_t count) {
  if (count <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += v[i];
    return acc;
  }
  const std::size_t half = count / 2;
  return pairwise_sum_range(v, half) + pairwise_sum_range(v + half, count - half);
}

}  // namespace

double pairwise_sum(std::span<const double> v) {
  return pairwise_sum_range(v.data(), v.size());
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw dimension_error("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows != m.cols || m.rows == 0) return false;
  const std::size_t n = m.rows;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += m.at(r, k) * std::conj(m.at(c, k));
      const cplx expected = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(acc - expected) > tol) return false;
    }
  }
  return true;
}

}  // namespace qglue
