#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

// Small dense helpers over contiguous doubles. Dimensions here are tiny
// (ambient R^{n+1} with n in the single digits), so plain loops suffice.
namespace eqtc::linalg {

using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// |a + b| without forming the sum.
inline double sum_norm(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] + b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vec negated(std::span<const double> a) {
  Vec out(a.begin(), a.end());
  for (double& v : out) v = -v;
  return out;
}

// Row-major square matrix helpers used by the commutation checks.
inline Vec matmul(std::span<const double> a, std::span<const double> b, std::size_t dim) {
  Vec out(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const double aik = a[i * dim + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] += aik * b[k * dim + j];
    }
  return out;
}

inline Vec identity(std::size_t dim) {
  Vec out(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) out[i * dim + i] = 1.0;
  return out;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace eqtc::linalg
