// Independent reference computations used by the tests. None of these call
// into the library code they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;  // row-major

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

inline std::vector<double> mat_t_vec(const Matrix& a, const std::vector<double>& y) {
  std::vector<double> x(a.empty() ? 0 : a[0].size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += a[i][j] * y[i];
  return x;
}

/// ||A||_op by power iteration on A^T A.
inline double operator_norm(const Matrix& a, int iterations = 2000) {
  const std::size_t n = a[0].size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.1 * static_cast<double>(i % 7);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w = mat_t_vec(a, mat_vec(a, v));
    const double len = std::sqrt(dot(w, w));
    if (len == 0.0) return 0.0;
    for (double& e : w) e /= len;
    lambda = len;
    v = w;
  }
  return std::sqrt(lambda);
}

/// Solves the square system m z = rhs by Gaussian elimination with partial
/// pivoting. Returns false when the system is numerically singular.
inline bool solve(Matrix m, std::vector<double> rhs, std::vector<double>& z) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (std::abs(m[p][c]) < 1e-12) return false;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  z.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * z[k];
    z[i] = s / m[i][i];
  }
  return true;
}

/// Rank by Gaussian elimination with a relative pivot threshold.
inline std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    if (std::abs(m[p][c]) < 1e-10) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const double f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Minimum l1 norm of coefficients c with sum_j c_j atoms[j] = x, by
/// enumerating every basic solution (n-subsets of linearly independent atoms).
/// The LP optimum is attained at one of them. Atoms must span R^n.
inline double min_l1_by_enumeration(const std::vector<std::vector<double>>& atoms, const std::vector<double>& x) {
  const std::size_t n = x.size();
  const std::size_t count = atoms.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    Matrix m(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m[r][c] = atoms[pick[c]][r];
    std::vector<double> z;
    if (solve(m, x, z)) {
      double l1 = 0.0;
      for (double v : z) l1 += std::abs(v);
      best = std::min(best, l1);
    }
    // next n-combination in lexicographic order
    long i = static_cast<long>(n) - 1;
    while (i >= 0 && pick[i] == static_cast<std::size_t>(i) + count - n) --i;
    if (i < 0) return best;
    ++pick[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// argmin_t ||A (t d) - b||^2 = <A d, b> / ||A d||^2.
inline double quadratic_ray_minimizer(const Matrix& a, const std::vector<double>& b, const std::vector<double>& d) {
  const std::vector<double> ad = mat_vec(a, d);
  return dot(ad, b) / dot(ad, ad);
}

/// Largest admissible trajectory of a_{m+1} = a_m (1 - r_{m+1}/r a_m^ell)
/// started at a_1 = B. Returns a_1 .. a_m.
inline std::vector<double> simulate_recurrence(double b, double r, double ell, const std::vector<double>& r_seq,
                                               std::size_t m) {
  std::vector<double> a{b};
  for (std::size_t k = 1; k < m; ++k) {
    const double prev = a.back();
    a.push_back(prev * (1.0 - r_seq[k - 1] / r * std::pow(prev, ell)));
  }
  return a;
}

/// sup over s of |s+1|^p - |s|^p - p |s|^(p-1) sgn(s), by a dense grid.
inline double power_scalar_constant(double p) {
  double best = 0.0;
  const int steps = 400000;
  for (int i = 0; i <= steps; ++i) {
    const double s = -3.0 + 5.0 * static_cast<double>(i) / steps;
    const double sg = s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0);
    const double v = std::pow(std::abs(s + 1.0), p) - std::pow(std::abs(s), p) - p * std::pow(std::abs(s), p - 1) * sg;
    best = std::max(best, v);
  }
  return best;
}

}  // namespace oracle
