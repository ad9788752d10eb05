#pragma once

// Shared generators and oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "funceq/coefficients.hpp"
#include "funceq/piecewise_linear.hpp"

namespace funceq::testing {

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
  return out;
}

/// Strictly increasing shifts in (0.1, 3) with gaps of at least 0.02.
inline ShiftVector random_shifts(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> count(1, max_n);
  std::uniform_real_distribution<double> entry(0.1, 3.0);
  const int n = count(rng);
  for (;;) {
    std::vector<double> b(static_cast<std::size_t>(n));
    for (double& x : b) x = entry(rng);
    std::sort(b.begin(), b.end());
    bool ok = true;
    for (std::size_t k = 1; k < b.size(); ++k) ok = ok && b[k] - b[k - 1] >= 0.02;
    if (ok) return ShiftVector(std::move(b));
  }
}

/// Random piecewise-linear data on [0, b_N] with breakpoints at 0 and every
/// b_k, projected so that g(0) + Σ g(b_k) = 0 exactly up to rounding.
inline PiecewiseLinear random_admissible_boundary(std::mt19937_64& rng, const ShiftVector& b,
                                                  int interior = 6) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> where(0.0, b.largest());
  std::vector<double> xs{0.0};
  xs.insert(xs.end(), b.begin(), b.end());
  for (int i = 0; i < interior; ++i) {
    const double x = where(rng);
    const bool clear = std::all_of(xs.begin(), xs.end(), [&](double y) { return std::abs(x - y) > 1e-3; });
    if (clear) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> ys(xs.size());
  for (double& y : ys) y = value(rng);

  const auto is_node = [&](double x) {
    return x == 0.0 || std::find(b.begin(), b.end(), x) != b.end();
  };
  double r = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (is_node(xs[i])) r += ys[i];
  }
  const double correction = r / static_cast<double>(b.size() + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (is_node(xs[i])) ys[i] -= correction;
  }
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

/// Pointwise extension straight from the recursion, without any
/// piecewise-linear algebra. Exponential in the distance from [0, b_N].
inline double naive_extension(const std::function<double(double)>& boundary, const ShiftVector& b,
                              double w) {
  const double top = b.largest();
  if (w >= 0.0 && w <= top) return boundary(w);
  double s = 0.0;
  if (w > top) {
    s += naive_extension(boundary, b, w - top);
    for (std::size_t j = 0; j + 1 < b.size(); ++j) s += naive_extension(boundary, b, w - top + b[j]);
  } else {
    for (double bj : b) s += naive_extension(boundary, b, w + bj);
  }
  return -s;
}

/// Determinant by cofactor expansion along the first row.
inline double leibniz_determinant(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * leibniz_determinant(minor);
  }
  return det;
}

}  // namespace funceq::testing
