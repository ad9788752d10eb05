#pragma once

// Unique continuous extension of boundary data for the additive equation
//
//   g(w) + g(w + b_1) + ... + g(w + b_N) = 0      (w ∈ ℝ).
//
// Boundary data on [0, b_N] extends iff g(0) + g(b_1) + ... + g(b_N) = 0.
// To the right, strips of width b_N - b_{N-1} are filled from
//
//   g(y) = -[g(y - b_N) + g(y - (b_N - b_1)) + ... + g(y - (b_N - b_{N-1}))],
//
// and to the left, strips of width b_1 from
//
//   g(x) = -[g(x + b_1) + ... + g(x + b_N)].
//
// Every argument on the right-hand side lies in already covered territory,
// possibly several strips back, so each strip is computed against the whole
// accumulated function rather than only the previous strip. Shifted sums of
// piecewise-linear functions are piecewise linear, so the construction is
// exact up to rounding.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "funceq/coefficients.hpp"
#include "funceq/error.hpp"
#include "funceq/piecewise_linear.hpp"

namespace funceq {

template <typename F>
concept RealFunction = std::invocable<const F&, double> &&
                       std::convertible_to<std::invoke_result_t<const F&, double>, double>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(const Interval& other) const noexcept { return lo <= other.lo && other.hi <= hi; }
};

inline constexpr double default_interpolation_tol = 1e-9;

/// g(0) + g(b_1) + ... + g(b_N) for boundary data on [0, b_N].
inline double check_interpolation(const PiecewiseLinear& g, const ShiftVector& b) {
  const double top = b.largest();
  if (std::abs(g.lo()) > detail::coincidence_gap(0.0) ||
      std::abs(g.hi() - top) > detail::coincidence_gap(top)) {
    throw error(errc::domain_mismatch, "boundary data must live on [0, b_N] = [0, " +
                                           std::to_string(top) + "]");
  }
  double r = g(0.0);
  for (double bk : b) r += g(bk);
  return r;
}

/// Non-differentiable admissible boundary data: 1 on [0, b_{N-1}], then the
/// line down to -N at b_N. For N = 1 the plateau collapses to the point 0.
inline PiecewiseLinear tent_boundary(const ShiftVector& b) {
  const double n = static_cast<double>(b.size());
  if (b.size() == 1) return PiecewiseLinear({0.0, b[0]}, {1.0, -1.0});
  return PiecewiseLinear({0.0, b[b.size() - 2], b.largest()}, {1.0, 1.0, -n});
}

/// One period of the (N+1)-periodic solution generated by the tent data
/// when b = (1, 2, ..., N).
inline PiecewiseLinear periodic_reference(int n) {
  if (n < 2) throw error(errc::invalid_argument, "periodic_reference needs N >= 2");
  const double N = n;
  return PiecewiseLinear({0.0, N - 1.0, N, N + 1.0}, {1.0, 1.0, -N, 1.0});
}

/// Global solution assembled strip by strip from boundary data on [0, b_N].
///
/// `cover` grows the covered interval and needs exclusive access; once
/// coverage is final, evaluation is read-only and may run concurrently.
class ExtendedSolution {
 public:
  static constexpr std::size_t breakpoint_budget = 1'000'000;

  ExtendedSolution(PiecewiseLinear boundary, ShiftVector shifts,
                   double interpolation_tol = default_interpolation_tol)
      : shifts_(std::move(shifts)), boundary_(std::move(boundary)), pieces_(boundary_) {
    if (!(interpolation_tol > 0.0)) throw error(errc::invalid_argument, "tolerance must be positive");
    const double r = check_interpolation(boundary_, shifts_);
    if (!(std::abs(r) <= interpolation_tol)) {
      throw error(errc::interpolation_violated,
                  "g(0) + sum g(b_k) = " + std::to_string(r) + " exceeds tolerance");
    }
    if (!(shifts_.last_gap() > 0.0) || !(shifts_.smallest() > 0.0)) {
      throw error(errc::degenerate_step, "zero strip width");
    }
    interpolation_residual_ = r;
    for (double v : boundary_.values()) boundary_scale_ = std::max(boundary_scale_, std::abs(v));
    value_scale_ = boundary_scale_;
  }

  const ShiftVector& shifts() const noexcept { return shifts_; }
  const PiecewiseLinear& boundary() const noexcept { return boundary_; }
  const PiecewiseLinear& pieces() const noexcept { return pieces_; }
  Interval covered() const noexcept { return {pieces_.lo(), pieces_.hi()}; }
  double interpolation_residual() const noexcept { return interpolation_residual_; }

  /// Extends coverage until it contains `target`. Strips have full width,
  /// so the result may overshoot.
  void cover(Interval target) {
    if (!std::isfinite(target.lo) || !std::isfinite(target.hi) || !(target.hi >= target.lo)) {
      throw error(errc::invalid_range, "target interval must be finite and ordered");
    }
    while (pieces_.hi() < target.hi) step_right();
    while (pieces_.lo() > target.lo) step_left();
  }

  double operator()(double w) const {
    if (!pieces_.contains(w)) {
      throw error(errc::out_of_coverage, "w = " + std::to_string(w) + " outside covered [" +
                                             std::to_string(pieces_.lo()) + ", " +
                                             std::to_string(pieces_.hi()) + "]");
    }
    return pieces_(w);
  }

 private:
  void step_right() {
    const std::size_t n = shifts_.size();
    const double top = shifts_.largest();
    const double width = shifts_.last_gap();
    std::vector<double> offsets;
    offsets.reserve(n);
    offsets.push_back(-top);
    for (std::size_t j = 0; j + 1 < n; ++j) offsets.push_back(shifts_[j] - top);
    const double a = pieces_.hi();
    const auto strip = sum_of_shifts(pieces_, offsets, a, a + width, -1.0);
    pieces_.append(strip, seam_tolerance());
    after_strip(strip);
  }

  void step_left() {
    const double width = shifts_.smallest();
    const double b = pieces_.lo();
    const auto strip = sum_of_shifts(pieces_, shifts_.values(), b - width, b, -1.0);
    pieces_.prepend(strip, seam_tolerance());
    after_strip(strip);
  }

  // A seam mismatch is the interpolation residual carried along by the
  // recursion, which amplifies it no more than it amplifies the values.
  double seam_tolerance() const {
    const double growth = boundary_scale_ > 0.0 ? std::max(1.0, value_scale_ / boundary_scale_) : 1.0;
    return (1e-9 + 2.0 * std::abs(interpolation_residual_)) * growth;
  }

  void after_strip(const PiecewiseLinear& strip) {
    for (double v : strip.values()) value_scale_ = std::max(value_scale_, std::abs(v));
    if (pieces_.size() > breakpoint_budget) {
      throw error(errc::coverage_budget_exceeded,
                  std::to_string(pieces_.size()) + " breakpoints exceed the budget");
    }
  }

  ShiftVector shifts_;
  PiecewiseLinear boundary_;
  PiecewiseLinear pieces_;
  double interpolation_residual_ = 0.0;
  double boundary_scale_ = 0.0;
  double value_scale_ = 0.0;
};

inline ExtendedSolution extend(PiecewiseLinear boundary, ShiftVector shifts, Interval target,
                               double interpolation_tol = default_interpolation_tol) {
  if (!target.contains({0.0, shifts.largest()})) {
    throw error(errc::invalid_range, "target must contain [0, b_N]");
  }
  ExtendedSolution sol(std::move(boundary), std::move(shifts), interpolation_tol);
  sol.cover(target);
  return sol;
}

/// max over the grid of |g(w) + sum_k g(w + b_k)|. Shifts need only be
/// positive here, not strictly increasing.
template <RealFunction G>
double residual_additive(const G& g, std::span<const double> shifts, std::span<const double> grid) {
  double worst = 0.0;
  for (double w : grid) {
    double s = g(w);
    for (double bk : shifts) s += g(w + bk);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

template <RealFunction G>
double residual_additive(const G& g, const ShiftVector& b, std::span<const double> grid) {
  return residual_additive(g, b.values(), grid);
}

/// max over the grid of |f(x) + sum_k f(a_k x)|, x > 0.
template <RealFunction F>
double residual_multiplicative(const F& f, const CoefficientVector& a, std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) {
    if (!(x > 0.0)) throw error(errc::non_positive_sample, "sample x = " + std::to_string(x));
    double s = f(x);
    for (double ak : a) s += f(ak * x);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

/// Determinant of a row-major n×n matrix by LU with partial pivoting.
inline double determinant(std::vector<double> m, std::size_t n) {
  if (m.size() != n * n) throw error(errc::invalid_argument, "matrix size mismatch");
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    }
    if (m[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
      det = -det;
    }
    const double p = m[c * n + c];
    det *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const double factor = m[r * n + c] / p;
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= factor * m[c * n + k];
    }
  }
  return det;
}

/// det[f(x + (i+j)h)]_{i,j=0..n}. Vanishes identically for exponential
/// polynomials of small enough order.
template <RealFunction F>
double popoviciu_determinant(const F& f, double x, double h, int n) {
  if (h == 0.0) throw error(errc::invalid_argument, "step h must be nonzero");
  if (n < 1) throw error(errc::invalid_argument, "order n must be at least 1");
  const auto dim = static_cast<std::size_t>(n) + 1;
  std::vector<double> samples(2 * dim - 1);
  for (std::size_t k = 0; k < samples.size(); ++k) samples[k] = f(x + static_cast<double>(k) * h);
  std::vector<double> hankel(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) hankel[i * dim + j] = samples[i + j];
  }
  return determinant(std::move(hankel), dim);
}

}  // namespace funceq
