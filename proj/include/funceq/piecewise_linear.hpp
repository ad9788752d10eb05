#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "funceq/error.hpp"

namespace funceq {

namespace detail {

inline double coincidence_gap(double x) { return 1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace detail

/// Continuous piecewise-linear function given by its breakpoints and the
/// values there. Between breakpoints it interpolates linearly; outside
/// [front, back] it is undefined.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> breakpoints, std::vector<double> values)
      : x_(std::move(breakpoints)), y_(std::move(values)) {
    if (x_.size() < 2 || x_.size() != y_.size()) {
      throw error(errc::invalid_argument,
                  "piecewise-linear data needs at least two breakpoints and one value per breakpoint");
    }
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
        throw error(errc::invalid_argument, "non-finite breakpoint or value");
      }
      if (i > 0 && !(x_[i] > x_[i - 1])) {
        throw error(errc::invalid_argument, "breakpoints must be strictly increasing");
      }
    }
  }

  /// Constant function on [lo, hi].
  static PiecewiseLinear constant(double lo, double hi, double value) {
    return PiecewiseLinear({lo, hi}, {value, value});
  }

  /// Linear interpolant of `f` on n equispaced nodes of [lo, hi].
  template <typename F>
  static PiecewiseLinear sample(F&& f, double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw error(errc::invalid_range, "need n >= 2 and lo < hi");
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
      ys[i] = f(xs[i]);
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
  }

  double lo() const noexcept { return x_.front(); }
  double hi() const noexcept { return x_.back(); }
  std::size_t size() const noexcept { return x_.size(); }
  std::span<const double> breakpoints() const noexcept { return x_; }
  std::span<const double> values() const noexcept { return y_; }

  bool contains(double x) const noexcept {
    return x >= lo() - detail::coincidence_gap(lo()) && x <= hi() + detail::coincidence_gap(hi());
  }

  double operator()(double x) const {
    if (!contains(x)) {
      throw error(errc::out_of_coverage, "point " + std::to_string(x) + " outside [" +
                                             std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    }
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - x_.begin());
    const double x0 = x_[j - 1], x1 = x_[j];
    const double t = (x - x0) / (x1 - x0);
    return y_[j - 1] + t * (y_[j] - y_[j - 1]);
  }

  PiecewiseLinear shifted(double offset) const {
    std::vector<double> xs(x_);
    for (double& x : xs) x += offset;
    return PiecewiseLinear(std::move(xs), y_);
  }

  PiecewiseLinear scaled(double factor) const {
    std::vector<double> ys(y_);
    for (double& y : ys) y *= factor;
    return PiecewiseLinear(x_, std::move(ys));
  }

  PiecewiseLinear operator-() const { return scaled(-1.0); }

  /// Restriction to [a, b] ⊆ domain, with interpolated endpoint values.
  PiecewiseLinear restricted(double a, double b) const {
    if (!(b > a) || !contains(a) || !contains(b)) {
      throw error(errc::domain_mismatch, "restriction interval not inside the domain");
    }
    std::vector<double> xs{a}, ys{(*this)(a)};
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (x_[i] > a && x_[i] < b) {
        xs.push_back(x_[i]);
        ys.push_back(y_[i]);
      }
    }
    xs.push_back(b);
    ys.push_back((*this)(b));
    merge_close(xs, ys);
    return PiecewiseLinear(std::move(xs), std::move(ys));
  }

  /// weight * sum_j f(x + offsets[j]) on [a, b]. Exact: the result's
  /// breakpoints are the union of the shifted breakpoints of f.
  friend PiecewiseLinear sum_of_shifts(const PiecewiseLinear& f, std::span<const double> offsets,
                                       double a, double b, double weight = 1.0) {
    if (!(b > a)) throw error(errc::invalid_range, "empty interval");
    std::vector<double> xs{a, b};
    for (double off : offsets) {
      if (!f.contains(a + off) || !f.contains(b + off)) {
        throw error(errc::out_of_coverage, "shifted window leaves the domain");
      }
      const auto first = std::upper_bound(f.x_.begin(), f.x_.end(), a + off);
      const auto last = std::lower_bound(f.x_.begin(), f.x_.end(), b + off);
      for (auto it = first; it < last; ++it) {
        const double x = *it - off;
        if (x > a && x < b) xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double s = 0.0;
      for (double off : offsets) s += f(xs[i] + off);
      ys[i] = weight * s;
    }
    merge_close(xs, ys);
    return PiecewiseLinear(std::move(xs), std::move(ys));
  }

  /// Pointwise sum on the intersection of the two domains.
  friend PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    const double a = std::max(f.lo(), g.lo());
    const double b = std::min(f.hi(), g.hi());
    if (!(b > a)) throw error(errc::domain_mismatch, "domains do not overlap");
    std::vector<double> xs{a, b};
    for (const auto* h : {&f, &g}) {
      for (double x : h->x_) {
        if (x > a && x < b) xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]) + g(xs[i]);
    merge_close(xs, ys);
    return PiecewiseLinear(std::move(xs), std::move(ys));
  }

  /// Concatenates `right`, whose domain must start where this one ends.
  /// The shared endpoint must carry the same value to within `tol`.
  void append(const PiecewiseLinear& right, double tol = 1e-9) {
    join(right, /*to_the_right=*/true, tol);
  }

  /// Concatenates `left`, whose domain must end where this one starts.
  void prepend(const PiecewiseLinear& left, double tol = 1e-9) {
    join(left, /*to_the_right=*/false, tol);
  }

  /// Drops a breakpoint lying within 1e-12 * max(1, |x|) of the previous kept
  /// one when their values agree to 1e-9. Steep stretches can put distinct
  /// values that close together; those breakpoints are kept. Endpoints are
  /// always kept.
  static void merge_close(std::vector<double>& xs, std::vector<double>& ys) {
    if (xs.size() < 3) return;
    std::size_t kept = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const bool last = i + 1 == xs.size();
      const bool close = xs[i] - xs[kept] <= detail::coincidence_gap(xs[i]);
      if (!close || std::abs(ys[i] - ys[kept]) > 1e-9) {
        ++kept;
        xs[kept] = xs[i];
        ys[kept] = ys[i];
        continue;
      }
      if (last) {
        if (kept == 0) ++kept;
        xs[kept] = xs[i];
        ys[kept] = ys[i];
      }
    }
    xs.resize(kept + 1);
    ys.resize(kept + 1);
  }

 private:
  void join(const PiecewiseLinear& other, bool to_the_right, double tol) {
    const double seam = to_the_right ? hi() : lo();
    const double other_end = to_the_right ? other.lo() : other.hi();
    if (std::abs(seam - other_end) > detail::coincidence_gap(seam)) {
      throw error(errc::domain_mismatch, "pieces do not share an endpoint");
    }
    const double mine = to_the_right ? y_.back() : y_.front();
    const double theirs = to_the_right ? other.y_.front() : other.y_.back();
    if (std::abs(mine - theirs) > tol) {
      throw error(errc::internal_inconsistency,
                  "jump of " + std::to_string(mine - theirs) + " at seam " + std::to_string(seam));
    }
    if (to_the_right) {
      x_.insert(x_.end(), other.x_.begin() + 1, other.x_.end());
      y_.insert(y_.end(), other.y_.begin() + 1, other.y_.end());
    } else {
      x_.insert(x_.begin(), other.x_.begin(), other.x_.end() - 1);
      y_.insert(y_.begin(), other.y_.begin(), other.y_.end() - 1);
    }
  }

  std::vector<double> x_;
  std::vector<double> y_;
};

}  // namespace funceq
