#pragma once

// Coefficient data for the dilation equation
//
//   f(x) + f(a_1 x) + ... + f(a_N x) = 0,
//
// its normalization to 1 < a_1 < ... < a_N, the logarithmic bridge to the
// additive form g(w) + g(w + b_1) + ... + g(w + b_N) = 0 with b_k = ln a_k,
// and the regularity index m(a).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "funceq/error.hpp"

namespace funceq {

/// Dilation factors a_1 < ... < a_N with an implicit a_0 = 1 and a_1 > 1.
class CoefficientVector {
 public:
  /// Wraps values that are already normalized; throws if they are not.
  static CoefficientVector from_normalized(std::vector<double> values) {
    if (values.empty()) throw error(errc::empty_input, "coefficient vector is empty");
    double prev = 1.0;
    for (double v : values) {
      if (!std::isfinite(v)) throw error(errc::non_positive_entry, "non-finite coefficient");
      if (v == 1.0) throw error(errc::unit_entry, "coefficient equal to 1");
      if (!(v > prev)) {
        throw error(errc::invalid_argument,
                    "coefficients must satisfy 1 < a_1 < ... < a_N");
      }
      prev = v;
    }
    return CoefficientVector(std::move(values));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const { return entries_[k]; }
  double largest() const { return entries_.back(); }
  std::span<const double> values() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// a_k for k = 0..N with a_0 = 1.
  double with_unit(std::size_t k) const { return k == 0 ? 1.0 : entries_[k - 1]; }

  bool operator==(const CoefficientVector&) const = default;

 private:
  explicit CoefficientVector(std::vector<double> v) : entries_(std::move(v)) {}
  std::vector<double> entries_;
};

/// Additive shifts 0 < b_1 < ... < b_N with an implicit b_0 = 0.
class ShiftVector {
 public:
  explicit ShiftVector(std::vector<double> values) : entries_(std::move(values)) {
    if (entries_.empty()) throw error(errc::empty_input, "shift vector is empty");
    double prev = 0.0;
    for (double v : entries_) {
      if (!std::isfinite(v) || !(v > prev)) {
        throw error(errc::invalid_shifts, "shifts must satisfy 0 < b_1 < ... < b_N");
      }
      prev = v;
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const { return entries_[k]; }
  double largest() const { return entries_.back(); }
  double smallest() const { return entries_.front(); }
  /// b_N - b_{N-1}, with b_0 = 0 when N = 1.
  double last_gap() const {
    return entries_.size() == 1 ? entries_[0] : entries_.back() - entries_[entries_.size() - 2];
  }
  std::span<const double> values() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool operator==(const ShiftVector&) const = default;

 private:
  std::vector<double> entries_;
};

/// Least m with sum_{k<N} (a_k/a_N)^m < 1, together with the Riemann-sum bounds.
struct RegularityIndex {
  int m = 0;
  double contraction = 0.0;  ///< the sum at exponent m
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

/// Reorders and rescales raw factors so that 1 < a_1 < ... < a_N.
///
/// When the smallest factor a_min is below 1 the substitution y = a_min x
/// turns the factor set {a_k} into {a_k / a_min} ∪ {1 / a_min}, from which
/// the unit factor a_min / a_min is dropped.
inline CoefficientVector normalize(std::span<const double> raw) {
  if (raw.empty()) throw error(errc::empty_input, "no coefficients given");
  std::vector<double> sorted(raw.begin(), raw.end());
  for (double v : sorted) {
    if (!std::isfinite(v) || v <= 0.0) throw error(errc::non_positive_entry, "coefficients must be positive");
    if (v == 1.0) throw error(errc::unit_entry, "coefficient equal to 1");
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw error(errc::duplicate_entry, "coefficients must be pairwise distinct");
  }
  if (sorted.front() > 1.0) return CoefficientVector::from_normalized(std::move(sorted));

  const double smallest = sorted.front();
  std::vector<double> rescaled;
  rescaled.reserve(sorted.size());
  rescaled.push_back(1.0 / smallest);
  for (std::size_t k = 1; k < sorted.size(); ++k) rescaled.push_back(sorted[k] / smallest);
  std::sort(rescaled.begin(), rescaled.end());
  if (std::adjacent_find(rescaled.begin(), rescaled.end()) != rescaled.end()) {
    throw error(errc::duplicate_entry, "rescaled coefficients collide");
  }
  return CoefficientVector::from_normalized(std::move(rescaled));
}

inline CoefficientVector normalize(std::initializer_list<double> raw) {
  return normalize(std::span<const double>(raw.begin(), raw.size()));
}

inline ShiftVector to_additive(const CoefficientVector& a) {
  std::vector<double> b;
  b.reserve(a.size());
  for (double v : a) b.push_back(std::log(v));
  return ShiftVector(std::move(b));
}

/// sum_{k=0}^{N-1} (a_k / a_N)^m with a_0 = 1.
inline double contraction_sum(const CoefficientVector& a, int m) {
  const double top = a.largest();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::pow(a.with_unit(k) / top, m);
  return sum;
}

inline RegularityIndex regularity_index(const CoefficientVector& a) {
  double min_gap = INFINITY;
  double max_gap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double gap = a.with_unit(k + 1) - a.with_unit(k);
    min_gap = std::min(min_gap, gap);
    max_gap = std::max(max_gap, gap);
  }
  RegularityIndex r;
  r.lower_bound = 0.5 * a.largest() / max_gap - 1.0;
  r.upper_bound = a.largest() / min_gap;

  // For m >= upper_bound the sum is already below 1.
  const double cap = std::ceil(r.upper_bound) + 1.0;
  int m = 1;
  double sum = contraction_sum(a, m);
  while (sum >= 1.0) {
    ++m;
    if (m > cap) {
      throw error(errc::non_convergence,
                  "regularity search exceeded a_N / min gap = " + std::to_string(r.upper_bound));
    }
    sum = contraction_sum(a, m);
  }
  r.m = m;
  r.contraction = sum;
  return r;
}

}  // namespace funceq
