#pragma once

// Continuous periodic solutions of g(w) + g(w + b_1) + ... + g(w + b_N) = 0.
//
// A nonzero continuous periodic solution exists iff some real α solves
//
//   1 + Σ cos(α b_k) = 0,   Σ sin(α b_k) = 0,
//
// and then cos(αx) and sin(αx) are themselves solutions. The numeric scanner
// below works with the squared residual of that system, which is the
// determinant of the 2×2 Fourier coefficient map at frequency α.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "funceq/coefficients.hpp"
#include "funceq/error.hpp"

namespace funceq {

inline constexpr double default_periodicity_tol = 1e-16;

namespace detail {

inline void require_positive_shifts(std::span<const double> shifts) {
  if (shifts.empty()) throw error(errc::empty_input, "no shifts given");
  for (double b : shifts) {
    if (!std::isfinite(b) || !(b > 0.0)) throw error(errc::invalid_shifts, "shifts must be positive");
  }
}

}  // namespace detail

/// (1 + Σ cos(α b_k))² + (Σ sin(α b_k))². Zero iff α solves the system.
inline double system_residual(double alpha, std::span<const double> shifts) {
  double c = 1.0;
  double s = 0.0;
  for (double b : shifts) {
    c += std::cos(alpha * b);
    s += std::sin(alpha * b);
  }
  return c * c + s * s;
}

inline double system_residual(double alpha, const ShiftVector& b) {
  return system_residual(alpha, b.values());
}

/// a cos(αx) + b sin(αx).
struct TrigWitness {
  double alpha = 0.0;
  double cos_coeff = 1.0;
  double sin_coeff = 0.0;

  double operator()(double x) const {
    return cos_coeff * std::cos(alpha * x) + sin_coeff * std::sin(alpha * x);
  }
};

struct PeriodicityCertificate {
  double alpha = 0.0;
  double period = 0.0;
  double system_residual = 0.0;
  TrigWitness witness;
};

struct PeriodicityScan {
  std::vector<PeriodicityCertificate> certificates;
  double min_residual = 0.0;  ///< smallest refined residual over (0, alpha_max]
  double argmin_alpha = 0.0;
};

/// min(π / (8 b_N), alpha_max / 10⁴): resolves the fastest term cos(α b_N).
inline double default_grid_step(std::span<const double> shifts, double alpha_max) {
  detail::require_positive_shifts(shifts);
  double top = 0.0;
  for (double b : shifts) top = std::max(top, b);
  return std::min(std::numbers::pi / (8.0 * top), alpha_max / 1e4);
}

namespace detail {

/// Golden-section minimization of `f` on [a, b] down to width `width`.
template <typename F>
std::pair<double, double> golden_minimize(const F& f, double a, double b, double width) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace detail

/// Scans the system residual on (0, alpha_max], refines every grid-local
/// minimum by golden section to width 1e-14, and certifies the minima whose
/// residual is at most `tol`.
inline PeriodicityScan scan_periodic_alphas(std::span<const double> shifts, double alpha_max,
                                            double grid_step, double tol = default_periodicity_tol) {
  detail::require_positive_shifts(shifts);
  if (!(alpha_max > 0.0) || !(grid_step > 0.0) || !(tol > 0.0) || !std::isfinite(alpha_max)) {
    throw error(errc::invalid_range, "alpha_max, grid_step and tol must be positive");
  }
  const auto f = [&](double a) { return system_residual(a, shifts); };
  const auto n = static_cast<std::size_t>(std::ceil(alpha_max / grid_step));
  std::vector<double> alpha(n + 1), value(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    alpha[i] = i == n ? alpha_max : static_cast<double>(i) * grid_step;
    value[i] = f(alpha[i]);
  }

  PeriodicityScan scan;
  scan.min_residual = INFINITY;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool left_ok = value[i] <= value[i - 1];
    const bool right_ok = i == n || value[i] <= value[i + 1];
    if (!left_ok || !right_ok) continue;
    const double hi = i == n ? alpha[n] : alpha[i + 1];
    const auto [a_star, r_star] = detail::golden_minimize(f, alpha[i - 1], hi, 1e-14);
    if (r_star < scan.min_residual) {
      scan.min_residual = r_star;
      scan.argmin_alpha = a_star;
    }
    if (r_star > tol || !(a_star > 0.0)) continue;
    const bool duplicate =
        !scan.certificates.empty() &&
        std::abs(scan.certificates.back().alpha - a_star) <= 1e-9 * std::max(1.0, a_star);
    if (duplicate) {
      if (r_star < scan.certificates.back().system_residual) {
        scan.certificates.back().alpha = a_star;
        scan.certificates.back().period = 2.0 * std::numbers::pi / a_star;
        scan.certificates.back().system_residual = r_star;
        scan.certificates.back().witness.alpha = a_star;
      }
      continue;
    }
    scan.certificates.push_back({a_star, 2.0 * std::numbers::pi / a_star, r_star, TrigWitness{a_star, 1.0, 0.0}});
  }
  return scan;
}

inline std::vector<PeriodicityCertificate> find_periodic_alphas(std::span<const double> shifts,
                                                                double alpha_max, double grid_step,
                                                                double tol = default_periodicity_tol) {
  return scan_periodic_alphas(shifts, alpha_max, grid_step, tol).certificates;
}

inline std::vector<PeriodicityCertificate> find_periodic_alphas(std::span<const double> shifts,
                                                                double alpha_max) {
  if (!(alpha_max > 0.0)) throw error(errc::invalid_range, "alpha_max must be positive");
  return find_periodic_alphas(shifts, alpha_max, default_grid_step(shifts, alpha_max));
}

/// Closed form for b = (d, 2d, ..., Nd): α = 2mπ / ((N+1) d), m ∉ (N+1)ℤ.
inline std::vector<double> equispaced_alphas(int n, double d, int m_max) {
  if (n < 1) throw error(errc::invalid_argument, "N must be at least 1");
  if (!(d > 0.0)) throw error(errc::non_positive_scale, "spacing d must be positive");
  if (m_max < 1) throw error(errc::invalid_argument, "m_max must be at least 1");
  std::vector<double> out;
  for (int m = 1; m <= m_max; ++m) {
    if (m % (n + 1) == 0) continue;
    out.push_back(2.0 * m * std::numbers::pi / ((n + 1) * d));
  }
  return out;
}

/// Maps the Fourier coefficients (a_k(g), b_k(g)) of a periodic g with base
/// frequency θ to those of g(w) + Σ g(w + b_j).
struct FourierMatrix {
  std::array<std::array<double, 2>, 2> entries{};

  double det() const { return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]; }
};

inline FourierMatrix fourier_matrix(int k, double theta, std::span<const double> shifts) {
  if (k < 1) throw error(errc::invalid_argument, "harmonic index must be at least 1");
  double c = 1.0;
  double s = 0.0;
  for (double b : shifts) {
    c += std::cos(k * theta * b);
    s += std::sin(k * theta * b);
  }
  return FourierMatrix{{{{c, s}, {-s, c}}}};
}

inline std::vector<double> scale_shifts(std::span<const double> shifts, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw error(errc::non_positive_scale, "scale must be positive");
  std::vector<double> out(shifts.begin(), shifts.end());
  for (double& b : out) b *= d;
  return out;
}

inline ShiftVector scale_shifts(const ShiftVector& b, double d) {
  return ShiftVector(scale_shifts(b.values(), d));
}

/// Which member of the ratio set a verdict's witness instantiates.
enum class RatioForm {
  two_over_one,  ///< p/q = (2 + 3k) / (1 + 3m)
  one_over_two,  ///< p/q = (1 + 3m) / (2 + 3k)
};

struct TwoTermVerdict {
  bool exists = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;  ///< (k, m)
  RatioForm form = RatioForm::two_over_one;
  std::string reason;
};

/// Decides whether g(x) + g(x + a) + g(x + b) = 0 with a/b = p/q (reduced)
/// has a nonzero continuous periodic solution. The admissible ratios are
/// (2+3k)/(1+3m) and their reciprocals; in lowest terms these are exactly the
/// fractions whose numerator and denominator have residues {1, 2} mod 3.
inline TwoTermVerdict two_term_periodic_exists(std::int64_t p, std::int64_t q) {
  if (q == 0) throw error(errc::zero_denominator, "q must be nonzero");
  if (p <= 0 || q < 0) throw error(errc::invalid_argument, "p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw error(errc::not_coprime, std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
  const auto rp = p % 3;
  const auto rq = q % 3;
  TwoTermVerdict v;
  if (rp == 2 && rq == 1) {
    v.exists = true;
    v.form = RatioForm::two_over_one;
    v.witness = std::pair{(p - 2) / 3, (q - 1) / 3};
    v.reason = "p = 2 + 3k, q = 1 + 3m";
  } else if (rp == 1 && rq == 2) {
    v.exists = true;
    v.form = RatioForm::one_over_two;
    v.witness = std::pair{(q - 2) / 3, (p - 1) / 3};
    v.reason = "p = 1 + 3m, q = 2 + 3k";
  } else {
    v.reason = "p mod 3 = " + std::to_string(rp) + ", q mod 3 = " + std::to_string(rq) +
               "; admissible ratios need residues {1, 2}";
  }
  return v;
}

}  // namespace funceq
