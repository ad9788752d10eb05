#pragma once

// Exponential sums G_N(z) = 1 + 2^z + ... + N^z and H_N(z) = G_N(-z), the
// partial sums of the Riemann zeta function, together with a zero finder
// (grid scan + Newton, audited by an argument-principle count) and the
// solutions x ↦ Re(|x|^α) (x < 0), 0 (x ≥ 0) of f(x) + f(2x) + ... + f(Nx) = 0
// built from zeros α of G_N.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "funceq/error.hpp"

namespace funceq {

using complex = std::complex<double>;

/// G_N with ln k precomputed; k^z = exp(z ln k).
class ExpSum {
 public:
  explicit ExpSum(int n) : n_(n) {
    if (n < 2) throw error(errc::invalid_argument, "G_N needs N >= 2");
    logs_.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 2; k <= n; ++k) logs_.push_back(std::log(static_cast<double>(k)));
  }

  int n() const noexcept { return n_; }

  complex operator()(complex z) const {
    complex s{1.0, 0.0};
    for (double lk : logs_) s += std::exp(z * lk);
    return s;
  }

  /// G_N'(z) = Σ_{k≥2} ln k · k^z.
  complex derivative(complex z) const {
    complex s{0.0, 0.0};
    for (double lk : logs_) s += lk * std::exp(z * lk);
    return s;
  }

 private:
  int n_;
  std::vector<double> logs_;
};

inline complex eval_gn(int n, complex z) { return ExpSum(n)(z); }
inline complex eval_hn(int n, complex z) { return ExpSum(n)(-z); }

struct ComplexZero {
  complex z;
  double modulus_residual = 0.0;  ///< |G_N(z)|
  int n = 0;
  int iterations = 0;
  std::vector<double> residual_history;  ///< |G_N| at each Newton iterate
};

struct SearchRectangle {
  double re_min = -3.0;
  double re_max = 2.0;
  double im_min = 0.0;
  double im_max = 30.0;
  int grid_re = 101;
  int grid_im = 601;

  void validate() const {
    if (!(re_min < re_max) || !(im_min < im_max) || grid_re < 2 || grid_im < 2) {
      throw error(errc::invalid_range, "search rectangle needs re_min < re_max, im_min < im_max, grids >= 2");
    }
  }

  bool contains(complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }

  double distance_to_edge(complex z) const {
    return std::min({std::abs(z.real() - re_min), std::abs(z.real() - re_max),
                     std::abs(z.imag() - im_min), std::abs(z.imag() - im_max)});
  }

  complex node(int i, int j) const {
    return {re_min + (re_max - re_min) * i / (grid_re - 1), im_min + (im_max - im_min) * j / (grid_im - 1)};
  }
};

struct NewtonResult {
  complex z;
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;
};

/// Stops when |Δz| <= 1e-13 (1 + |z|) or after 60 iterations.
inline NewtonResult newton_refine(const ExpSum& g, complex z0) {
  NewtonResult r;
  r.z = z0;
  for (int it = 0; it < 60; ++it) {
    const complex value = g(r.z);
    const complex slope = g.derivative(r.z);
    r.residual_history.push_back(std::abs(value));
    if (slope == complex{0.0, 0.0} || !std::isfinite(std::abs(value))) return r;
    const complex step = value / slope;
    r.z -= step;
    r.iterations = it + 1;
    if (!std::isfinite(r.z.real()) || !std::isfinite(r.z.imag())) return r;
    if (std::abs(step) <= 1e-13 * (1.0 + std::abs(r.z))) {
      r.residual_history.push_back(std::abs(g(r.z)));
      r.converged = true;
      return r;
    }
  }
  return r;
}

namespace detail {

struct QuadratureBudget {
  long remaining = 4'000'000;

  void spend(long n) {
    remaining -= n;
    if (remaining < 0) {
      throw error(errc::boundary_zero, "winding integral does not settle; a zero is close to the boundary");
    }
  }
};

template <typename F>
complex adaptive_simpson(const F& f, double a, double b, complex fa, complex fm, complex fb,
                         complex whole, double tol, int depth, QuadratureBudget& budget) {
  budget.spend(2);
  const double m = 0.5 * (a + b);
  const complex flm = f(0.5 * (a + m));
  const complex frm = f(0.5 * (m + b));
  const complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const complex diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}

template <typename F>
complex integrate(const F& f, double a, double b, double tol, QuadratureBudget& budget) {
  // Split up front so that oscillatory edges are not mistaken for smooth ones.
  constexpr int pieces = 64;
  complex total{0.0, 0.0};
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + (b - a) * i / pieces;
    const double hi = a + (b - a) * (i + 1) / pieces;
    const complex fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const complex whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += adaptive_simpson(f, lo, hi, fa, fm, fb, whole, tol / pieces, 30, budget);
  }
  return total;
}

}  // namespace detail

/// (1 / 2πi) ∮ G_N'/G_N dz around the rectangle, counterclockwise. Throws
/// BoundaryZero when the integral is not close to an integer.
inline int winding_count(const ExpSum& g, const SearchRectangle& rect) {
  rect.validate();
  const complex corners[4] = {{rect.re_min, rect.im_min},
                              {rect.re_max, rect.im_min},
                              {rect.re_max, rect.im_max},
                              {rect.re_min, rect.im_max}};
  complex total{0.0, 0.0};
  detail::QuadratureBudget budget;
  for (int e = 0; e < 4; ++e) {
    const complex from = corners[e];
    const complex to = corners[(e + 1) % 4];
    const complex dir = to - from;
    const auto integrand = [&](double t) {
      const complex z = from + t * dir;
      const complex value = g(z);
      // Σ |k^z| bounds |G_N(z)|; a value this far below it means a zero on the contour.
      double scale = 1.0;
      for (int k = 2; k <= g.n(); ++k) scale += std::exp(z.real() * std::log(static_cast<double>(k)));
      if (std::abs(value) <= 1e-12 * scale) {
        throw error(errc::boundary_zero, "G_N vanishes on the rectangle boundary");
      }
      return g.derivative(z) / value * dir;
    };
    total += detail::integrate(integrand, 0.0, 1.0, 1e-9, budget);
  }
  const complex count = total / complex{0.0, 2.0 * std::numbers::pi};
  const double nearest = std::round(count.real());
  if (!std::isfinite(count.real()) || std::abs(count.real() - nearest) > 1e-3 ||
      std::abs(count.imag()) > 1e-3) {
    throw error(errc::boundary_zero, "winding integral " + std::to_string(count.real()) +
                                         " is not an integer; a zero is close to the boundary");
  }
  return static_cast<int>(nearest);
}

struct ZeroSearch {
  std::vector<ComplexZero> zeros;  ///< sorted by (im, re)
  int winding = 0;
  bool complete = false;  ///< winding count equals zeros.size()
};

/// |G_N| on the rectangle's grid, row-major in (im, re).
struct GridSample {
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;
};

inline std::vector<GridSample> scan_grid(const ExpSum& g, const SearchRectangle& rect) {
  rect.validate();
  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(rect.grid_re) * static_cast<std::size_t>(rect.grid_im));
  for (int j = 0; j < rect.grid_im; ++j) {
    for (int i = 0; i < rect.grid_re; ++i) {
      const complex z = rect.node(i, j);
      out.push_back({z.real(), z.imag(), std::abs(g(z))});
    }
  }
  return out;
}

namespace detail {

inline std::vector<ComplexZero> zeros_from_grid(const ExpSum& g, const SearchRectangle& rect) {
  const auto samples = scan_grid(g, rect);
  const auto at = [&](int i, int j) {
    return samples[static_cast<std::size_t>(j) * static_cast<std::size_t>(rect.grid_re) +
                   static_cast<std::size_t>(i)]
        .abs;
  };
  std::vector<ComplexZero> found;
  for (int j = 0; j < rect.grid_im; ++j) {
    for (int i = 0; i < rect.grid_re; ++i) {
      const double v = at(i, j);
      bool local_min = true;
      for (int dj = -1; dj <= 1 && local_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di, jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= rect.grid_re || jj >= rect.grid_im) continue;
          if (at(ii, jj) < v) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      const NewtonResult nr = newton_refine(g, rect.node(i, j));
      if (!nr.converged) continue;
      const double residual = std::abs(g(nr.z));
      if (!(residual <= 1e-10)) continue;
      if (rect.distance_to_edge(nr.z) < 1e-6) {
        throw error(errc::boundary_zero, "zero at (" + std::to_string(nr.z.real()) + ", " +
                                             std::to_string(nr.z.imag()) + ") lies on the rectangle edge");
      }
      if (!rect.contains(nr.z)) continue;
      const bool seen = std::any_of(found.begin(), found.end(),
                                    [&](const ComplexZero& z) { return std::abs(z.z - nr.z) < 1e-8; });
      if (seen) continue;
      found.push_back({nr.z, residual, g.n(), nr.iterations, nr.residual_history});
    }
  }
  std::sort(found.begin(), found.end(), [](const ComplexZero& a, const ComplexZero& b) {
    return a.z.imag() != b.z.imag() ? a.z.imag() < b.z.imag() : a.z.real() < b.z.real();
  });
  return found;
}

}  // namespace detail

/// Zeros of G_N inside `rect`. Local minima of |G_N| on the grid seed Newton;
/// if fewer zeros than the winding count are found, the grid is doubled up
/// to three times before the result is marked incomplete.
inline ZeroSearch find_zeros(int n, SearchRectangle rect = {}) {
  rect.validate();
  const ExpSum g(n);
  ZeroSearch out;
  out.winding = winding_count(g, rect);
  for (int attempt = 0; attempt < 4; ++attempt) {
    out.zeros = detail::zeros_from_grid(g, rect);
    out.complete = static_cast<int>(out.zeros.size()) == out.winding;
    if (out.complete || static_cast<int>(out.zeros.size()) > out.winding) break;
    rect.grid_re = 2 * rect.grid_re - 1;
    rect.grid_im = 2 * rect.grid_im - 1;
  }
  return out;
}

/// x ↦ Re(|x|^α) for x < 0 and 0 for x ≥ 0.
class MoraSolution {
 public:
  MoraSolution(complex alpha, int n) : alpha_(alpha), n_(n), residual_(std::abs(eval_gn(n, alpha))) {
    if (!(residual_ <= 1e-10)) {
      throw error(errc::invalid_argument,
                  "|G_N(alpha)| = " + std::to_string(residual_) + " is not a zero to 1e-10");
    }
  }

  complex alpha() const noexcept { return alpha_; }
  int n() const noexcept { return n_; }
  double gn_residual() const noexcept { return residual_; }
  /// Only a positive real part makes the function tend to 0 at 0⁻.
  bool continuous_at_zero() const noexcept { return alpha_.real() > 0.0; }

  double operator()(double x) const {
    if (x >= 0.0) return 0.0;
    return std::exp(alpha_ * std::log(-x)).real();
  }

 private:
  complex alpha_;
  int n_;
  double residual_;
};

inline MoraSolution mora_solution(const ComplexZero& zero) { return MoraSolution(zero.z, zero.n); }

/// max over the grid of |f(x) + f(2x) + ... + f(Nx)|.
template <typename F>
double residual_integer_equation(const F& f, int n, std::span<const double> grid) {
  if (n < 1) throw error(errc::invalid_argument, "N must be at least 1");
  double worst = 0.0;
  for (double x : grid) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += f(k * x);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace funceq
