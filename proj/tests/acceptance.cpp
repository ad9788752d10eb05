// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "funceq/funceq.hpp"
#include "support.hpp"

namespace {

using funceq::testing::linspace;

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void regularity() {
  bool ok = funceq::regularity_index(funceq::normalize({2.0})).m == 1 &&
            funceq::regularity_index(funceq::normalize({2.0, 3.0})).m == 2;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_real_distribution<double> entry(1.0, 20.0);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v;
    const int n = count(rng);
    while (static_cast<int>(v.size()) < n) {
      const double x = entry(rng);
      if (x > 1.0 && std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    const auto a = funceq::normalize(v);
    const auto r = funceq::regularity_index(a);
    const bool bracket = r.lower_bound <= r.m && r.m <= r.upper_bound;
    const bool contracts = r.contraction < 1.0 && (r.m == 1 || funceq::contraction_sum(a, r.m - 1) >= 1.0);
    if (!bracket || !contracts) ++bad;
  }
  report(1, "regularity", ok && bad == 0,
         "m((2)) and m((2,3)) exact: " + std::string(ok ? "yes" : "no") + "; failures over 200 vectors: " +
             std::to_string(bad));
}

void golden() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> bs(static_cast<std::size_t>(n));
    std::iota(bs.begin(), bs.end(), 1.0);
    const funceq::ShiftVector b(bs);
    const double period = n + 1.0;
    const auto sol = funceq::extend(funceq::tent_boundary(b), b, {-3.0 * period, n + 3.0 * period});
    const auto ref = funceq::periodic_reference(n);
    const auto reference = [&](double w) {
      double t = std::fmod(w, period);
      if (t < 0.0) t += period;
      return ref(t);
    };
    for (double w : linspace(n + 1e-3, n + 3.0 * period, 3000)) worst = std::max(worst, std::abs(sol(w) - reference(w)));
    for (double w : linspace(-3.0 * period, -1e-3, 3000)) worst = std::max(worst, std::abs(sol(w) - reference(w)));
  }
  report(2, "extension golden", worst <= 1e-10, "max error " + num(worst) + " (limit 1e-10)");
}

void equation_residual() {
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = funceq::testing::random_shifts(rng, 5);
    const auto g = funceq::testing::random_admissible_boundary(rng, b);
    const double lo = -5.0 * b.smallest();
    const double hi = b.largest() + 5.0 * b.last_gap();
    // Reach one b_N further so the stencil at hi is covered too.
    const auto sol = funceq::extend(g, b, {lo, hi + b.largest()});
    worst = std::max(worst, funceq::residual_additive(sol, b, linspace(lo, hi, 10000)));
  }
  report(3, "equation residual", worst <= 1e-9, "max residual " + num(worst) + " over 50 vectors (limit 1e-9)");
}

void periodicity_closed_form() {
  int missing = 0, extra = 0;
  double worst_alpha = 0.0, worst_witness = 0.0;
  const auto grid = linspace(-10.0, 10.0, 2001);
  for (int n = 1; n <= 5; ++n) {
    for (double d : {0.5, 1.0, std::log(2.0)}) {
      std::vector<double> b(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(k)] = (k + 1) * d;
      const double alpha_max = 12.0 / d;
      std::vector<double> expect;
      for (int m = 1; 2.0 * m * pi / ((n + 1) * d) <= alpha_max; ++m) {
        if (m % (n + 1) != 0) expect.push_back(2.0 * m * pi / ((n + 1) * d));
      }
      const auto certs = funceq::find_periodic_alphas(b, alpha_max);
      std::vector<bool> used(certs.size(), false);
      for (double e : expect) {
        std::size_t best = certs.size();
        for (std::size_t i = 0; i < certs.size(); ++i) {
          if (!used[i] && (best == certs.size() || std::abs(certs[i].alpha - e) < std::abs(certs[best].alpha - e))) {
            best = i;
          }
        }
        if (best == certs.size() || std::abs(certs[best].alpha - e) > 1e-10) {
          ++missing;
          continue;
        }
        used[best] = true;
        worst_alpha = std::max(worst_alpha, std::abs(certs[best].alpha - e));
      }
      extra += static_cast<int>(std::count(used.begin(), used.end(), false));
      for (const auto& c : certs) {
        worst_witness = std::max(worst_witness, funceq::residual_additive(c.witness, b, grid));
      }
    }
  }
  report(4, "periodicity closed form", missing == 0 && extra == 0 && worst_witness <= 1e-10,
         "missing " + std::to_string(missing) + ", extra " + std::to_string(extra) + ", max alpha error " +
             num(worst_alpha) + ", max witness residual " + num(worst_witness));
}

void impossibility() {
  bool ok = true;
  double worst = 0.0;
  for (double a : {0.5, 1.0, std::log(2.0), 2.3}) {
    const std::vector<double> b{a, a};
    const auto scan = funceq::scan_periodic_alphas(b, 20.0 / a, funceq::default_grid_step(b, 20.0 / a));
    ok = ok && scan.certificates.empty();
    worst = std::max(worst, std::abs(scan.min_residual - 1.0));
  }
  const bool two_term = !funceq::two_term_periodic_exists(1, 1).exists;
  report(5, "impossibility", ok && worst <= 1e-9 && two_term,
         std::string("no certificates: ") + (ok ? "yes" : "no") + ", |min residual - 1| " + num(worst) +
             ", two-term (1,1) false: " + (two_term ? "yes" : "no"));
}

void two_term_oracle() {
  int checked = 0, disagree = 0;
  for (std::int64_t p = 1; p <= 50; ++p) {
    for (std::int64_t q = p; q <= 50; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++checked;
      bool found = false;
      for (std::int64_t m = -200; m <= 200 && !found; ++m) {
        for (std::int64_t k = -200; k <= 200 && !found; ++k) {
          // p/q = (2+3k)/(1+3m) or its reciprocal.
          found = p * (1 + 3 * m) == q * (2 + 3 * k) || p * (2 + 3 * k) == q * (1 + 3 * m);
        }
      }
      if (found != funceq::two_term_periodic_exists(p, q).exists) ++disagree;
    }
  }
  report(6, "two-term oracle", checked == 774 && disagree == 0,
         std::to_string(checked) + " reduced fractions, " + std::to_string(disagree) + " disagreements");
}

void scale_invariance() {
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> alpha(0.1, 10.0), scale(0.2, 5.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = funceq::testing::random_shifts(rng, 6);
    const double a = alpha(rng), d = scale(rng);
    const double r1 = funceq::system_residual(a, b);
    const double r2 = funceq::system_residual(a / d, funceq::scale_shifts(b, d));
    worst = std::max(worst, std::abs(r1 - r2) / std::max(std::abs(r1), std::abs(r2)));
  }
  report(7, "scale invariance", worst <= 1e-12, "max relative difference " + num(worst) + " (limit 1e-12)");
}

void zeros() {
  const auto two = funceq::find_zeros(2);
  double err = two.zeros.size() == 3 ? 0.0 : INFINITY;
  for (std::size_t j = 0; j < std::min<std::size_t>(3, two.zeros.size()); ++j) {
    const double want = pi * (2.0 * static_cast<double>(j) + 1.0) / std::log(2.0);
    err = std::max(err, std::abs(two.zeros[j].z - funceq::complex{0.0, want}));
  }
  bool winding = true;
  double mora = 0.0;
  const auto xs = linspace(-5.0, -0.01, 2000);
  for (int n : {2, 3, 4}) {
    const auto res = n == 2 ? two : funceq::find_zeros(n);
    winding = winding && res.complete && res.winding == static_cast<int>(res.zeros.size());
    for (const auto& z : res.zeros) {
      mora = std::max(mora, funceq::residual_integer_equation(funceq::mora_solution(z), n, xs));
    }
  }
  report(8, "zeros", err <= 1e-10 && winding && mora <= 1e-8,
         "N=2 zero error " + num(err) + ", winding matches: " + (winding ? "yes" : "no") +
             ", max equation residual " + num(mora));
}

void popoviciu() {
  std::mt19937_64 rng(4004);
  std::uniform_real_distribution<double> ux(-10.0, 10.0), uh(0.01, 2.0), ub(0.5, 2.0);
  double worst_cos = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double b1 = ub(rng);
    const auto f = [b1](double x) { return std::cos(pi * x / b1); };
    worst_cos = std::max(worst_cos, std::abs(funceq::popoviciu_determinant(f, ux(rng), uh(rng), 2)));
  }
  const funceq::ShiftVector b({1.0, 2.0});
  const auto sol = funceq::extend(funceq::tent_boundary(b), b, {-10.0, 10.0});
  double best_tent = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (double x : {-3.7, -1.2, 0.3, 1.1}) {
      for (double h : {0.3, 0.55, 0.8}) {
        best_tent = std::max(best_tent, std::abs(funceq::popoviciu_determinant(sol, x, h, n)));
      }
    }
  }
  report(9, "popoviciu", worst_cos <= 1e-10 && best_tent > 1e-8,
         "cos max |det| " + num(worst_cos) + ", tent max |det| " + num(best_tent));
}

}  // namespace

int main() {
  const auto guarded = [](int id, const char* name, void (*fn)()) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, name, false, std::string("threw ") + e.what());
    }
  };
  guarded(1, "regularity", regularity);
  guarded(2, "extension golden", golden);
  guarded(3, "equation residual", equation_residual);
  guarded(4, "periodicity closed form", periodicity_closed_form);
  guarded(5, "impossibility", impossibility);
  guarded(6, "two-term oracle", two_term_oracle);
  guarded(7, "scale invariance", scale_invariance);
  guarded(8, "zeros", zeros);
  guarded(9, "popoviciu", popoviciu);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
