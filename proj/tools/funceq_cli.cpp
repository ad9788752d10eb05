// funceq: command-line front end.
//
// Every subcommand validates its input, computes, and only then writes. With
// --out the result goes to a temporary file that is renamed into place, so a
// failed run never leaves a partial file behind.
//
// Exit codes: 0 ok, 2 bad input, 3 domain violation, 4 non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "funceq/funceq.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_domain = 3;
constexpr int exit_convergence = 4;

constexpr std::uint64_t default_seed = 20240917;

int exit_code_for(funceq::errc c) {
  using funceq::errc;
  switch (c) {
    case errc::interpolation_violated:
    case errc::domain_mismatch:
    case errc::out_of_coverage:
    case errc::coverage_budget_exceeded:
    case errc::degenerate_step:
    case errc::boundary_zero:
      return exit_domain;
    case errc::non_convergence:
    case errc::internal_inconsistency:
      return exit_convergence;
    default:
      return exit_input;
  }
}

// Thrown for malformed command-line or file input that never reaches the library.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// nlohmann's own dump prints the shortest round-trip form; we want a fixed
// 17 significant digits, so floats are written by hand.
void dump(const json& j, std::string& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(j[i], out, indent + 2);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += fmt(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string to_text(const json& j) {
  std::string s;
  dump(j, s);
  s += '\n';
  return s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw input_error("cannot open " + tmp.string() + " for writing");
    os << text;
    os.flush();
    if (!os) {
      std::filesystem::remove(tmp);
      throw input_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, target);
}

json read_json_arg(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    text = arg;
  } else {
    std::ifstream is(arg);
    if (!is) throw input_error("cannot read " + arg);
    std::stringstream ss;
    ss << is.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("invalid JSON in " + arg + ": " + e.what());
  }
}

std::vector<double> number_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be a JSON array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw input_error(what + " must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<double> read_numbers(const std::string& arg, const std::string& what) {
  return number_array(read_json_arg(arg), what);
}

funceq::PiecewiseLinear read_boundary(const std::string& arg, const funceq::ShiftVector& b) {
  if (arg == "tent") return funceq::tent_boundary(b);
  const json j = read_json_arg(arg);
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
    throw input_error("boundary data must be an object with \"breakpoints\" and \"values\"");
  }
  return funceq::PiecewiseLinear(number_array(j["breakpoints"], "breakpoints"),
                                 number_array(j["values"], "values"));
}

std::vector<double> grid(double lo, double hi, std::size_t n) {
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

void require_range(const std::vector<double>& r, const char* name) {
  if (r.size() != 2 || !std::isfinite(r[0]) || !std::isfinite(r[1]) || !(r[1] > r[0])) {
    throw input_error(std::string(name) + " needs two finite values lo < hi");
  }
}

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = default_seed;
  std::string out;
};

// Shifts come either directly or as dilation factors (b_k = ln a_k after normalizing).
struct ShiftSource {
  std::string shifts;
  std::string coeffs;

  std::vector<double> raw() const {
    if (!shifts.empty() && !coeffs.empty()) throw input_error("give either --shifts or --coeffs, not both");
    if (!coeffs.empty()) {
      const auto a = funceq::normalize(read_numbers(coeffs, "coefficients"));
      const auto b = funceq::to_additive(a);
      return {b.begin(), b.end()};
    }
    if (shifts.empty()) throw input_error("--shifts or --coeffs is required");
    return read_numbers(shifts, "shifts");
  }

  funceq::ShiftVector strict() const { return funceq::ShiftVector(raw()); }

  void attach(CLI::App* app) {
    app->add_option("--shifts", shifts, "shift vector b: JSON array or file");
    app->add_option("--coeffs", coeffs, "dilation factors a: JSON array or file");
  }
};

funceq::ExtendedSolution build_solution(const std::string& boundary, const funceq::ShiftVector& b,
                                        double lo, double hi, const Globals& g) {
  auto data = read_boundary(boundary, b);
  const double tol = g.tol.value_or(funceq::default_interpolation_tol);
  // Cover one extra b_N on the right so every sample has a full residual stencil.
  return funceq::extend(std::move(data), b, {std::min(lo, 0.0), std::max(hi, b.largest()) + b.largest()},
                        tol);
}

json regularity_json(const funceq::RegularityIndex& r) {
  json j;
  j["m"] = r.m;
  j["contraction"] = r.contraction;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  return j;
}

std::vector<double> sample_points(const std::vector<double>& range, std::size_t samples,
                                  const std::string& points) {
  if (!points.empty()) {
    auto p = read_numbers(points, "points");
    for (double x : p) {
      if (!std::isfinite(x)) throw input_error("points must be finite");
    }
    return p;
  }
  require_range(range, "--range");
  if (samples < 1) throw input_error("--samples must be at least 1");
  return grid(range[0], range[1], samples);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solutions of f(x) + f(a_1 x) + ... + f(a_N x) = 0 and its additive form"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  Globals globals;
  app.add_option("--tol", globals.tol, "tolerance (meaning depends on the subcommand)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "seed for random sampling")->capture_default_str();
  app.add_option("--out", globals.out, "output file (default stdout)");

  std::string text;  // the whole output, written only after success
  std::string side_path, side_text;

  // regularity
  std::string reg_coeffs;
  auto* reg = app.add_subcommand("regularity", "regularity index m(a) with its bracketing bounds");
  reg->add_option("coeffs", reg_coeffs, "JSON array or file")->required();
  reg->callback([&] {
    const auto a = funceq::normalize(read_numbers(reg_coeffs, "coefficients"));
    text = to_text(regularity_json(funceq::regularity_index(a)));
  });

  // normalize
  std::string norm_coeffs;
  auto* norm = app.add_subcommand("normalize", "relabel factors as 1 < a_1 < ... < a_N, with b = ln a");
  norm->add_option("coeffs", norm_coeffs, "JSON array or file")->required();
  norm->callback([&] {
    const auto a = funceq::normalize(read_numbers(norm_coeffs, "coefficients"));
    const auto b = funceq::to_additive(a);
    json j;
    j["coefficients"] = std::vector<double>(a.begin(), a.end());
    j["shifts"] = std::vector<double>(b.begin(), b.end());
    text = to_text(j);
  });

  // extend
  ShiftSource ext_src;
  std::string ext_boundary, ext_points;
  std::vector<double> ext_range;
  std::size_t ext_samples = 1000;
  auto* ext = app.add_subcommand("extend", "extend boundary data on [0, b_N] and sample it as CSV w,value");
  ext_src.attach(ext);
  ext->add_option("--boundary", ext_boundary, "{\"breakpoints\":[...],\"values\":[...]} file or 'tent'")
      ->required();
  ext->add_option("--range", ext_range, "lo hi")->expected(2);
  ext->add_option("--samples", ext_samples, "equispaced samples including both ends")->capture_default_str();
  ext->add_option("--points", ext_points, "explicit sample points, JSON array or file");
  ext->callback([&] {
    const auto b = ext_src.strict();
    const auto pts = sample_points(ext_range, ext_samples, ext_points);
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    const auto sol = build_solution(ext_boundary, b, *lo, *hi, globals);
    std::string csv = "w,value\n";
    for (double w : pts) csv += fmt(w) + "," + fmt(sol(w)) + "\n";
    const double res = funceq::residual_additive(sol, b, pts);
    text = std::move(csv);
    std::cerr << "interpolation_residual " << fmt(sol.interpolation_residual()) << "\n"
              << "additive_residual " << fmt(res) << "\n";
  });

  // residual
  ShiftSource res_src;
  std::string res_boundary;
  std::vector<double> res_range;
  std::size_t res_samples = 10000;
  bool res_random = false;
  auto* resid = app.add_subcommand("residual", "equation residual of the extended solution");
  res_src.attach(resid);
  resid->add_option("--boundary", res_boundary, "boundary data file or 'tent'")->required();
  resid->add_option("--range", res_range, "lo hi")->expected(2)->required();
  resid->add_option("--samples", res_samples, "number of sample points")->capture_default_str();
  resid->add_flag("--random", res_random, "uniform random points (uses --seed) instead of a grid");
  resid->callback([&] {
    const bool multiplicative = !res_src.coeffs.empty();
    const auto b = res_src.strict();
    require_range(res_range, "--range");
    if (res_samples < 1) throw input_error("--samples must be at least 1");
    std::vector<double> pts;
    if (res_random) {
      std::mt19937_64 rng(globals.seed);
      std::uniform_real_distribution<double> u(res_range[0], res_range[1]);
      pts.resize(res_samples);
      for (double& w : pts) w = u(rng);
    } else {
      pts = grid(res_range[0], res_range[1], res_samples);
    }
    const auto sol = build_solution(res_boundary, b, res_range[0], res_range[1], globals);
    json j;
    j["interpolation_residual"] = sol.interpolation_residual();
    j["additive_residual"] = funceq::residual_additive(sol, b, pts);
    if (multiplicative) {
      // f(x) = g(ln x) solves the dilation equation.
      const auto a = funceq::normalize(read_numbers(res_src.coeffs, "coefficients"));
      std::vector<double> xs(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) xs[i] = std::exp(pts[i]);
      j["multiplicative_residual"] =
          funceq::residual_multiplicative([&](double x) { return sol(std::log(x)); }, a, xs);
    } else {
      j["multiplicative_residual"] = nullptr;
    }
    j["samples"] = pts.size();
    j["covered"] = {sol.covered().lo, sol.covered().hi};
    text = to_text(j);
  });

  // periodicity
  ShiftSource per_src;
  double per_alpha_max = 0.0;
  std::optional<double> per_step;
  bool per_summary = false;
  auto* per = app.add_subcommand("periodicity", "frequencies alpha with a periodic cos(alpha w) solution");
  per_src.attach(per);
  per->add_option("--alpha-max", per_alpha_max, "scan (0, alpha_max]")->required();
  per->add_option("--step", per_step, "grid step (default min(pi/(8 b_N), alpha_max/1e4))");
  per->add_flag("--summary", per_summary, "wrap the certificates with the minimum residual found");
  per->callback([&] {
    const auto b = per_src.raw();
    const double step = per_step ? *per_step : funceq::default_grid_step(b, per_alpha_max);
    const auto scan = funceq::scan_periodic_alphas(b, per_alpha_max, step,
                                                   globals.tol.value_or(funceq::default_periodicity_tol));
    json certs = json::array();
    for (const auto& c : scan.certificates) {
      json e;
      e["alpha"] = c.alpha;
      e["period"] = c.period;
      e["residual"] = c.system_residual;
      certs.push_back(e);
    }
    if (per_summary) {
      json j;
      j["certificates"] = certs;
      j["min_residual"] = scan.min_residual;
      j["argmin_alpha"] = scan.argmin_alpha;
      text = to_text(j);
    } else {
      text = to_text(certs);
    }
  });

  // equispaced
  int eq_n = 0, eq_m_max = 0;
  double eq_d = 0.0;
  auto* eq = app.add_subcommand("equispaced", "closed-form frequencies for b = (d, 2d, ..., Nd)");
  eq->add_option("--n", eq_n, "N")->required();
  eq->add_option("--d", eq_d, "spacing d")->required();
  eq->add_option("--m-max", eq_m_max, "largest m")->required();
  eq->callback([&] {
    json arr = json::array();
    for (double a : funceq::equispaced_alphas(eq_n, eq_d, eq_m_max)) {
      json e;
      e["alpha"] = a;
      e["period"] = 2.0 * std::numbers::pi / a;
      arr.push_back(e);
    }
    text = to_text(arr);
  });

  // two-term
  std::int64_t tt_p = 0, tt_q = 0;
  auto* tt = app.add_subcommand("two-term", "periodic solutions of g(x) + g(x + a) + g(x + b) = 0, a/b = p/q");
  tt->add_option("p", tt_p, "numerator")->required();
  tt->add_option("q", tt_q, "denominator")->required();
  tt->callback([&] {
    const auto v = funceq::two_term_periodic_exists(tt_p, tt_q);
    json j;
    j["exists"] = v.exists;
    if (v.witness) {
      j["witness"] = {v.witness->first, v.witness->second};
    } else {
      j["witness"] = nullptr;
    }
    text = to_text(j);
  });

  // fourier-matrix
  ShiftSource fm_src;
  int fm_k = 1;
  double fm_theta = 0.0;
  auto* fm = app.add_subcommand("fourier-matrix", "2x2 action of the equation on the k-th Fourier mode");
  fm_src.attach(fm);
  fm->add_option("--k", fm_k, "harmonic index")->capture_default_str();
  fm->add_option("--theta", fm_theta, "base frequency")->required();
  fm->callback([&] {
    const auto m = funceq::fourier_matrix(fm_k, fm_theta, fm_src.raw());
    json j;
    j["matrix"] = {{m.entries[0][0], m.entries[0][1]}, {m.entries[1][0], m.entries[1][1]}};
    j["det"] = m.det();
    text = to_text(j);
  });

  // zeros
  int z_n = 2;
  funceq::SearchRectangle rect;
  bool z_mirror = false;
  std::string z_grid_csv;
  auto* zs = app.add_subcommand("zeros", "zeros of G_N(z) = 1 + 2^z + ... + N^z in a rectangle");
  zs->add_option("--n", z_n, "N >= 2")->required();
  zs->add_option("--re-min", rect.re_min)->capture_default_str();
  zs->add_option("--re-max", rect.re_max)->capture_default_str();
  zs->add_option("--im-min", rect.im_min)->capture_default_str();
  zs->add_option("--im-max", rect.im_max)->capture_default_str();
  zs->add_option("--grid-re", rect.grid_re)->capture_default_str();
  zs->add_option("--grid-im", rect.grid_im)->capture_default_str();
  zs->add_flag("--mirror", z_mirror, "also list the conjugate zeros");
  zs->add_option("--grid-csv", z_grid_csv, "write |G_N| on the scan grid as CSV re,im,abs");
  zs->callback([&] {
    const auto res = funceq::find_zeros(z_n, rect);
    if (!res.complete) {
      throw funceq::error(funceq::errc::non_convergence,
                          "found " + std::to_string(res.zeros.size()) + " zeros but the winding count is " +
                              std::to_string(res.winding));
    }
    auto zeros = res.zeros;
    if (z_mirror) {
      for (const auto& z : res.zeros) {
        if (z.z.imag() != 0.0) zeros.push_back({std::conj(z.z), z.modulus_residual, z.n, z.iterations, {}});
      }
      std::sort(zeros.begin(), zeros.end(), [](const auto& a, const auto& b) {
        return a.z.imag() != b.z.imag() ? a.z.imag() < b.z.imag() : a.z.real() < b.z.real();
      });
    }
    json arr = json::array();
    for (const auto& z : zeros) {
      json e;
      e["re"] = z.z.real();
      e["im"] = z.z.imag();
      e["residual"] = z.modulus_residual;
      e["N"] = z.n;
      arr.push_back(e);
    }
    text = to_text(arr);
    if (!z_grid_csv.empty()) {
      side_path = z_grid_csv;
      side_text = "re,im,abs\n";
      for (const auto& s : funceq::scan_grid(funceq::ExpSum(z_n), rect)) {
        side_text += fmt(s.re) + "," + fmt(s.im) + "," + fmt(s.abs) + "\n";
      }
    }
  });

  // mora-solution
  int ms_n = 2;
  std::optional<double> ms_re, ms_im;
  std::optional<int> ms_index;
  std::vector<double> ms_range{-5.0, -0.01};
  std::size_t ms_samples = 1000;
  auto* ms = app.add_subcommand("mora-solution",
                                "sample x -> Re(|x|^alpha) (x < 0), 0 (x >= 0) for a zero alpha of G_N");
  ms->add_option("--n", ms_n, "N >= 2")->required();
  ms->add_option("--alpha-re", ms_re, "real part of alpha");
  ms->add_option("--alpha-im", ms_im, "imaginary part of alpha");
  ms->add_option("--zero-index", ms_index, "take the j-th zero (0-based) from the default rectangle");
  ms->add_option("--range", ms_range, "lo hi")->expected(2)->capture_default_str();
  ms->add_option("--samples", ms_samples)->capture_default_str();
  ms->callback([&] {
    require_range(ms_range, "--range");
    if (ms_samples < 1) throw input_error("--samples must be at least 1");
    funceq::complex alpha;
    if (ms_index) {
      if (ms_re || ms_im) throw input_error("give either --zero-index or --alpha-re/--alpha-im");
      const auto res = funceq::find_zeros(ms_n);
      if (*ms_index < 0 || static_cast<std::size_t>(*ms_index) >= res.zeros.size()) {
        throw input_error("zero index out of range: " + std::to_string(res.zeros.size()) + " zeros found");
      }
      alpha = res.zeros[static_cast<std::size_t>(*ms_index)].z;
    } else {
      if (!ms_re || !ms_im) throw input_error("--alpha-re and --alpha-im are required without --zero-index");
      alpha = {*ms_re, *ms_im};
    }
    const funceq::MoraSolution f(alpha, ms_n);
    const auto xs = grid(ms_range[0], ms_range[1], ms_samples);
    std::string csv = "x,value\n";
    for (double x : xs) csv += fmt(x) + "," + fmt(f(x)) + "\n";
    text = std::move(csv);
    std::cerr << "alpha " << fmt(alpha.real()) << " " << fmt(alpha.imag()) << "\n"
              << "gn_residual " << fmt(f.gn_residual()) << "\n"
              << "equation_residual " << fmt(funceq::residual_integer_equation(f, ms_n, xs)) << "\n";
  });

  // popoviciu
  ShiftSource pop_src;
  std::string pop_boundary;
  std::optional<double> pop_cos;
  std::optional<double> pop_x, pop_h;
  int pop_order = 2;
  std::size_t pop_random = 0;
  auto* pop = app.add_subcommand("popoviciu", "Hankel determinant det[f(x + (i+j)h)], i,j = 0..n");
  pop_src.attach(pop);
  pop->add_option("--boundary", pop_boundary, "extend this boundary data (file or 'tent')");
  pop->add_option("--cos", pop_cos, "use f(x) = cos(omega x) instead");
  pop->add_option("--n", pop_order, "order n")->capture_default_str();
  pop->add_option("--x", pop_x);
  pop->add_option("--step", pop_h, "step h");
  pop->add_option("--random", pop_random, "draw this many (x, h) pairs with --seed");
  pop->callback([&] {
    if (pop_order < 1) throw input_error("--n must be at least 1");
    if (pop_cos.has_value() == !pop_boundary.empty()) throw input_error("give exactly one of --boundary, --cos");
    if ((pop_random == 0) != (pop_x.has_value() && pop_h.has_value())) {
      throw input_error("give --x and --step, or --random");
    }
    std::optional<funceq::ExtendedSolution> sol;
    std::optional<funceq::ShiftVector> b;
    double x_lo = -5.0, x_hi = 5.0, h_max = 1.0;
    if (!pop_boundary.empty()) {
      b = pop_src.strict();
      x_lo = -b->largest();
      x_hi = 2.0 * b->largest();
      h_max = b->smallest();
      // Samples reach x + 2n h.
      double lo = x_lo, hi = x_hi + 2.0 * pop_order * h_max;
      if (pop_random == 0) {
        lo = std::min(*pop_x, *pop_x + 2.0 * pop_order * *pop_h);
        hi = std::max(*pop_x, *pop_x + 2.0 * pop_order * *pop_h);
      }
      sol.emplace(build_solution(pop_boundary, *b, lo, hi, globals));
    } else if (!std::isfinite(*pop_cos)) {
      throw input_error("--cos must be finite");
    }
    const auto f = [&](double x) { return sol ? (*sol)(x) : std::cos(*pop_cos * x); };
    json j;
    if (pop_random == 0) {
      j["determinant"] = funceq::popoviciu_determinant(f, *pop_x, *pop_h, pop_order);
    } else {
      std::mt19937_64 rng(globals.seed);
      std::uniform_real_distribution<double> ux(x_lo, x_hi), uh(0.05 * h_max, h_max);
      double worst = 0.0, best = INFINITY;
      for (std::size_t i = 0; i < pop_random; ++i) {
        const double x = ux(rng), h = uh(rng);
        const double d = std::abs(funceq::popoviciu_determinant(f, x, h, pop_order));
        worst = std::max(worst, d);
        best = std::min(best, d);
      }
      j["samples"] = pop_random;
      j["max_abs_determinant"] = worst;
      j["min_abs_determinant"] = best;
    }
    text = to_text(j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const funceq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (!side_path.empty()) emit(side_text, side_path);
    emit(text, globals.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_ok;
}
