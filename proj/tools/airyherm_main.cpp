#include "airyherm/airyherm.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace airyherm;

namespace {

std::vector<double> parse_axis(const std::string& spec) {
  double lo = 0, hi = 0;
  int n = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1)
    throw CLI::ValidationError("--grid", "expected <min>:<max>:<count>");
  std::vector<double> v;
  if (n == 1) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < n; ++i)
    v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

// "<tmin>:<tmax>:<nt>,<xmin>:<xmax>:<nx>"
std::pair<std::vector<double>, std::vector<double>> parse_grid2(
    const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--grid",
                               "expected <t-axis>,<x-axis> with axes as "
                               "<min>:<max>:<count>");
  return {parse_axis(spec.substr(0, comma)), parse_axis(spec.substr(comma + 1))};
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open for writing: " << path << "\n";
    return false;
  }
  out << content;
  out.close();
  if (!out) {
    std::cerr << "write failed: " << path << "\n";
    return false;
  }
  return true;
}

void print_failure(const VerificationReport& rep) {
  if (const CaseResult* f = rep.first_failure()) {
    std::cerr << "first failing case: " << rep.suite << "/" << f->name
              << " metric=" << format_sig17(f->metric)
              << " tol=" << format_sig17(f->tol) << "\n";
  }
}

int finish_report(const VerificationReport& rep, const std::string& json_path) {
  std::cout << "suite " << rep.suite << ": " << rep.passed() << "/"
            << rep.total() << " passed\n";
  if (!json_path.empty() && !write_file(json_path, rep.to_json() + "\n"))
    return 1;
  if (!rep.all_pass()) {
    print_failure(rep);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and quadrature-based checks for lacunary Hermite "
               "generating functions, Airy-type kernels and higher-order "
               "heat equations"};
  app.require_subcommand(1);

  double quad_tol = 1e-10;
  bool quad_tol_from_flag = false;
  std::uint64_t seed = 12345;
  app.add_flag_callback("--version", [] {
    std::cout << "airyherm 1.0.0\n";
    std::exit(0);
  });
  app.add_option("--quad-tol", quad_tol,
                 "relative tolerance for quadrature panel doubling")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { quad_tol_from_flag = true; });
  app.add_option("--seed", seed, "seed for randomized property sweeps");

  // --- verify ---------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  int lac_order = 12, lac_points = 40;
  std::string json_path, grid_spec;
  double tol_override = -1.0;

  auto add_common = [&](CLI::App* cmd, bool with_tol = true) {
    cmd->add_option("--json", json_path, "write the suite report as JSON");
    if (with_tol)
      cmd->add_option("--tol", tol_override,
                      "override the suite tolerance (diagnostics)");
  };

  CLI::App* v_lac = verify->add_subcommand(
      "lacunary", "exact lacunary generating-function identity");
  v_lac->add_option("--order", lac_order, "truncation order in z")
      ->check(CLI::PositiveNumber);
  v_lac->add_option("--points", lac_points, "number of rational u points")
      ->check(CLI::PositiveNumber);
  add_common(v_lac, false);

  CLI::App* v_cube = verify->add_subcommand(
      "cube", "cube completion closed form of the cubic-phase integral");
  v_cube->add_option("--grid", grid_spec, "grid as tmin:tmax:nt,xmin:xmax:nx");
  add_common(v_cube);

  CLI::App* v_eq10 = verify->add_subcommand(
      "eq10", "time-scaled cube completion closed form");
  add_common(v_eq10);
  CLI::App* v_scaling =
      verify->add_subcommand("scaling", "self-similar kernel scaling law");
  add_common(v_scaling);
  CLI::App* v_conv = verify->add_subcommand(
      "convolution", "Gaussian convolution factorization of kernels");
  add_common(v_conv);
  CLI::App* v_mom = verify->add_subcommand(
      "moments", "kernel moments against Gould-Hopper values");
  add_common(v_mom);
  CLI::App* v_gh = verify->add_subcommand(
      "gould-hopper", "exact Gould-Hopper PDE residuals");
  add_common(v_gh, false);
  CLI::App* v_omega = verify->add_subcommand(
      "omega", "derived heat polynomials: quadrature vs closed form");
  add_common(v_omega);
  CLI::App* v_airy = verify->add_subcommand(
      "airy", "dual-method Airy cross-check");
  add_common(v_airy);
  CLI::App* v_res = verify->add_subcommand(
      "residuals", "finite-difference PDE residual sweep");
  add_common(v_res);

  // --- duality ---------------------------------------------------------
  CLI::App* duality =
      app.add_subcommand("duality", "Gaussian-moment expansion scans");
  duality->require_subcommand(1);
  CLI::App* d_scan = duality->add_subcommand(
      "scan", "partial sums of the moment expansion vs convolution oracle");
  DualityScan scan_cfg;
  d_scan->add_option("--m", scan_cfg.m, "kernel order");
  d_scan->add_option("--tau", scan_cfg.tau, "Gaussian variance");
  d_scan->add_option("--t", scan_cfg.t, "kernel time");
  d_scan->add_option("--x", scan_cfg.x, "evaluation point");
  d_scan->add_option("--jmax", scan_cfg.j_max, "highest partial-sum index");
  d_scan->add_option("--json", json_path, "write the scan report as JSON");

  // --- eval ------------------------------------------------------------
  CLI::App* eval = app.add_subcommand("eval", "evaluate functions");
  eval->require_subcommand(1);
  std::vector<double> eval_xs;
  std::string csv_path;
  CLI::App* e_airy = eval->add_subcommand("airy", "Airy function Ai");
  e_airy->add_option("--x", eval_xs, "evaluation points");
  e_airy->add_option("--grid", grid_spec, "x grid as min:max:count");
  e_airy->add_option("--csv", csv_path, "write grid values as CSV");

  CLI::App* e_kernel = eval->add_subcommand(
      "kernel", "dispersive-diffusive kernel");
  double ek_a = -1.0 / 3.0, ek_s = 1.0, ek_t = 1.0;
  int ek_m = 3;
  e_kernel->add_option("--a", ek_a, "dispersion coefficient");
  e_kernel->add_option("--m", ek_m, "dispersion order");
  e_kernel->add_option("--s", ek_s, "diffusion coefficient");
  e_kernel->add_option("--t", ek_t, "time");
  e_kernel->add_option("--x", eval_xs, "evaluation points");
  e_kernel->add_option("--grid", grid_spec,
                       "grid as tmin:tmax:nt,xmin:xmax:nx");
  e_kernel->add_option("--csv", csv_path, "write grid values as CSV");

  // --- report ----------------------------------------------------------
  CLI::App* report = app.add_subcommand(
      "report", "run verification suites and write a combined JSON report");
  std::string report_json;
  std::vector<std::string> suite_filter;
  report->add_option("--json", report_json, "output path")->required();
  report->add_option("--suites", suite_filter,
                     "comma-separated suite names (default: all)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!quad_tol_from_flag) {
    if (const char* env = std::getenv("AIRYHERM_QUAD_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0)) {
        std::cerr << "invalid AIRYHERM_QUAD_TOL: " << env << "\n";
        return 2;
      }
      quad_tol = v;
    }
  }

  SuiteOptions opt;
  opt.quad.rel_tol = quad_tol;
  opt.seed = seed;
  opt.tol_override = tol_override;

  try {
    if (v_lac->parsed())
      return finish_report(suite_lacunary(lac_order, lac_points), json_path);
    if (v_cube->parsed()) {
      std::vector<double> ts, xs;
      if (!grid_spec.empty()) std::tie(ts, xs) = parse_grid2(grid_spec);
      return finish_report(suite_cube(opt, ts, xs), json_path);
    }
    if (v_eq10->parsed()) return finish_report(suite_eq10(opt), json_path);
    if (v_scaling->parsed())
      return finish_report(suite_scaling(opt), json_path);
    if (v_conv->parsed())
      return finish_report(suite_convolution(opt), json_path);
    if (v_mom->parsed()) return finish_report(suite_moments(opt), json_path);
    if (v_gh->parsed())
      return finish_report(suite_gould_hopper(), json_path);
    if (v_omega->parsed()) return finish_report(suite_omega(opt), json_path);
    if (v_airy->parsed()) return finish_report(suite_airy(opt), json_path);
    if (v_res->parsed())
      return finish_report(suite_residuals(opt), json_path);

    if (d_scan->parsed()) {
      const DualityScan scan = duality_partial_sums(scan_cfg, opt.quad);
      std::cout << "oracle " << format_sig17(scan.oracle) << "\n";
      for (int j = 0; j <= scan.j_max; ++j)
        std::cout << "J=" << j << " partial_sum "
                  << format_sig17(scan.partial_sums[j]) << " abs_error "
                  << format_sig17(scan.errors[j]) << "\n";
      std::cout << "optimal truncation index " << scan.optimal_index << "\n";
      if (!json_path.empty()) {
        VerificationReport rep;
        rep.suite = "duality-scan";
        rep.add(detail::duality_case("duality_scan", scan,
                                     scan.errors[scan.optimal_index],
                                     std::abs(scan.oracle), 1e9));
        if (!write_file(json_path, rep.to_json() + "\n")) return 1;
      }
      return 0;
    }

    if (e_airy->parsed()) {
      for (double x : eval_xs)
        std::cout << format_sig10(airy(x, opt.quad)) << "\n";
      if (!grid_spec.empty()) {
        std::vector<GridRow> rows;
        for (double x : parse_axis(grid_spec))
          rows.push_back({0.0, x, airy(x, opt.quad)});
        const std::string csv = grid_to_csv(rows);
        if (csv_path.empty())
          std::cout << csv;
        else if (!write_file(csv_path, csv))
          return 1;
      }
      return 0;
    }

    if (e_kernel->parsed()) {
      auto value = [&](double t, double x) {
        const KernelParams p(ek_a, ek_m, ek_s, t);
        return airy_heat(p, x, opt.quad);
      };
      for (double x : eval_xs)
        std::cout << format_sig10(value(ek_t, x)) << "\n";
      if (!grid_spec.empty()) {
        const auto [ts, xs] = parse_grid2(grid_spec);
        std::vector<GridRow> rows;
        for (double t : ts)
          for (double x : xs)
            rows.push_back({t, x, value(t, x)});
        const std::string csv = grid_to_csv(rows);
        if (csv_path.empty())
          std::cout << csv;
        else if (!write_file(csv_path, csv))
          return 1;
      }
      return 0;
    }

    if (report->parsed()) {
      std::vector<std::string> names =
          suite_filter.empty() ? all_suite_names() : suite_filter;
      std::vector<VerificationReport> reports;
      bool ok = true;
      for (const std::string& name : names) {
        VerificationReport rep = run_suite(name, opt);
        std::cout << "suite " << rep.suite << ": " << rep.passed() << "/"
                  << rep.total() << " passed\n";
        if (!rep.all_pass()) {
          if (ok) print_failure(rep);
          ok = false;
        }
        reports.push_back(std::move(rep));
      }
      if (!write_file(report_json, reports_to_json(reports) + "\n")) return 1;
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "no command executed\n";
  return 2;
}
