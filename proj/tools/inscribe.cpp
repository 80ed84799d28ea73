#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "inscribe/experiments.hpp"
#include "inscribe/io.hpp"
#include "inscribe/render.hpp"
#include "inscribe/rng.hpp"
#include "inscribe/solver.hpp"

namespace {

using namespace inscribe;

constexpr int kExitSolutions = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitNumericalFailure = 4;

struct TypeFlags {
  double c = 0.5;
  double theta = 0.0;
  double theta_deg = 0.0;

  TrapezoidType resolve() const {
    double th = theta;
    if (theta_deg != 0.0) {
      if (theta != 0.0) throw InputError("give either --theta or --theta-deg, not both");
      th = theta_deg * kPi / 180.0;
    }
    if (th == 0.0) throw InputError("missing --theta (radians) or --theta-deg");
    TrapezoidType type{c, th};
    try {
      type.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return type;
  }
};

void add_type_flags(CLI::App* cmd, TypeFlags& flags) {
  cmd->add_option("--c", flags.c, "diagonal ratio parameter c in (0, 1/2]");
  cmd->add_option("--theta", flags.theta, "angle between diagonals, radians in (0, pi)");
  cmd->add_option("--theta-deg", flags.theta_deg, "angle between diagonals, degrees");
}

SolveConfig resolve_config(const std::string& config_path) {
  SolveConfig config;
  if (!config_path.empty()) config = load_config_file(config_path);
  return config;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!token.empty()) {
        try {
          values.push_back(std::stod(token));
        } catch (...) {
          throw InputError("bad grid value: " + token);
        }
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  if (values.empty()) throw InputError("empty grid list");
  return values;
}

void print_inscriptions(const SolveResult& result) {
  std::printf("found %zu inscription(s); window M=%.3f, seeds=%ld, converged=%ld\n",
              result.inscriptions.size(), result.diagnostics.window_halfwidth,
              result.diagnostics.seeds, result.diagnostics.converged);
  for (const auto& ins : result.inscriptions) {
    std::printf("  t=(%.9f, %.9f, %.9f, %.9f)  |r|=%.2e  sv_min=%.2e%s\n", ins.params.t1,
                ins.params.t2, ins.params.t3, ins.params.t4, ins.residual_norm,
                ins.jac_min_singular_value,
                ins.family ? "  [family]" : "");
    std::printf("    z=(%.9f, %.9f)  w=(%.9f, %.9f)\n", ins.z.real(), ins.z.imag(), ins.w.real(),
                ins.w.imag());
    if (ins.family)
      std::printf("    family: %d samples, span %.4f\n", ins.family_samples, ins.family_span);
  }
}

int cmd_solve(const std::string& pair_path, const TypeFlags& flags,
              const std::string& config_path, const std::string& out_json,
              const std::string& out_csv) {
  const CurvePair pair = load_pair_file(pair_path);
  const TrapezoidType type = flags.resolve();
  const SolveConfig config = resolve_config(config_path);

  const SolveResult result = solve_all(pair.gamma1, pair.gamma2, type, config);
  print_inscriptions(result);
  if (!out_json.empty())
    write_text_file(out_json, inscriptions_to_json_text(result.inscriptions, result.diagnostics));
  if (!out_csv.empty()) write_text_file(out_csv, inscriptions_to_csv_text(result.inscriptions));
  if (result.inscriptions.empty()) {
    std::fprintf(stderr,
                 "theorem-violation diagnostic: no inscription found on a valid pair "
                 "(existence is guaranteed; check tolerances)\n");
    return kExitNoSolution;
  }
  return kExitSolutions;
}

int cmd_sweep(const std::string& pair_path, const std::string& c_grid,
              const std::string& theta_grid, const std::string& theta_grid_deg,
              const std::string& config_path, const std::string& out_json,
              const std::string& out_csv) {
  const CurvePair pair = load_pair_file(pair_path);
  const SolveConfig config = resolve_config(config_path);
  const std::vector<double> c_values = parse_grid(c_grid);
  std::vector<double> theta_values;
  if (!theta_grid.empty()) {
    theta_values = parse_grid(theta_grid);
  } else if (!theta_grid_deg.empty()) {
    theta_values = parse_grid(theta_grid_deg);
    for (double& t : theta_values) t *= kPi / 180.0;
  } else {
    throw InputError("missing --theta-grid or --theta-grid-deg");
  }

  const SweepReport report = sweep(pair.gamma1, pair.gamma2, c_values, theta_values, config);
  write_text_file(out_json, sweep_report_to_json_text(report));
  write_text_file(out_csv, sweep_report_to_csv_text(report));

  int empty_cells = 0, error_cells = 0;
  for (const auto& cell : report.cells) {
    if (cell.solver_error) ++error_cells;
    if (cell.count == 0) ++empty_cells;
  }
  std::printf("sweep: %zu cells, %d empty, %d errors -> %s, %s\n", report.cells.size(),
              empty_cells, error_cells, out_json.c_str(), out_csv.c_str());
  return empty_cells == 0 && error_cells == 0 ? kExitSolutions : kExitNoSolution;
}

int cmd_render(const std::string& pair_path, const std::string& inscriptions_path,
               const std::string& out_svg, const RenderSpec& spec) {
  const CurvePair pair = load_pair_file(pair_path);
  std::vector<Inscription> inscriptions;
  if (!inscriptions_path.empty())
    inscriptions = inscriptions_from_json_text(read_text_file(inscriptions_path));
  write_text_file(out_svg, render_svg(pair.gamma1, pair.gamma2, inscriptions, spec));
  std::printf("wrote %s (%zu inscription overlays)\n", out_svg.c_str(), inscriptions.size());
  return kExitSolutions;
}

int cmd_converge(const std::string& pair_path, const TypeFlags& flags, int stages,
                 const std::string& config_path, const std::string& out_json,
                 const std::string& out_csv) {
  const CurvePair pair = load_pair_file(pair_path);
  const auto* p1 = std::get_if<Polyline>(&pair.gamma1.rep());
  const auto* p2 = std::get_if<Polyline>(&pair.gamma2.rep());
  if (!p1 || !p2) throw InputError("converge expects a polyline pair file");
  const TrapezoidType type = flags.resolve();
  const SolveConfig config = resolve_config(config_path);

  const int m = static_cast<int>(std::min(p1->samples.size(), p2->samples.size()));
  const ConvergenceReport report =
      converge(pair.gamma1, pair.gamma2, type, default_schedule(stages, m), config);
  write_text_file(out_json, convergence_report_to_json_text(report));
  write_text_file(out_csv, convergence_report_to_csv_text(report));

  for (std::size_t i = 0; i < report.stages.size(); ++i)
    std::printf("stage %zu: sigma=%.6f kmax=%d count=%zu%s%s\n", i, report.stages[i].stage.sigma,
                report.stages[i].stage.kmax, report.stages[i].inscriptions.size(),
                report.stages[i].error.empty() ? "" : " error=",
                report.stages[i].error.c_str());
  for (const auto& lim : report.limits)
    std::printf("limit: final_drift=%.3e cauchy=%d class=(c=%.6f, theta=%.6f, ok=%d)\n",
                lim.final_drift, lim.cauchy ? 1 : 0, lim.limit_class.c, lim.limit_class.theta,
                lim.limit_class.ok ? 1 : 0);
  return report.theorem_violation ? kExitNoSolution : kExitSolutions;
}

int cmd_conjecture(const std::string& quad_path, int trials, int modes, double amplitude,
                   double separation, const std::string& config_path, const std::string& out_json,
                   const std::string& out_csv) {
  const QuadSimilarityType qtype = load_quad_file(quad_path);
  const SolveConfig config = resolve_config(config_path);
  ConjectureReport report;
  try {
    report = conjecture_search(qtype, trials, config, modes, amplitude, separation);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_text_file(out_json, conjecture_report_to_json_text(report));
  write_text_file(out_csv, conjecture_report_to_csv_text(report));
  std::printf("conjecture: %d trials, %d with zero inscriptions -> %s, %s\n", report.trials,
              report.zero_inscription_trials, out_json.c_str(), out_csv.c_str());
  return kExitSolutions;
}

int cmd_selftest() {
  SplitMix64 rng(20240901u);
  int failures = 0;
  auto check = [&](bool ok, const char* name) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) ++failures;
  };

  bool residual_ok = true, z_ok = true, w_ok = true, classify_ok = true;
  for (int i = 0; i < 200; ++i) {
    const double a1 = rng.uniform(-3.0, 3.0);
    double a2 = rng.uniform(-3.0, 3.0);
    if (std::abs(a1 - a2) < 0.05) a2 += 0.5;
    const TrapezoidType type{rng.uniform(0.05, 0.5), rng.uniform(0.1, kPi - 0.1)};
    const double s = rng.uniform(-2.0, 2.0);
    const Inscription ins = vertical_line_solutions(a1, a2, type, s);
    residual_ok = residual_ok && ins.residual_norm < 1e-12;
    z_ok = z_ok && std::abs(ins.z.real() - ((1 - type.c) * a1 + type.c * a2)) < 1e-14;
    const Complex w_ref = (a1 - a2) * Complex(1.0, -std::tan(type.theta / 2));
    w_ok = w_ok && std::abs(ins.w - w_ref) < 1e-14;
    const auto cls =
        classify_quad(ins.vertices[0], ins.vertices[1], ins.vertices[2], ins.vertices[3]);
    classify_ok = classify_ok && cls.ok && std::abs(cls.c - type.c) < 1e-9 &&
                  std::abs(cls.theta - type.theta) < 1e-9 && cls.balanced;
  }
  check(residual_ok, "closed-form solutions have residual < 1e-12");
  check(z_ok, "z lies on the mixing line (1-c) a1 + c a2");
  check(w_ok, "w matches (a1 - a2)(1 - tan(theta/2) i)");
  check(classify_ok, "closed-form vertices classify back to (c, theta)");

  const PeriodicCurve line = PeriodicCurve::vertical(1.5);
  check(std::abs(flux(line) - 1.5) < 1e-15, "flux of a vertical line is its position");
  bool periodic_ok = true;
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(-5.0, 5.0);
    periodic_ok =
        periodic_ok && std::abs(line.eval(t + 1.0) - line.eval(t) - Complex(0, 1)) < 1e-12;
  }
  check(periodic_ok, "periodicity gamma(t+1) = gamma(t) + i");

  std::printf(failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? kExitSolutions : kExitNumericalFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced quadrilateral inscriptions in pairs of periodic plane curves"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "find all inscriptions of one trapezoid type");
  std::string pair_path, config_path, out_json, out_csv;
  TypeFlags solve_flags;
  solve_cmd->add_option("pair", pair_path, "pair JSON file")->required();
  add_type_flags(solve_cmd, solve_flags);
  solve_cmd->add_option("--config", config_path, "solver config JSON");
  solve_cmd->add_option("--out-json", out_json, "write inscriptions JSON here");
  solve_cmd->add_option("--out-csv", out_csv, "write inscriptions CSV here");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "solve over a (c, theta) grid");
  std::string sweep_pair, sweep_config, c_grid, theta_grid, theta_grid_deg;
  std::string sweep_json = "sweep.json", sweep_csv = "sweep.csv";
  sweep_cmd->add_option("pair", sweep_pair, "pair JSON file")->required();
  sweep_cmd->add_option("--c-grid", c_grid, "comma-separated c values")->required();
  sweep_cmd->add_option("--theta-grid", theta_grid, "comma-separated theta values (radians)");
  sweep_cmd->add_option("--theta-grid-deg", theta_grid_deg, "comma-separated theta values (degrees)");
  sweep_cmd->add_option("--config", sweep_config, "solver config JSON");
  sweep_cmd->add_option("--out-json", sweep_json, "sweep JSON output path");
  sweep_cmd->add_option("--out-csv", sweep_csv, "sweep CSV output path");

  // render
  auto* render_cmd = app.add_subcommand("render", "emit an SVG figure");
  std::string render_pair, render_inscriptions, render_out;
  RenderSpec spec;
  bool no_inscriptions = false, no_diagonals = false, no_labels = false;
  render_cmd->add_option("pair", render_pair, "pair JSON file")->required();
  render_cmd->add_option("inscriptions", render_inscriptions,
                         "inscriptions JSON (from solve); optional");
  render_cmd->add_option("out", render_out, "output SVG path")->required();
  render_cmd->add_option("--periods", spec.periods, "vertical periods to draw");
  render_cmd->add_option("--x-min", spec.x_min, "viewport x minimum");
  render_cmd->add_option("--x-max", spec.x_max, "viewport x maximum");
  render_cmd->add_option("--width", spec.width_px, "image width in pixels");
  render_cmd->add_flag("--no-inscriptions", no_inscriptions, "draw curves only");
  render_cmd->add_flag("--no-diagonals", no_diagonals, "skip dashed diagonals");
  render_cmd->add_flag("--no-labels", no_labels, "skip vertex labels");

  // converge
  auto* conv_cmd = app.add_subcommand("converge", "mollification ladder for a polyline pair");
  std::string conv_pair, conv_config;
  std::string conv_json = "converge.json", conv_csv = "converge.csv";
  TypeFlags conv_flags;
  int stages = 6;
  conv_cmd->add_option("pair", conv_pair, "polyline pair JSON file")->required();
  add_type_flags(conv_cmd, conv_flags);
  conv_cmd->add_option("--stages", stages, "mollification stages (sigma halves per stage)");
  conv_cmd->add_option("--config", conv_config, "solver config JSON");
  conv_cmd->add_option("--out-json", conv_json, "report JSON output path");
  conv_cmd->add_option("--out-csv", conv_csv, "report CSV output path");

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "evidence scan for a non-trapezoid type");
  std::string quad_path, conj_config;
  std::string conj_json = "conjecture.json", conj_csv = "conjecture.csv";
  int trials = 20, modes = 4;
  double amplitude = 0.1, separation = 1.0;
  conj_cmd->add_option("quad", quad_path, "quad type JSON file")->required();
  conj_cmd->add_option("--trials", trials, "number of random pairs");
  conj_cmd->add_option("--modes", modes, "Fourier modes per random curve");
  conj_cmd->add_option("--amplitude", amplitude, "perturbation amplitude");
  conj_cmd->add_option("--separation", separation, "base line separation");
  conj_cmd->add_option("--config", conj_config, "solver config JSON");
  conj_cmd->add_option("--out-json", conj_json, "report JSON output path");
  conj_cmd->add_option("--out-csv", conj_csv, "report CSV output path");

  // selftest
  app.add_subcommand("selftest", "run the closed-form vertical-line suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(pair_path, solve_flags, config_path, out_json, out_csv);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_pair, c_grid, theta_grid, theta_grid_deg, sweep_config, sweep_json,
                       sweep_csv);
    if (render_cmd->parsed()) {
      spec.draw_inscriptions = !no_inscriptions;
      spec.draw_diagonals = !no_diagonals;
      spec.label_vertices = !no_labels;
      return cmd_render(render_pair, render_inscriptions, render_out, spec);
    }
    if (conv_cmd->parsed())
      return cmd_converge(conv_pair, conv_flags, stages, conv_config, conv_json, conv_csv);
    if (conj_cmd->parsed())
      return cmd_conjecture(quad_path, trials, modes, amplitude, separation, conj_config,
                            conj_json, conj_csv);
    return cmd_selftest();
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumericalFailure;
  }
}
