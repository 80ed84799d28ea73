#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "inscribe/experiments.hpp"
#include "inscribe/solver.hpp"

namespace inscribe {

// Bad user input (malformed file, invalid or non-disjoint curves). The CLI
// maps this to its invalid-input exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Curve files: {"type": "vertical", "alpha": x}
//              {"type": "fourier", "kmin": k, "coeffs": [[re, im], ...]}
//              {"type": "polyline", "samples": [[x, y], ...]}
// A pair file holds {"gamma1": {...}, "gamma2": {...}}.
PeriodicCurve curve_from_json_text(const std::string& text);
std::string curve_to_json_text(const PeriodicCurve& curve);

struct CurvePair {
  PeriodicCurve gamma1;
  PeriodicCurve gamma2;
};

// Parses and, by default, validates (embedded curves, disjoint images);
// validation failures throw InputError with a distinct reason.
CurvePair pair_from_json_text(const std::string& text, bool validate = true, double tol = 1e-6);
CurvePair load_pair_file(const std::string& path, bool validate = true, double tol = 1e-6);
std::string pair_to_json_text(const CurvePair& pair);

// Quad type files: {"vertices": [[x, y], [x, y], [x, y], [x, y]]}.
QuadSimilarityType quad_from_json_text(const std::string& text);
QuadSimilarityType load_quad_file(const std::string& path);

std::string inscriptions_to_json_text(const std::vector<Inscription>& inscriptions,
                                      const SolveDiagnostics& diagnostics);
std::vector<Inscription> inscriptions_from_json_text(const std::string& text);
std::string inscriptions_to_csv_text(const std::vector<Inscription>& inscriptions);

std::string sweep_report_to_json_text(const SweepReport& report);
std::string sweep_report_to_csv_text(const SweepReport& report);

std::string convergence_report_to_json_text(const ConvergenceReport& report);
std::string convergence_report_to_csv_text(const ConvergenceReport& report);

std::string conjecture_report_to_json_text(const ConjectureReport& report);
std::string conjecture_report_to_csv_text(const ConjectureReport& report);

// Partial overrides: only keys present in the JSON are applied.
SolveConfig config_from_json_text(const std::string& text, SolveConfig base = {});
SolveConfig load_config_file(const std::string& path, SolveConfig base = {});

}  // namespace inscribe
