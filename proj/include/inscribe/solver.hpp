#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inscribe/system.hpp"

namespace inscribe {

struct SolveConfig {
  int grid_per_unit = 12;          // seed density per unit parameter (4D grid)
  double newton_tol = 1e-10;       // residual norm declaring convergence
  int newton_max_iter = 50;
  double dedup_tol = 1e-6;         // parameter distance identifying solutions
  double max_param_window = 0.0;   // half-width M of the (t2,t3,t4) window
                                   // around t1; 0 derives it from the bound
  int scan_per_unit = 192;         // density of the (t1,t3) candidate scan
  double degenerate_tol = 1e-8;    // min singular value declaring a family
  bool use_grid_seeding = false;   // full 4D grid seeds instead of the scan

  void validate() const;
};

// A solved balanced inscription. `family` marks representatives of clean
// one-parameter solution families (singular Jacobian along the family).
struct Inscription {
  InscriptionParams params;  // canonical, t1 in [0, 1)
  Complex z, w;
  std::array<Complex, 4> vertices{};
  double residual_norm = 0.0;
  double jac_min_singular_value = 0.0;
  bool family = false;
  int family_samples = 0;    // refined zeros merged into this family
  double family_span = 0.0;  // parameter extent covered by those zeros
};

// Compactness bound: every (z, w) with z, z + c w, z + c e^{i theta} w inside
// [-N, N] x R satisfies ||w|| < b. The returned constant is sharp.
double w_bound(double N, double c, double theta);

// Uniform seeds: t1 over [0, 1), t2/t3/t4 over [t1 - M, t1 + M], at
// grid_per_unit points per unit along each axis.
std::vector<InscriptionParams> seed_grid(const PeriodicCurve& g1, const PeriodicCurve& g2,
                                         const TrapezoidType& type, const SolveConfig& config);

struct RefineOutcome {
  std::optional<Inscription> inscription;
  std::string failure;  // set when refinement did not converge
  int iterations = 0;
};

// Damped (Armijo-backtracked) Newton on the residual, with a truncated-SVD
// step so clean families are handled like ordinary zeros.
RefineOutcome newton_refine(const PeriodicCurve& g1, const PeriodicCurve& g2,
                            const ResidualMap& map, const InscriptionParams& seed,
                            const SolveConfig& config);
RefineOutcome newton_refine(const PeriodicCurve& g1, const PeriodicCurve& g2,
                            const TrapezoidType& type, const InscriptionParams& seed,
                            const SolveConfig& config);

struct SolveDiagnostics {
  double strip_halfwidth = 0.0;
  double w_max = 0.0;            // a priori bound on ||w|| used for the window
  double window_halfwidth = 0.0; // M
  long seeds = 0;
  long converged = 0;
  long bound_violations = 0;     // inscriptions exceeding the w bound (never expected)
  bool theorem_violation = false;  // no inscription found on a valid pair
};

struct SolveResult {
  std::vector<Inscription> inscriptions;  // deduplicated, sorted by t1
  SolveDiagnostics diagnostics;
};

// All zeros of the residual system modulo translation: candidate scan over
// the reduced (t1, t3) system, Newton refinement, dedup, family clustering.
SolveResult solve_all(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                      const SolveConfig& config = {});
SolveResult solve_all(const PeriodicCurve& g1, const PeriodicCurve& g2, const TrapezoidType& type,
                      const SolveConfig& config = {});

// Curve pair moving smoothly with s in [0, 1].
struct CurveHomotopy {
  std::function<std::pair<PeriodicCurve, PeriodicCurve>(double)> at;
};

// Coefficient-wise linear interpolation between two smooth pairs.
CurveHomotopy linear_homotopy(const PeriodicCurve& g1_start, const PeriodicCurve& g2_start,
                              const PeriodicCurve& g1_end, const PeriodicCurve& g2_end);

struct TrackedPath {
  Inscription start;
  Inscription end;          // state at s_end
  double s_end = 0.0;       // 1.0 when tracking reached the far endpoint
  bool fold = false;        // near-singular Jacobian met along the path
  bool bound_alarm = false; // ||w|| approached the compactness bound
  std::string note;
  std::vector<std::pair<double, InscriptionParams>> samples;
};

// Predictor-corrector tracking of each start inscription through the
// homotopy. Paths that lose the corrector are truncated at the last good s.
std::vector<TrackedPath> continue_family(const CurveHomotopy& homotopy, const TrapezoidType& type,
                                         const std::vector<Inscription>& start, int steps,
                                         const SolveConfig& config = {});

// Closed-form inscription for two vertical lines x = alpha1, x = alpha2:
// z = (1-c) alpha1 + c alpha2 + s i, w = (alpha1 - alpha2)(1 - tan(theta/2) i).
Inscription vertical_line_solutions(double alpha1, double alpha2, const TrapezoidType& type,
                                    double s);

}  // namespace inscribe
