#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inscribe/solver.hpp"

namespace inscribe {

// Two Fourier curves around the vertical lines x = +/- separation/2 with
// random mode coefficients of total magnitude <= amplitude, validated
// embedded and disjoint (amplitude decays by 0.7 per retry, up to 100).
// Instances are a pure function of (seed, modes, amplitude, separation).
std::pair<PeriodicCurve, PeriodicCurve> random_pair(std::uint64_t seed, int modes,
                                                    double amplitude, double separation);

struct SweepCell {
  double c = 0.0;
  double theta = 0.0;
  int count = 0;             // deduplicated inscriptions (families count once)
  int transverse_count = 0;  // min singular value > 1e-6
  bool all_transverse = false;
  bool family_present = false;
  double min_residual = 0.0;
  double min_singular = 0.0;  // smallest Jacobian singular value over the cell
  bool solver_error = false;
  std::string error;
};

struct SweepReport {
  std::int64_t pair_seed = -1;  // caller-provided label, -1 when unknown
  double strip_halfwidth = 0.0;
  std::vector<double> c_values;
  std::vector<double> theta_values;
  std::vector<SweepCell> cells;  // row-major: index = ic * theta_values.size() + it

  const SweepCell& cell(std::size_t ic, std::size_t it) const {
    return cells[ic * theta_values.size() + it];
  }
};

// solve_all per (c, theta) cell; per-cell failures are recorded, never thrown.
SweepReport sweep(const PeriodicCurve& g1, const PeriodicCurve& g2,
                  const std::vector<double>& c_values, const std::vector<double>& theta_values,
                  const SolveConfig& config = {});

struct MollifyStage {
  double sigma = 0.0;
  int kmax = 0;
};

// sigma_n = 2^{-n} for n = 1..stages; kmax wide enough that the truncated
// tail is below the heat-kernel attenuation floor, capped at the polyline
// Nyquist limit.
std::vector<MollifyStage> default_schedule(int stages, int polyline_samples);

struct ConvergenceStage {
  MollifyStage stage;
  bool solved = false;
  std::string error;
  std::vector<Inscription> inscriptions;  // canonical diagonal height in [0,1)
};

struct MatchedLimit {
  std::vector<double> drifts;          // vertex-set distance between stages
  double final_drift = 0.0;
  bool cauchy = false;                 // drifts contract toward the end
  Inscription final_inscription;       // at the finest stage
  std::array<Complex, 4> limit_vertices{};  // sigma -> 0 extrapolation
  Classification limit_class;
};

struct ConvergenceReport {
  std::vector<ConvergenceStage> stages;
  std::vector<MatchedLimit> limits;   // one per finest-stage inscription
  bool theorem_violation = false;     // some stage produced no inscription
};

// Mollify the polyline pair per schedule, solve each stage, canonicalize by
// diagonal-intersection height, match inscriptions backward from the finest
// stage, and extrapolate the limiting quadrilateral.
ConvergenceReport converge(const PeriodicCurve& poly1, const PeriodicCurve& poly2,
                           const TrapezoidType& type, const std::vector<MollifyStage>& schedule,
                           const SolveConfig& config = {});

struct ConjectureTrial {
  std::uint64_t seed = 0;
  int count = 0;
  double min_residual = 0.0;
  bool solver_error = false;
  std::string error;
};

struct ConjectureReport {
  std::array<Complex, 4> reference{};
  int trials = 0;
  int zero_inscription_trials = 0;  // supporting evidence for the conjecture
  std::vector<ConjectureTrial> rows;
};

// Evidence gathering for non-trapezoid quadrilateral types over random
// pairs. Rejects isosceles-trapezoid types (those belong to sweep).
ConjectureReport conjecture_search(const QuadSimilarityType& qtype, int trials,
                                   const SolveConfig& config = {}, int modes = 4,
                                   double amplitude = 0.1, double separation = 1.0);

}  // namespace inscribe
