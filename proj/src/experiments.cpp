#include "inscribe/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inscribe/rng.hpp"

namespace inscribe {

namespace {

// Mode radius amplitude * 2^{-|k|-1}: the radii over k = +/-1.. sum to at
// most the amplitude, so the perturbation never exceeds it.
PeriodicCurve random_curve(SplitMix64& rng, int modes, double amplitude, double center) {
  std::vector<Complex> coeffs(2 * modes + 1, Complex(0, 0));
  coeffs[modes] = Complex(center, 0.0);
  for (int k = 1; k <= modes; ++k) {
    const double radius = amplitude * std::pow(2.0, -k - 1);
    for (int sign = -1; sign <= 1; sign += 2) {
      const double r = radius * std::sqrt(rng.next_double());
      const double phi = kTau * rng.next_double();
      coeffs[modes + sign * k] = std::polar(r, phi);
    }
  }
  return PeriodicCurve::fourier_symmetric(std::move(coeffs));
}

InscriptionParams canonical_by_diag_height(const Inscription& ins, Complex z) {
  const int k = -static_cast<int>(std::floor(z.imag()));
  return translate(ins.params, k);
}

double vertex_set_distance(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

std::pair<PeriodicCurve, PeriodicCurve> random_pair(std::uint64_t seed, int modes,
                                                    double amplitude, double separation) {
  if (modes < 1) throw std::invalid_argument("random_pair: modes must be >= 1");
  if (!(amplitude >= 0.0) || !(separation > 0.0))
    throw std::invalid_argument("random_pair: bad amplitude or separation");
  if (!(amplitude < separation / 2))
    throw std::invalid_argument("random_pair: amplitude must be below separation/2");

  SplitMix64 rng(seed);
  double amp = amplitude;
  for (int attempt = 0; attempt < 100; ++attempt, amp *= 0.7) {
    PeriodicCurve c1 = random_curve(rng, modes, amp, -separation / 2);
    PeriodicCurve c2 = random_curve(rng, modes, amp, separation / 2);
    if (is_embedded(c1, 1e-6) && is_embedded(c2, 1e-6) && is_disjoint(c1, c2, 1e-6))
      return {std::move(c1), std::move(c2)};
  }
  throw std::runtime_error("random_pair: no valid pair after 100 retries");
}

SweepReport sweep(const PeriodicCurve& g1, const PeriodicCurve& g2,
                  const std::vector<double>& c_values, const std::vector<double>& theta_values,
                  const SolveConfig& config) {
  SweepReport report;
  report.strip_halfwidth = std::max(g1.strip_halfwidth(), g2.strip_halfwidth());
  report.c_values = c_values;
  report.theta_values = theta_values;
  report.cells.resize(c_values.size() * theta_values.size());

  for (std::size_t ic = 0; ic < c_values.size(); ++ic) {
    for (std::size_t it = 0; it < theta_values.size(); ++it) {
      SweepCell& cell = report.cells[ic * theta_values.size() + it];
      cell.c = c_values[ic];
      cell.theta = theta_values[it];
      try {
        const SolveResult res = solve_all(g1, g2, TrapezoidType{cell.c, cell.theta}, config);
        cell.count = static_cast<int>(res.inscriptions.size());
        cell.min_residual = 0.0;
        cell.min_singular = 0.0;
        bool first = true;
        for (const auto& ins : res.inscriptions) {
          if (first || ins.residual_norm < cell.min_residual)
            cell.min_residual = ins.residual_norm;
          if (first || ins.jac_min_singular_value < cell.min_singular)
            cell.min_singular = ins.jac_min_singular_value;
          first = false;
          if (ins.family) cell.family_present = true;
          if (ins.jac_min_singular_value > 1e-6) ++cell.transverse_count;
        }
        cell.all_transverse = cell.count > 0 && cell.transverse_count == cell.count;
      } catch (const std::exception& e) {
        cell.solver_error = true;
        cell.error = e.what();
      }
    }
  }
  return report;
}

std::vector<MollifyStage> default_schedule(int stages, int polyline_samples) {
  if (stages < 1) throw std::invalid_argument("schedule: stages must be >= 1");
  std::vector<MollifyStage> schedule;
  for (int n = 1; n <= stages; ++n) {
    const double sigma = std::pow(2.0, -n);
    // Modes beyond ~1.2/sigma are attenuated below 1e-12 by the heat kernel.
    const int kmax = std::clamp(static_cast<int>(std::ceil(1.2 / sigma)) + 8, 9,
                                std::max(9, polyline_samples / 2));
    schedule.push_back({sigma, kmax});
  }
  return schedule;
}

ConvergenceReport converge(const PeriodicCurve& poly1, const PeriodicCurve& poly2,
                           const TrapezoidType& type, const std::vector<MollifyStage>& schedule,
                           const SolveConfig& config) {
  type.validate();
  if (schedule.empty()) throw std::invalid_argument("converge: empty schedule");

  const ResidualMap map = ResidualMap::from_trapezoid(type);
  ConvergenceReport report;
  report.stages.reserve(schedule.size());

  for (const MollifyStage& st : schedule) {
    ConvergenceStage stage;
    stage.stage = st;
    try {
      const PeriodicCurve s1 = mollify(poly1, st.sigma, st.kmax);
      const PeriodicCurve s2 = mollify(poly2, st.sigma, st.kmax);
      if (!is_disjoint(s1, s2, 1e-9)) throw std::runtime_error("mollified pair not disjoint");
      if (!is_embedded(s1, 1e-9) || !is_embedded(s2, 1e-9))
        throw std::runtime_error("mollified curve not embedded");
      SolveResult res = solve_all(s1, s2, map, config);
      for (Inscription& ins : res.inscriptions) {
        // Re-anchor so the diagonal intersection height lies in [0, 1).
        const InscriptionParams p = canonical_by_diag_height(ins, ins.z);
        const auto geo = geometry_at(s1, s2, map, p);
        ins.params = p;
        ins.z = geo.z;
        ins.w = geo.w;
        ins.vertices = geo.vertices;
      }
      stage.inscriptions = std::move(res.inscriptions);
      stage.solved = true;
      if (stage.inscriptions.empty()) {
        stage.error = "no inscription found at this stage";
        report.theorem_violation = true;
      }
    } catch (const std::exception& e) {
      stage.error = e.what();
      report.theorem_violation = true;
    }
    report.stages.push_back(std::move(stage));
  }

  // Walk each finest-stage inscription backward through its nearest match.
  const std::size_t last = report.stages.size() - 1;
  for (const Inscription& fin : report.stages[last].inscriptions) {
    MatchedLimit limit;
    limit.final_inscription = fin;

    std::vector<const Inscription*> chain{&fin};
    std::vector<double> sigmas{schedule[last].sigma};
    for (std::size_t n = last; n-- > 0;) {
      if (!report.stages[n].solved || report.stages[n].inscriptions.empty()) break;
      const auto& pool = report.stages[n].inscriptions;
      const Inscription* best = nullptr;
      double best_d = 0.0;
      for (const Inscription& cand : pool) {
        const double d = vertex_set_distance(cand.vertices, chain.back()->vertices);
        if (!best || d < best_d) {
          best = &cand;
          best_d = d;
        }
      }
      if (!best || best_d > 10.0 * schedule[n].sigma) break;
      chain.push_back(best);
      sigmas.push_back(schedule[n].sigma);
    }

    for (std::size_t i = chain.size(); i-- > 1;)
      limit.drifts.push_back(vertex_set_distance(chain[i]->vertices, chain[i - 1]->vertices));
    if (!limit.drifts.empty()) {
      limit.final_drift = limit.drifts.back();
      limit.cauchy = limit.final_drift <= limit.drifts.front() + 1e-15;
      for (std::size_t i = 1; i < limit.drifts.size(); ++i)
        if (limit.drifts[i] > 2.0 * limit.drifts[i - 1]) limit.cauchy = false;
    }

    limit.limit_vertices = fin.vertices;
    if (chain.size() >= 2) {
      // v(sigma) = v0 + a sigma^2 + ...; eliminate the leading term.
      const double s1 = sigmas[0], s0 = sigmas[1];
      const double factor = s1 * s1 / (s0 * s0 - s1 * s1);
      for (int i = 0; i < 4; ++i)
        limit.limit_vertices[i] =
            fin.vertices[i] + factor * (fin.vertices[i] - chain[1]->vertices[i]);
    }
    limit.limit_class = classify_quad(limit.limit_vertices[0], limit.limit_vertices[1],
                                      limit.limit_vertices[2], limit.limit_vertices[3], 1e-5);
    report.limits.push_back(std::move(limit));
  }
  return report;
}

ConjectureReport conjecture_search(const QuadSimilarityType& qtype, int trials,
                                   const SolveConfig& config, int modes, double amplitude,
                                   double separation) {
  if (trials < 1) throw std::invalid_argument("conjecture_search: trials must be >= 1");
  const auto& q = qtype.vertices();
  if (classify_quad(q[0], q[1], q[2], q[3], 1e-9).ok)
    throw std::invalid_argument(
        "conjecture_search: type is an isosceles trapezoid; use the sweep instead");

  const ResidualMap map = ResidualMap::from_quad(qtype);
  ConjectureReport report;
  report.reference = q;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    ConjectureTrial row;
    row.seed = static_cast<std::uint64_t>(t) + 1;
    try {
      const auto [g1, g2] = random_pair(row.seed, modes, amplitude, separation);
      const SolveResult res = solve_all(g1, g2, map, config);
      row.count = static_cast<int>(res.inscriptions.size());
      row.min_residual = 0.0;
      for (std::size_t i = 0; i < res.inscriptions.size(); ++i)
        if (i == 0 || res.inscriptions[i].residual_norm < row.min_residual)
          row.min_residual = res.inscriptions[i].residual_norm;
      if (row.count == 0) ++report.zero_inscription_trials;
    } catch (const std::exception& e) {
      row.solver_error = true;
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace inscribe
