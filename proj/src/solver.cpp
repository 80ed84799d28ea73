#include "inscribe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "inscribe/parallel.hpp"

namespace inscribe {

namespace {

double frac(double x) { return x - std::floor(x); }

// Max over the four parameters after the best integer translation; both
// arguments are expected in (or near) canonical form.
double param_distance(const InscriptionParams& a, const InscriptionParams& b) {
  double best = std::numeric_limits<double>::max();
  for (int k = -1; k <= 1; ++k) {
    double d = std::abs(a.t1 - b.t1 - k);
    d = std::max(d, std::abs(a.t2 - b.t2 - k));
    d = std::max(d, std::abs(a.t3 - b.t3 - k));
    d = std::max(d, std::abs(a.t4 - b.t4 - k));
    best = std::min(best, d);
  }
  return best;
}

// Fine curve samples bucketed by Im mod 1, for nearest-point queries against
// the curve image on the cylinder.
class CurveProjector {
public:
  CurveProjector(const PeriodicCurve& c, int fine, int buckets)
      : fine_(fine), nbuckets_(buckets), re_(fine), im_(fine) {
    std::vector<int> count(buckets, 0), key(fine);
    for (int a = 0; a < fine_; ++a) {
      const Complex p = c.eval(static_cast<double>(a) / fine_);
      re_[a] = p.real();
      im_[a] = p.imag();
      key[a] = static_cast<int>(frac(p.imag()) * buckets) % buckets;
      ++count[key[a]];
    }
    start_.assign(buckets + 1, 0);
    for (int b = 0; b < buckets; ++b) start_[b + 1] = start_[b] + count[b];
    items_.resize(fine_);
    std::vector<int> cursor(start_.begin(), start_.end() - 1);
    for (int a = 0; a < fine_; ++a) items_[cursor[key[a]]++] = a;
  }

  struct Hit {
    double dist = std::numeric_limits<double>::max();
    double t = 0.0;  // parameter with the integer shift applied
    bool valid = false;
  };

  // Nearest sampled curve point within cylinder distance `cap` of p.
  Hit nearest(Complex p, double cap) const {
    Hit hit;
    hit.dist = cap;
    const double px = p.real(), py = p.imag();
    const int b0 = static_cast<int>(frac(py) * nbuckets_) % nbuckets_;
    const int reach = std::min(nbuckets_ / 2,
                               static_cast<int>(std::ceil(cap * nbuckets_)) + 1);
    double best2 = cap * cap;
    for (int db = -reach; db <= reach; ++db) {
      const int b = ((b0 + db) % nbuckets_ + nbuckets_) % nbuckets_;
      for (int idx = start_[b]; idx < start_[b + 1]; ++idx) {
        const int a = items_[idx];
        const double dx = px - re_[a];
        const double dy = py - im_[a];
        const double k = std::round(dy);
        const double wy = dy - k;
        const double d2 = dx * dx + wy * wy;
        if (d2 < best2) {
          best2 = d2;
          hit.t = static_cast<double>(a) / fine_ + k;
          hit.valid = true;
        }
      }
    }
    if (hit.valid) hit.dist = std::sqrt(best2);
    return hit;
  }

private:
  int fine_, nbuckets_;
  std::vector<double> re_, im_;
  std::vector<int> start_, items_;
};

// Sharp a priori bound on ||w||: at a zero, w = p1 - p3 and p2 - p4 =
// (mu4 - mu2) w both have real part in [-2N, 2N].
double sharp_w_max(double N, const ResidualMap& map) {
  const Complex sigma = map.mu4 - map.mu2;
  const double mag = std::abs(sigma), ph = std::arg(sigma);
  auto spread = [&](double phi) {
    return std::max(std::abs(std::cos(phi)), mag * std::abs(std::cos(phi + ph)));
  };
  const int n = 1 << 14;
  double smin = spread(0.0);
  for (int i = 1; i < n; ++i) smin = std::min(smin, spread(kPi * i / n));
  smin -= std::max(1.0, mag) * kPi / n;  // Lipschitz slack of the grid minimum
  if (smin <= 1e-9)
    throw std::invalid_argument("solve: similarity type yields an unbounded search window");
  return 2.0 * N / smin;
}

// Half-width of the (t2, t3, t4) window around t1 that provably contains
// every zero: parameter offsets are bounded by vertex offsets plus drift.
double derive_window(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                     double w_max) {
  const double stretch = std::max({1.0, std::abs(map.mu2), std::abs(map.mu4)});
  const double drift = std::max(g1.drift_bound(), g2.drift_bound());
  return stretch * w_max + 2.0 * drift + 1.0;
}

struct ScanGrid {
  int n1 = 0, nu = 0;
  double h = 0.0, u0 = 0.0;
};

// Reduced (t1, t3) scan: for each grid cell predict p2, p4 from the first
// diagonal and measure their distance to the curves; cells that are local
// minima below the resolution threshold become Newton seeds.
std::vector<InscriptionParams> scan_candidates(const PeriodicCurve& g1, const PeriodicCurve& g2,
                                               const ResidualMap& map, const SolveConfig& config,
                                               double window, SolveDiagnostics& diag) {
  ScanGrid grid;
  grid.h = 1.0 / config.scan_per_unit;
  grid.n1 = config.scan_per_unit;
  const int half = static_cast<int>(std::ceil(window * config.scan_per_unit));
  grid.nu = 2 * half;
  grid.u0 = -static_cast<double>(half) * grid.h;

  std::vector<Complex> G1(grid.n1), G2(grid.n1 + grid.nu - 1);
  for (int i = 0; i < grid.n1; ++i) G1[i] = g1.eval(i * grid.h);
  for (int k = 0; k < static_cast<int>(G2.size()); ++k) G2[k] = g2.eval(grid.u0 + k * grid.h);

  const CurveProjector proj1(g1, 1024, 256);
  const CurveProjector proj2(g2, 1024, 256);

  const double L1 = g1.speed_bound(), L2 = g2.speed_bound();
  const double lip2 = std::abs(1.0 - map.mu2) * L1 + 2.0 * std::abs(map.mu2) * L2;
  const double lip4 = std::abs(1.0 - map.mu4) * L1 + 2.0 * std::abs(map.mu4) * L2;
  const double lip = std::max(lip2, lip4);
  const double threshold = 2.5 * lip * (grid.h * 0.5 * 1.4142135623730951) + 1e-9;
  const double cap = 1.25 * threshold + 1e-6;
  const double halfwidth1 = g1.strip_halfwidth(), halfwidth2 = g2.strip_halfwidth();

  std::vector<float> H(static_cast<std::size_t>(grid.n1) * grid.nu);
  parallel_for(grid.n1, [&](std::size_t i) {
    const Complex p1 = G1[i];
    for (int j = 0; j < grid.nu; ++j) {
      const Complex p3 = G2[i + j];
      const Complex d = p3 - p1;
      const Complex pred2 = p1 + map.mu2 * d;
      double value = cap;
      if (std::abs(pred2.real()) <= halfwidth1 + cap) {
        const double d2 = proj1.nearest(pred2, cap).dist;
        value = d2;
        if (d2 < threshold) {
          const Complex pred4 = p1 + map.mu4 * d;
          double d4 = cap;
          if (std::abs(pred4.real()) <= halfwidth2 + cap) d4 = proj2.nearest(pred4, cap).dist;
          value = std::max(d2, d4);
        }
      }
      H[i * grid.nu + j] = static_cast<float>(value);
    }
  });

  std::vector<InscriptionParams> seeds;
  auto at = [&](int i, int j) {
    return H[static_cast<std::size_t>(((i % grid.n1) + grid.n1) % grid.n1) * grid.nu + j];
  };
  for (int i = 0; i < grid.n1; ++i) {
    for (int j = 0; j < grid.nu; ++j) {
      const float h = H[static_cast<std::size_t>(i) * grid.nu + j];
      if (!(h < threshold)) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int jj = j + dj;
          if (jj < 0 || jj >= grid.nu) continue;
          if (at(i + di, jj) < h) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;
      const double t1 = i * grid.h;
      const double t3 = t1 + grid.u0 + j * grid.h;
      const Complex p1 = G1[i];
      const Complex d = G2[i + j] - p1;
      const auto hit2 = proj1.nearest(p1 + map.mu2 * d, cap);
      const auto hit4 = proj2.nearest(p1 + map.mu4 * d, cap);
      if (!hit2.valid || !hit4.valid) continue;
      seeds.push_back({t1, hit2.t, t3, hit4.t});
    }
  }
  diag.seeds = static_cast<long>(seeds.size());
  return seeds;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Group refined zeros lying within link_tol of each other; returns clusters
// of indices, deterministic in the input order.
std::vector<std::vector<int>> cluster_zeros(const std::vector<Inscription>& zeros,
                                            double link_tol) {
  const int n = static_cast<int>(zeros.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (param_distance(zeros[i].params, zeros[j].params) < link_tol) uf.unite(i, j);
  std::vector<std::vector<int>> clusters;
  std::vector<int> root_to_cluster(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    if (root_to_cluster[r] < 0) {
      root_to_cluster[r] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[root_to_cluster[r]].push_back(i);
  }
  return clusters;
}

int best_of(const std::vector<Inscription>& zeros, const std::vector<int>& cluster) {
  int best = cluster.front();
  for (int i : cluster) {
    const auto& a = zeros[i];
    const auto& b = zeros[best];
    if (a.residual_norm < b.residual_norm ||
        (a.residual_norm == b.residual_norm && a.params.t1 < b.params.t1))
      best = i;
  }
  return best;
}

}  // namespace

void SolveConfig::validate() const {
  if (grid_per_unit <= 0 || scan_per_unit <= 0 || newton_max_iter <= 0)
    throw std::invalid_argument("solve config: counts must be positive");
  if (!(newton_tol > 0.0) || !(dedup_tol > 0.0) || !(degenerate_tol > 0.0))
    throw std::invalid_argument("solve config: tolerances must be positive");
  if (!(newton_tol < dedup_tol))
    throw std::invalid_argument("solve config: newton_tol must be below dedup_tol");
  if (max_param_window < 0.0)
    throw std::invalid_argument("solve config: max_param_window must be >= 0");
}

double w_bound(double N, double c, double theta) {
  if (!(N > 0.0)) throw std::invalid_argument("w_bound: N must be positive");
  TrapezoidType{c, theta}.validate();
  return 2.0 * N * std::max(1.0, 2.0 * std::sin(theta / 2)) / (c * std::sin(theta));
}

std::vector<InscriptionParams> seed_grid(const PeriodicCurve& g1, const PeriodicCurve& g2,
                                         const TrapezoidType& type, const SolveConfig& config) {
  config.validate();
  type.validate();
  const double N = std::max(g1.strip_halfwidth(), g2.strip_halfwidth());
  double M = config.max_param_window;
  if (M <= 0.0)
    M = w_bound(N, type.c, type.theta) + 2.0 * std::max(g1.drift_bound(), g2.drift_bound()) + 1.0;

  const int n1 = config.grid_per_unit;
  const int nw = static_cast<int>(std::llround(2.0 * M * config.grid_per_unit));
  const double total = static_cast<double>(n1) * std::pow(static_cast<double>(nw), 3);
  if (total > static_cast<double>(1LL << 31))
    throw std::length_error("seed_grid: grid exceeds 2^31 seeds; restrict max_param_window");

  const double h = 1.0 / config.grid_per_unit;
  std::vector<InscriptionParams> seeds;
  seeds.reserve(static_cast<std::size_t>(total));
  for (int i = 0; i < n1; ++i) {
    const double t1 = i * h;
    for (int a = 0; a < nw; ++a)
      for (int b = 0; b < nw; ++b)
        for (int c = 0; c < nw; ++c)
          seeds.push_back({t1, t1 - M + a * h, t1 - M + b * h, t1 - M + c * h});
  }
  return seeds;
}

RefineOutcome newton_refine(const PeriodicCurve& g1, const PeriodicCurve& g2,
                            const ResidualMap& map, const InscriptionParams& seed,
                            const SolveConfig& config) {
  config.validate();
  RefineOutcome out;
  if (!g1.smooth() || !g2.smooth()) {
    out.failure = "newton: smooth curve representations required";
    return out;
  }

  Eigen::Vector4d x(seed.t1, seed.t2, seed.t3, seed.t4);
  auto params_at = [](const Eigen::Vector4d& v) {
    return InscriptionParams{v(0), v(1), v(2), v(3)};
  };
  ResidualValue rv = residual(g1, g2, map, params_at(x));
  double f = rv.norm();

  for (int it = 0;; ++it) {
    const Eigen::Matrix4d jac = jacobian(g1, g2, map, params_at(x));
    const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac,
                                                Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector4d sv = svd.singularValues();

    if (f < config.newton_tol) {
      const InscriptionParams p = canonical(params_at(x));
      const auto geo = geometry_at(g1, g2, map, p);
      out.inscription = Inscription{p, geo.z, geo.w, geo.vertices, f, sv(3)};
      out.iterations = it;
      return out;
    }
    if (it >= config.newton_max_iter) {
      out.failure = "newton: iteration cap reached";
      out.iterations = it;
      return out;
    }

    // Truncated-SVD Newton step; on singular Jacobians this moves only
    // against the ranged part of the residual.
    const Eigen::Vector4d rhs(rv.r[0], rv.r[1], rv.r[2], rv.r[3]);
    const Eigen::Vector4d uty = svd.matrixU().transpose() * rhs;
    Eigen::Vector4d step = Eigen::Vector4d::Zero();
    double ranged = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (sv(i) > 1e-12 * sv(0) && sv(i) > 0.0) {
        step -= (uty(i) / sv(i)) * svd.matrixV().col(i);
        ranged += uty(i) * uty(i);
      }
    }
    if (!(ranged > 1e-32 * f * f) || !step.allFinite()) {
      out.failure = "newton: residual orthogonal to Jacobian range";
      out.iterations = it;
      return out;
    }

    // Armijo backtracking on ||r||^2.
    const double alpha = 1e-4;
    double lambda = 1.0;
    Eigen::Vector4d xn;
    ResidualValue rvn;
    double fn = 0.0;
    for (;;) {
      xn = x + lambda * step;
      rvn = residual(g1, g2, map, params_at(xn));
      fn = rvn.norm();
      if (fn * fn <= f * f - 2.0 * alpha * lambda * ranged) break;
      lambda *= 0.5;
      if (lambda < 1e-10) {
        out.failure = "newton: line search stalled";
        out.iterations = it;
        return out;
      }
    }
    x = xn;
    rv = rvn;
    f = fn;
    if (!std::isfinite(f) || std::abs(x(0)) > 1e9) {
      out.failure = "newton: diverged";
      out.iterations = it;
      return out;
    }
  }
}

RefineOutcome newton_refine(const PeriodicCurve& g1, const PeriodicCurve& g2,
                            const TrapezoidType& type, const InscriptionParams& seed,
                            const SolveConfig& config) {
  return newton_refine(g1, g2, ResidualMap::from_trapezoid(type), seed, config);
}

SolveResult solve_all(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                      const SolveConfig& config) {
  config.validate();
  if (!g1.smooth() || !g2.smooth())
    throw std::invalid_argument("solve: smooth curve representations required");
  // Cheap overlap guard; full validation belongs to load time. Only rejects
  // when a probe proves the images come within 1e-6 of each other.
  if (min_distance(g1, g2, 1e-2, 1e-6, 1e-8).distance < 1e-6)
    throw std::invalid_argument("solve: curves not disjoint");

  SolveResult result;
  auto& diag = result.diagnostics;
  const double N = std::max(g1.strip_halfwidth(), g2.strip_halfwidth());
  diag.strip_halfwidth = N;
  diag.w_max = sharp_w_max(N, map);
  diag.window_halfwidth =
      config.max_param_window > 0.0 ? config.max_param_window
                                    : derive_window(g1, g2, map, diag.w_max);

  std::vector<InscriptionParams> seeds;
  if (config.use_grid_seeding) {
    const double h = 1.0 / config.grid_per_unit;
    const double M = diag.window_halfwidth;
    const int n1 = config.grid_per_unit;
    const int nw = static_cast<int>(std::llround(2.0 * M * config.grid_per_unit));
    if (static_cast<double>(n1) * std::pow(static_cast<double>(nw), 3) > 5e7)
      throw std::length_error("solve: 4D grid seeding too large; use the reduced scan");
    for (int i = 0; i < n1; ++i)
      for (int a = 0; a < nw; ++a)
        for (int b = 0; b < nw; ++b)
          for (int c = 0; c < nw; ++c)
            seeds.push_back({i * h, i * h - M + a * h, i * h - M + b * h, i * h - M + c * h});
    diag.seeds = static_cast<long>(seeds.size());
  } else {
    seeds = scan_candidates(g1, g2, map, config, diag.window_halfwidth, diag);
  }

  std::vector<RefineOutcome> outcomes(seeds.size());
  parallel_for(seeds.size(),
               [&](std::size_t i) { outcomes[i] = newton_refine(g1, g2, map, seeds[i], config); });

  std::vector<Inscription> zeros;
  for (const auto& o : outcomes)
    if (o.inscription) zeros.push_back(*o.inscription);
  diag.converged = static_cast<long>(zeros.size());

  for (const auto& z : zeros)
    if (std::abs(z.w) > diag.w_max * (1.0 + 1e-9) + 1e-12) ++diag.bound_violations;

  std::vector<Inscription> transverse, degenerate;
  for (const auto& z : zeros)
    (z.jac_min_singular_value < config.degenerate_tol ? degenerate : transverse).push_back(z);

  // Point solutions: identify within dedup_tol (mod translation).
  for (const auto& cluster : cluster_zeros(transverse, config.dedup_tol))
    result.inscriptions.push_back(transverse[best_of(transverse, cluster)]);

  // Clean families: chain-link nearby refined zeros into one representative.
  const double link_tol = std::max(8.0 / config.scan_per_unit, config.dedup_tol);
  for (const auto& cluster : cluster_zeros(degenerate, link_tol)) {
    Inscription rep = degenerate[best_of(degenerate, cluster)];
    rep.family = true;
    rep.family_samples = static_cast<int>(cluster.size());
    double span = 0.0;
    for (std::size_t a = 0; a < cluster.size(); ++a)
      for (std::size_t b = a + 1; b < cluster.size(); ++b)
        span = std::max(span, param_distance(degenerate[cluster[a]].params,
                                             degenerate[cluster[b]].params));
    rep.family_span = span;
    result.inscriptions.push_back(rep);
  }

  std::sort(result.inscriptions.begin(), result.inscriptions.end(),
            [](const Inscription& a, const Inscription& b) {
              if (a.params.t1 != b.params.t1) return a.params.t1 < b.params.t1;
              return a.params.t3 < b.params.t3;
            });
  diag.theorem_violation = result.inscriptions.empty();
  return result;
}

SolveResult solve_all(const PeriodicCurve& g1, const PeriodicCurve& g2, const TrapezoidType& type,
                      const SolveConfig& config) {
  return solve_all(g1, g2, ResidualMap::from_trapezoid(type), config);
}

namespace {

std::pair<int, std::vector<Complex>> fourier_data(const PeriodicCurve& c) {
  if (const auto* v = std::get_if<VerticalLine>(&c.rep()))
    return {0, {Complex(v->alpha, 0.0)}};
  if (const auto* f = std::get_if<FourierSeries>(&c.rep())) return {f->kmin, f->coeffs};
  throw std::invalid_argument("homotopy: curves must be vertical lines or Fourier curves");
}

}  // namespace

CurveHomotopy linear_homotopy(const PeriodicCurve& g1_start, const PeriodicCurve& g2_start,
                              const PeriodicCurve& g1_end, const PeriodicCurve& g2_end) {
  auto blend = [](const PeriodicCurve& a, const PeriodicCurve& b, double s) {
    const auto [ka, ca] = fourier_data(a);
    const auto [kb, cb] = fourier_data(b);
    const int kmin = std::min(ka, kb);
    const int kmax = std::max(ka + static_cast<int>(ca.size()), kb + static_cast<int>(cb.size())) - 1;
    std::vector<Complex> mix(kmax - kmin + 1, Complex(0, 0));
    for (std::size_t i = 0; i < ca.size(); ++i) mix[ka + static_cast<int>(i) - kmin] += (1.0 - s) * ca[i];
    for (std::size_t i = 0; i < cb.size(); ++i) mix[kb + static_cast<int>(i) - kmin] += s * cb[i];
    return PeriodicCurve::fourier(kmin, std::move(mix));
  };
  auto a1 = fourier_data(g1_start), a2 = fourier_data(g2_start);  // validate eagerly
  auto b1 = fourier_data(g1_end), b2 = fourier_data(g2_end);
  (void)a1; (void)a2; (void)b1; (void)b2;
  return CurveHomotopy{[=](double s) {
    return std::make_pair(blend(g1_start, g1_end, s), blend(g2_start, g2_end, s));
  }};
}

std::vector<TrackedPath> continue_family(const CurveHomotopy& homotopy, const TrapezoidType& type,
                                         const std::vector<Inscription>& start, int steps,
                                         const SolveConfig& config) {
  if (steps < 1) throw std::invalid_argument("continue_family: steps must be >= 1");
  config.validate();
  const ResidualMap map = ResidualMap::from_trapezoid(type);

  std::vector<TrackedPath> paths(start.size());
  parallel_for(start.size(), [&](std::size_t idx) {
    TrackedPath path;
    path.start = start[idx];
    path.end = start[idx];
    path.samples.push_back({0.0, start[idx].params});

    InscriptionParams cur = start[idx].params;
    auto [c1, c2] = homotopy.at(0.0);
    for (int k = 1; k <= steps; ++k) {
      const double s = static_cast<double>(k) / steps;
      auto [n1, n2] = homotopy.at(s);

      // Euler predictor: the residual drift under the curve update, pushed
      // through the current Jacobian.
      InscriptionParams predicted = cur;
      {
        const ResidualValue shift = residual(n1, n2, map, cur);
        const Eigen::Matrix4d jac = jacobian(c1, c2, map, cur);
        const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac,
                                                    Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::Vector4d rhs(shift.r[0], shift.r[1], shift.r[2], shift.r[3]);
        const Eigen::Vector4d uty = svd.matrixU().transpose() * rhs;
        Eigen::Vector4d delta = Eigen::Vector4d::Zero();
        for (int i = 0; i < 4; ++i)
          if (svd.singularValues()(i) > 1e-12 * svd.singularValues()(0))
            delta -= (uty(i) / svd.singularValues()(i)) * svd.matrixV().col(i);
        if (delta.allFinite()) predicted = {cur.t1 + delta(0), cur.t2 + delta(1),
                                            cur.t3 + delta(2), cur.t4 + delta(3)};
      }

      RefineOutcome corrected = newton_refine(n1, n2, map, predicted, config);
      if (!corrected.inscription) corrected = newton_refine(n1, n2, map, cur, config);
      if (!corrected.inscription) {
        path.note = "corrector failed at s=" + std::to_string(s) + ": " + corrected.failure;
        break;
      }
      const Inscription& ins = *corrected.inscription;
      if (ins.jac_min_singular_value < config.degenerate_tol) path.fold = true;

      const double N = std::max(n1.strip_halfwidth(), n2.strip_halfwidth());
      if (std::abs(ins.w) > 0.95 * w_bound(N, type.c, type.theta)) path.bound_alarm = true;

      cur = ins.params;
      path.end = ins;
      path.s_end = s;
      path.samples.push_back({s, cur});
      c1 = n1;
      c2 = n2;
    }
    paths[idx] = std::move(path);
  });
  return paths;
}

Inscription vertical_line_solutions(double alpha1, double alpha2, const TrapezoidType& type,
                                    double s) {
  type.validate();
  if (alpha1 == alpha2)
    throw std::invalid_argument("vertical_line_solutions: lines must be distinct");

  const Complex z((1.0 - type.c) * alpha1 + type.c * alpha2, s);
  const Complex w = (alpha1 - alpha2) * Complex(1.0, -std::tan(type.theta / 2.0));
  const auto v = vertices_from_zw(z, w, type);
  // On a vertical line the parameter is the height.
  const InscriptionParams params{v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag()};

  const PeriodicCurve g1 = PeriodicCurve::vertical(alpha1);
  const PeriodicCurve g2 = PeriodicCurve::vertical(alpha2);
  const ResidualMap map = ResidualMap::from_trapezoid(type);
  const double res = residual(g1, g2, map, params).norm();
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jacobian(g1, g2, map, params));
  return Inscription{params, z, w, v, res, svd.singularValues()(3)};
}

}  // namespace inscribe
