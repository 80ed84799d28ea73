#pragma once

// Test-only brute-force oracle: dense scan of the reduced (t1, t3) system
// with shrinking-grid refinement. Written independently of the solver's
// candidate machinery so the two can check each other.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "inscribe/curve.hpp"
#include "inscribe/quad.hpp"
#include "inscribe/system.hpp"

namespace oracle {

using inscribe::Complex;
using inscribe::InscriptionParams;
using inscribe::PeriodicCurve;
using inscribe::TrapezoidType;

inline double frac(double x) { return x - std::floor(x); }

inline double wrap_dist(Complex a, Complex b) {
  const double dx = a.real() - b.real();
  double dy = a.imag() - b.imag();
  dy -= std::round(dy);
  return std::sqrt(dx * dx + dy * dy);
}

// Im-sorted sample table with windowed nearest-point queries.
class CurveTable {
 public:
  CurveTable(const PeriodicCurve& c, int n) : curve_(&c), n_(n) {
    pts_.reserve(n);
    for (int i = 0; i < n; ++i) pts_.push_back(c.eval(static_cast<double>(i) / n));
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return frac(pts_[a].imag()) < frac(pts_[b].imag());
    });
    keys_.reserve(n);
    for (int i : order_) keys_.push_back(frac(pts_[i].imag()));
  }

  struct Hit {
    double dist;
    double t;  // parameter with integer shift, gamma(t) nearest to the query
    bool valid;
  };

  // Nearest sample within cylinder distance cap (any on-curve point closer
  // than cap has Im within cap of the query).
  Hit nearest_sample(Complex p, double cap) const {
    Hit best{cap, 0.0, false};
    const double key = frac(p.imag());
    for (int shift = -1; shift <= 1; ++shift) {
      const double lo = key + shift - cap, hi = key + shift + cap;
      auto it0 = std::lower_bound(keys_.begin(), keys_.end(), lo);
      auto it1 = std::upper_bound(keys_.begin(), keys_.end(), hi);
      for (auto it = it0; it != it1; ++it) {
        const int idx = order_[static_cast<int>(it - keys_.begin())];
        const double d = wrap_dist(pts_[idx], p);
        if (d < best.dist) {
          const double t0 = static_cast<double>(idx) / n_;
          const double k = std::round(p.imag() - pts_[idx].imag());
          best = {d, t0 + k, true};
        }
      }
    }
    return best;
  }

  // Golden-section polish of the nearest parameter on the actual curve.
  Hit nearest(Complex p, double cap) const {
    Hit h = nearest_sample(p, cap);
    if (!h.valid) return h;
    double a = h.t - 1.5 / n_, b = h.t + 1.5 / n_;
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = std::abs(curve_->eval(x1) - p - Complex(0, std::round((curve_->eval(x1) - p).imag()))),
           f2 = std::abs(curve_->eval(x2) - p - Complex(0, std::round((curve_->eval(x2) - p).imag())));
    for (int it = 0; it < 60; ++it) {
      if (f1 > f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = std::abs(curve_->eval(x2) - p -
                      Complex(0, std::round((curve_->eval(x2) - p).imag())));
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = std::abs(curve_->eval(x1) - p -
                      Complex(0, std::round((curve_->eval(x1) - p).imag())));
      }
    }
    const double t = f1 < f2 ? x1 : x2;
    const double d = std::min(f1, f2);
    if (d < h.dist) {
      const double k = std::round((p - curve_->eval(t)).imag());
      h = {d, t + k, true};
    }
    return h;
  }

 private:
  const PeriodicCurve* curve_;
  int n_;
  std::vector<Complex> pts_;
  std::vector<int> order_;
  std::vector<double> keys_;
};

// Search window half-width guaranteed to contain every zero's t-offsets.
inline double search_window(const PeriodicCurve& g1, const PeriodicCurve& g2, double theta) {
  const double N = std::max(g1.strip_halfwidth(), g2.strip_halfwidth());
  const double wmax = 2.0 * N / std::min(std::sin(theta / 2), std::cos(theta / 2));
  return 1.05 * wmax + g1.drift_bound() + g2.drift_bound() + 1.0;
}

struct ScanResult {
  std::vector<InscriptionParams> zeros;  // canonical t1 in [0,1), deduplicated
  long candidates = 0;
};

inline double param_gap(const InscriptionParams& a, const InscriptionParams& b) {
  double best = 1e300;
  for (int k = -1; k <= 1; ++k) {
    double d = std::abs(a.t1 - b.t1 - k);
    d = std::max(d, std::abs(a.t2 - b.t2 - k));
    d = std::max(d, std::abs(a.t3 - b.t3 - k));
    d = std::max(d, std::abs(a.t4 - b.t4 - k));
    best = std::min(best, d);
  }
  return best;
}

inline ScanResult reduced_scan(const PeriodicCurve& g1, const PeriodicCurve& g2,
                               const TrapezoidType& type, int resolution) {
  const Complex rho = std::polar(1.0, type.theta);
  const double M = search_window(g1, g2, type.theta);
  const CurveTable tab1(g1, 4096), tab2(g2, 4096);
  const double N1 = g1.strip_halfwidth(), N2 = g2.strip_halfwidth();

  const int n1 = resolution, n3 = resolution;
  const double h1 = 1.0 / n1, h3 = 2.0 * M / n3;
  const double speed = std::max(g1.speed_bound(), g2.speed_bound());
  const double threshold = 6.0 * speed * std::max(h1, h3);
  const double cap = 2.0 * threshold;

  auto predict = [&](double t1, double t3, Complex& pred2, Complex& pred4) {
    const Complex p1 = g1.eval(t1), p3 = g2.eval(t3);
    const Complex w = p1 - p3;
    const Complex z = p1 - type.c * w;
    pred2 = z + type.c * rho * w;
    pred4 = z + (type.c - 1.0) * rho * w;
  };
  auto defect = [&](double t1, double t3) {
    Complex pred2, pred4;
    predict(t1, t3, pred2, pred4);
    double d2 = cap;
    if (std::abs(pred2.real()) <= N1 + cap) d2 = tab1.nearest_sample(pred2, cap).dist;
    if (d2 >= threshold) return std::max(d2, threshold);
    double d4 = cap;
    if (std::abs(pred4.real()) <= N2 + cap) d4 = tab2.nearest_sample(pred4, cap).dist;
    return std::max(d2, d4);
  };
  // Exact-curve defect (polished projections); the sample table alone floors
  // out at its own resolution. Sum of squares: smooth at the crossing of the
  // two distance valleys, where max() has a kink that stalls pattern search.
  auto defect_exact = [&](double t1, double t3) {
    Complex pred2, pred4;
    predict(t1, t3, pred2, pred4);
    const auto h2 = tab1.nearest(pred2, cap);
    const auto h4 = tab2.nearest(pred4, cap);
    const double d2 = h2.valid ? h2.dist : cap;
    const double d4 = h4.valid ? h4.dist : cap;
    return d2 * d2 + d4 * d4;
  };

  std::vector<float> grid(static_cast<std::size_t>(n1) * n3);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n3; ++j)
      grid[static_cast<std::size_t>(i) * n3 + j] =
          static_cast<float>(defect(i * h1, i * h1 - M + j * h3));

  ScanResult result;
  std::vector<InscriptionParams> raw;
  auto value = [&](int i, int j) {
    return grid[static_cast<std::size_t>(((i % n1) + n1) % n1) * n3 + j];
  };
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n3; ++j) {
      const float g = grid[static_cast<std::size_t>(i) * n3 + j];
      if (!(g < threshold)) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int jj = j + dj;
          if (jj < 0 || jj >= n3) continue;
          if (value(i + di, jj) < g) {
            local_min = false;
            break;
          }
        }
      if (!local_min) continue;
      ++result.candidates;

      // Compass search on the reduced defect: bisect the step only when no
      // neighbor improves, so narrow valleys can still be walked.
      double t1 = i * h1, t3 = i * h1 - M + j * h3;
      double s1 = h1, s3 = h3;
      double best = defect_exact(t1, t3);
      for (int it = 0; it < 400 && best > 1e-26 && s1 > 1e-15; ++it) {
        double bt1 = t1, bt3 = t3, bval = best;
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            const double d = defect_exact(t1 + a * s1, t3 + b * s3);
            if (d < bval) {
              bval = d;
              bt1 = t1 + a * s1;
              bt3 = t3 + b * s3;
            }
          }
        if (bval < best) {
          best = bval;
          t1 = bt1;
          t3 = bt3;
        } else {
          s1 *= 0.5;
          s3 *= 0.5;
        }
      }
      if (best > 1e-18) continue;  // both distances below 1e-9

      Complex pred2, pred4;
      predict(t1, t3, pred2, pred4);
      const auto hit2 = tab1.nearest(pred2, cap);
      const auto hit4 = tab2.nearest(pred4, cap);
      if (!hit2.valid || !hit4.valid) continue;
      InscriptionParams p{t1, hit2.t, t3, hit4.t};
      const int shift = -static_cast<int>(std::floor(p.t1));
      p = inscribe::translate(p, shift);
      raw.push_back(p);
    }
  }

  // Dedup modulo translation.
  for (const auto& p : raw) {
    bool dup = false;
    for (const auto& q : result.zeros)
      if (param_gap(p, q) < 1e-4) {
        dup = true;
        break;
      }
    if (!dup) result.zeros.push_back(p);
  }
  std::sort(result.zeros.begin(), result.zeros.end(),
            [](const InscriptionParams& a, const InscriptionParams& b) { return a.t1 < b.t1; });
  return result;
}

// One-to-one matching between two zero sets within tol; returns true when
// they agree exactly.
inline bool sets_match(const std::vector<InscriptionParams>& a,
                       const std::vector<InscriptionParams>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& pa : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!used[i] && param_gap(pa, b[i]) < tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
