#include "inscribe/curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>

namespace inscribe {

namespace {

// sum_k c_k e^{2 pi i k u}; incremental rotation, resynced periodically to
// keep the accumulated phase error near machine level.
Complex modal_sum(const FourierSeries& f, double u, bool derivative) {
  const Complex rot = std::polar(1.0, kTau * u);
  Complex cur = std::polar(1.0, kTau * f.kmin * u);
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (j > 0 && j % 64 == 0)
      cur = std::polar(1.0, kTau * (f.kmin + static_cast<int>(j)) * u);
    const int k = f.kmin + static_cast<int>(j);
    Complex term = f.coeffs[j] * cur;
    if (derivative) term *= Complex(0.0, kTau * k);
    acc += term;
    cur *= rot;
  }
  return acc;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90 && (b - a) > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

// Max of a 1-periodic function: dense grid, then golden refinement around
// every sampled local maximum.
double periodic_max(const std::function<double(double)>& f, int n = 4096) {
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = f(static_cast<double>(i) / n);
  double best = *std::max_element(vals.begin(), vals.end());
  const double h = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    double prev = vals[(i + n - 1) % n], next = vals[(i + 1) % n];
    if (vals[i] >= prev && vals[i] >= next) {
      double t = static_cast<double>(i) / n;
      best = std::max(best, golden_max(f, t - h, t + h));
    }
  }
  return best;
}

double segment_point_dist2(Complex a, Complex b, Complex p) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double u = 0.0;
  if (len2 > 0.0) u = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::norm(a + u * ab - p);
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_intersect(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double segment_segment_dist(Complex a, Complex b, Complex c, Complex d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  double m = segment_point_dist2(a, b, c);
  m = std::min(m, segment_point_dist2(a, b, d));
  m = std::min(m, segment_point_dist2(c, d, a));
  m = std::min(m, segment_point_dist2(c, d, b));
  return std::sqrt(m);
}

}  // namespace

PeriodicCurve::PeriodicCurve(Rep rep) : rep_(std::move(rep)) {
  if (const auto* v = std::get_if<VerticalLine>(&rep_)) {
    if (!std::isfinite(v->alpha)) throw std::invalid_argument("vertical line: alpha not finite");
    halfwidth_ = std::abs(v->alpha);
    drift_ = 0.0;
    speed_ = 1.0;
  } else if (const auto* f = std::get_if<FourierSeries>(&rep_)) {
    if (f->coeffs.empty()) throw std::invalid_argument("fourier curve: empty coefficient list");
    for (const Complex& c : f->coeffs)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("fourier curve: coefficient not finite");
    auto modal = [&](double u) { return modal_sum(*f, u, false); };
    halfwidth_ = periodic_max([&](double u) { return std::abs(modal(u).real()); });
    drift_ = periodic_max([&](double u) { return std::abs(modal(u).imag()); });
    double deriv_sum = 0.0;
    for (std::size_t j = 0; j < f->coeffs.size(); ++j)
      deriv_sum += kTau * std::abs(f->kmin + static_cast<int>(j)) * std::abs(f->coeffs[j]);
    speed_ = 1.0 + deriv_sum;
  } else {
    const auto& p = std::get<Polyline>(rep_);
    const std::size_t m = p.samples.size();
    if (m < 2) throw std::invalid_argument("polyline: needs at least two samples");
    halfwidth_ = 0.0;
    drift_ = 0.0;
    speed_ = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const Complex s = p.samples[j];
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw std::invalid_argument("polyline: sample not finite");
      halfwidth_ = std::max(halfwidth_, std::abs(s.real()));
      drift_ = std::max(drift_, std::abs(s.imag() - static_cast<double>(j) / m));
      const Complex next = (j + 1 < m) ? p.samples[j + 1] : p.samples[0] + Complex(0, 1);
      speed_ = std::max(speed_, std::abs(next - s) * static_cast<double>(m));
    }
  }
}

PeriodicCurve PeriodicCurve::vertical(double alpha) { return PeriodicCurve(VerticalLine{alpha}); }

PeriodicCurve PeriodicCurve::fourier(int kmin, std::vector<Complex> coeffs) {
  return PeriodicCurve(FourierSeries{kmin, std::move(coeffs)});
}

PeriodicCurve PeriodicCurve::fourier_symmetric(std::vector<Complex> coeffs) {
  if (coeffs.size() % 2 == 0)
    throw std::invalid_argument("fourier_symmetric: coefficient count must be odd (k = -K..K)");
  const int K = static_cast<int>(coeffs.size() / 2);
  return fourier(-K, std::move(coeffs));
}

PeriodicCurve PeriodicCurve::polyline(std::vector<Complex> samples) {
  return PeriodicCurve(Polyline{std::move(samples)});
}

Complex PeriodicCurve::eval(double t) const {
  if (const auto* v = std::get_if<VerticalLine>(&rep_)) return {v->alpha, t};
  const double fl = std::floor(t);
  const double u = t - fl;
  if (const auto* f = std::get_if<FourierSeries>(&rep_))
    return Complex(0.0, t) + modal_sum(*f, u, false);
  const auto& p = std::get<Polyline>(rep_);
  const std::size_t m = p.samples.size();
  const double x = u * static_cast<double>(m);
  std::size_t j = std::min(static_cast<std::size_t>(x), m - 1);
  const double frac = x - static_cast<double>(j);
  const Complex a = p.samples[j];
  const Complex b = (j + 1 < m) ? p.samples[j + 1] : p.samples[0] + Complex(0, 1);
  return a + frac * (b - a) + Complex(0.0, fl);
}

Complex PeriodicCurve::deriv(double t) const {
  if (std::holds_alternative<VerticalLine>(rep_)) return {0.0, 1.0};
  const double u = t - std::floor(t);
  if (const auto* f = std::get_if<FourierSeries>(&rep_))
    return Complex(0.0, 1.0) + modal_sum(*f, u, true);
  const auto& p = std::get<Polyline>(rep_);
  const std::size_t m = p.samples.size();
  const double dm = static_cast<double>(m);
  const double x = u * dm;
  auto slope = [&](std::size_t j) {
    const Complex a = p.samples[j];
    const Complex b = (j + 1 < m) ? p.samples[j + 1] : p.samples[0] + Complex(0, 1);
    return (b - a) * dm;
  };
  // At a vertex the one-sided derivatives differ; take their average.
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) {
    const std::size_t v = static_cast<std::size_t>(nearest) % m;
    return 0.5 * (slope((v + m - 1) % m) + slope(v));
  }
  return slope(std::min(static_cast<std::size_t>(x), m - 1));
}

double cylinder_distance(Complex a, Complex b) {
  const double dx = a.real() - b.real();
  double dy = a.imag() - b.imag();
  dy -= std::round(dy);
  return std::sqrt(dx * dx + dy * dy);
}

DistanceWitness min_distance(const PeriodicCurve& c1, const PeriodicCurve& c2, double abs_tol,
                             double stop_below, double param_floor) {
  struct Box {
    double t0, t1, s0, s1, lower;
  };
  auto cmp = [](const Box& a, const Box& b) { return a.lower > b.lower; };
  std::priority_queue<Box, std::vector<Box>, decltype(cmp)> queue(cmp);

  const double L1 = c1.speed_bound(), L2 = c2.speed_bound();
  DistanceWitness best{0.5, 0.5, cylinder_distance(c1.eval(0.5), c2.eval(0.5))};

  auto probe = [&](double t, double s) {
    const double d = cylinder_distance(c1.eval(t), c2.eval(s));
    if (d < best.distance) best = {t, s, d};
    return d;
  };
  auto make_box = [&](double t0, double t1, double s0, double s1) {
    const double tc = 0.5 * (t0 + t1), sc = 0.5 * (s0 + s1);
    const double d = probe(tc, sc);
    return Box{t0, t1, s0, s1, d - 0.5 * L1 * (t1 - t0) - 0.5 * L2 * (s1 - s0)};
  };

  queue.push(make_box(0.0, 1.0, 0.0, 1.0));
  long iterations = 0;
  while (!queue.empty() && ++iterations < 4'000'000) {
    if (best.distance < stop_below) break;
    const Box box = queue.top();
    queue.pop();
    if (box.lower >= best.distance - abs_tol) break;  // certified within abs_tol
    // Boxes at the resolution floor stay resolved by their center probe;
    // flat minimizer sets (parallel lines) would otherwise never terminate.
    if (box.t1 - box.t0 < param_floor && box.s1 - box.s0 < param_floor) continue;
    const double tm = 0.5 * (box.t0 + box.t1), sm = 0.5 * (box.s0 + box.s1);
    if (L1 * (box.t1 - box.t0) >= L2 * (box.s1 - box.s0)) {
      queue.push(make_box(box.t0, tm, box.s0, box.s1));
      queue.push(make_box(tm, box.t1, box.s0, box.s1));
    } else {
      queue.push(make_box(box.t0, box.t1, box.s0, sm));
      queue.push(make_box(box.t0, box.t1, sm, box.s1));
    }
  }
  return best;
}

namespace {

// Coordinate-descent polish of a witness pair toward the nearest local
// minimum of the distance.
DistanceWitness polish_witness(const PeriodicCurve& c1, const PeriodicCurve& c2,
                               DistanceWitness w) {
  double step = 0.02;
  for (int round = 0; round < 80; ++round, step *= 0.8) {
    const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& mv : moves) {
      const double d = cylinder_distance(c1.eval(w.t + mv[0]), c2.eval(w.s + mv[1]));
      if (d < w.distance) w = {w.t + mv[0], w.s + mv[1], d};
    }
  }
  return w;
}

}  // namespace

bool is_disjoint(const PeriodicCurve& c1, const PeriodicCurve& c2, double tol,
                 DistanceWitness* witness) {
  // Decision-oriented tolerances: certify coarsely away from tol, exit early
  // once any pair is found below it.
  const double abs_tol = std::max(1e-4, 0.25 * tol);
  const double floor = std::max(1e-6, 1e-2 * abs_tol);
  DistanceWitness w = polish_witness(c1, c2, min_distance(c1, c2, abs_tol, tol, floor));
  if (witness) *witness = w;
  // w.distance is an upper bound for the true minimum; subtract the
  // certification slack before comparing against tol.
  const double slack = abs_tol + 0.5 * (c1.speed_bound() + c2.speed_bound()) * floor;
  return w.distance - slack > tol;
}

bool is_embedded(const PeriodicCurve& curve, double tol) {
  // Polyline proxy fine enough that chords track the curve, then pairwise
  // distance between parameter-separated segments on the cylinder.
  std::vector<Complex> pts;
  std::size_t n;
  if (const auto* p = std::get_if<Polyline>(&curve.rep())) {
    pts = p->samples;
    n = pts.size();
  } else {
    n = static_cast<std::size_t>(
        std::clamp(64.0 * std::ceil(curve.speed_bound()), 512.0, 4096.0));
    pts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) pts.push_back(curve.eval(static_cast<double>(j) / n));
  }
  pts.push_back(pts[0] + Complex(0, 1));

  for (std::size_t i = 0; i + 2 < n + 1; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // circularly adjacent
      double d = 1e300;
      for (int shift = -1; shift <= 1; ++shift) {
        const Complex off{0.0, static_cast<double>(shift)};
        d = std::min(d, segment_segment_dist(pts[i], pts[i + 1], pts[j] + off, pts[j + 1] + off));
      }
      if (d < tol) return false;
    }
  }
  return true;
}

PeriodicCurve mollify(const PeriodicCurve& poly, double sigma, int kmax) {
  const auto* p = std::get_if<Polyline>(&poly.rep());
  if (!p) throw std::invalid_argument("mollify: input must be a polyline");
  if (!(sigma > 0.0)) throw std::invalid_argument("mollify: sigma must be positive");
  if (kmax < 1) throw std::invalid_argument("mollify: kmax must be >= 1");

  const std::size_t m = p->samples.size();
  std::vector<Complex> periodic_part(m);
  for (std::size_t j = 0; j < m; ++j)
    periodic_part[j] = p->samples[j] - Complex(0.0, static_cast<double>(j) / m);

  // Coefficients of the piecewise-linear interpolant (sinc^2 factor), then
  // the periodic heat kernel e^{-2 pi^2 sigma^2 k^2}.
  std::vector<Complex> coeffs(2 * kmax + 1);
  for (int k = -kmax; k <= kmax; ++k) {
    const Complex step = std::polar(1.0, -kTau * k / static_cast<double>(m));
    Complex cur{1.0, 0.0};
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
      if (j > 0 && j % 64 == 0)
        cur = std::polar(1.0, -kTau * k * static_cast<double>(j) / static_cast<double>(m));
      acc += periodic_part[j] * cur;
      cur *= step;
    }
    double shape = 1.0;
    if (k != 0) {
      const double x = kPi * k / static_cast<double>(m);
      const double s = std::sin(x) / x;
      shape = s * s;
    }
    const double heat = std::exp(-2.0 * kPi * kPi * sigma * sigma * k * k);
    coeffs[k + kmax] = acc / static_cast<double>(m) * shape * heat;
  }
  return PeriodicCurve::fourier(-kmax, std::move(coeffs));
}

double flux(const PeriodicCurve& curve) {
  if (const auto* v = std::get_if<VerticalLine>(&curve.rep())) return v->alpha;
  if (const auto* f = std::get_if<FourierSeries>(&curve.rep())) {
    // x(t) y'(t) is band-limited; the trapezoid rule on enough uniform points
    // integrates it exactly.
    const int kmax_abs =
        std::max(std::abs(f->kmin), std::abs(f->kmin + static_cast<int>(f->coeffs.size()) - 1));
    const int n = 4 * kmax_abs + 9;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / n;
      acc += curve.eval(t).real() * curve.deriv(t).imag();
    }
    return acc / n;
  }
  const auto& p = std::get<Polyline>(curve.rep());
  const std::size_t m = p.samples.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex a = p.samples[j];
    const Complex b = (j + 1 < m) ? p.samples[j + 1] : p.samples[0] + Complex(0, 1);
    acc += 0.5 * (a.real() + b.real()) * (b.imag() - a.imag());
  }
  return acc;
}

}  // namespace inscribe
