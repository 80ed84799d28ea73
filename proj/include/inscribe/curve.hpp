#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace inscribe {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTau = 2.0 * kPi;

// Periodic plane curves gamma: R -> C with gamma(t+1) = gamma(t) + i.
// Three representations, all satisfying periodicity exactly by construction.

struct VerticalLine {
  double alpha = 0.0;  // gamma(t) = alpha + i t
};

// gamma(t) = i t + sum_{k=kmin}^{kmin+coeffs.size()-1} coeffs[k-kmin] e^{2 pi i k t}
struct FourierSeries {
  int kmin = 0;
  std::vector<Complex> coeffs;
};

// Uniform samples at t = j/m over one period; closes with samples[0] + i.
struct Polyline {
  std::vector<Complex> samples;
};

class PeriodicCurve {
public:
  using Rep = std::variant<VerticalLine, FourierSeries, Polyline>;

  static PeriodicCurve vertical(double alpha);
  static PeriodicCurve fourier(int kmin, std::vector<Complex> coeffs);
  // Symmetric index range k = -K..K; coeffs.size() must be 2K+1.
  static PeriodicCurve fourier_symmetric(std::vector<Complex> coeffs);
  static PeriodicCurve polyline(std::vector<Complex> samples);

  Complex eval(double t) const;
  Complex deriv(double t) const;

  // Smallest N with |Re gamma(t)| <= N over one period (exact for lines and
  // polylines, refined to ~1e-12 for Fourier curves). Cached at construction.
  double strip_halfwidth() const { return halfwidth_; }

  // max_t |Im gamma(t) - t|; bounds how far the parameter can lag behind the
  // vertical position. Cached.
  double drift_bound() const { return drift_; }

  // Rigorous upper bound for max_t |deriv(t)| (triangle inequality for
  // Fourier curves, exact for the other representations). Cached.
  double speed_bound() const { return speed_; }

  bool smooth() const { return !std::holds_alternative<Polyline>(rep_); }
  const Rep& rep() const { return rep_; }

private:
  explicit PeriodicCurve(Rep rep);

  Rep rep_;
  double halfwidth_ = 0.0;
  double drift_ = 0.0;
  double speed_ = 1.0;
};

// Distance between points on the cylinder C / (z ~ z + i).
double cylinder_distance(Complex a, Complex b);

struct DistanceWitness {
  double t = 0.0;        // parameter on the first curve
  double s = 0.0;        // parameter on the second curve
  double distance = 0.0;  // cylinder distance at the witness pair
};

// Certified minimum cylinder distance between the two curve images
// (branch-and-bound with Lipschitz pruning). `stop_below` allows an early
// exit as soon as some pair is found closer than that threshold; boxes are
// never split below `param_floor`, which bounds the residual certification
// slack by speed * param_floor.
DistanceWitness min_distance(const PeriodicCurve& c1, const PeriodicCurve& c2,
                             double abs_tol = 1e-9, double stop_below = 0.0,
                             double param_floor = 1e-6);

// True iff the minimum distance between the images exceeds tol.
bool is_disjoint(const PeriodicCurve& c1, const PeriodicCurve& c2, double tol,
                 DistanceWitness* witness = nullptr);

// True iff the induced cylinder curve has no self-approach below tol between
// parameter-separated arcs.
bool is_embedded(const PeriodicCurve& curve, double tol);

// Periodic Gaussian smoothing of t -> gamma(t) - i t, truncated to modes
// |k| <= kmax. Input must be a polyline.
PeriodicCurve mollify(const PeriodicCurve& poly, double sigma, int kmax);

// Integral of x dy over one period: the vertical-line position enclosing zero
// signed area with the curve on the cylinder.
double flux(const PeriodicCurve& curve);

}  // namespace inscribe
