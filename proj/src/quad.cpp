#include "inscribe/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace inscribe {

namespace {

double diameter(const std::array<Complex, 4>& p) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = std::max(d, std::abs(p[i] - p[j]));
  return d;
}

double min_gap(const std::array<Complex, 4>& p) {
  double d = 1e300;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = std::min(d, std::abs(p[i] - p[j]));
  return d;
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

}  // namespace

void TrapezoidType::validate() const {
  if (!(c > 0.0 && c <= 0.5)) throw std::invalid_argument("trapezoid type: c must be in (0, 1/2]");
  if (!(theta > 0.0 && theta < kPi))
    throw std::invalid_argument("trapezoid type: theta must be in (0, pi)");
}

QuadSimilarityType QuadSimilarityType::from_vertices(Complex v1, Complex v2, Complex v3,
                                                     Complex v4) {
  const Complex span = v3 - v1;
  if (std::abs(span) == 0.0)
    throw std::invalid_argument("quad type: q1 and q3 coincide");
  QuadSimilarityType q;
  q.q_ = {Complex(0, 0), (v2 - v1) / span, Complex(1, 0), (v4 - v1) / span};

  const double diam = diameter(q.q_);
  if (min_gap(q.q_) < 1e-6 * diam)
    throw std::invalid_argument("quad type: vertices nearly coincident");

  double sign = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Complex e1 = q.q_[(i + 1) % 4] - q.q_[i];
    const Complex e2 = q.q_[(i + 2) % 4] - q.q_[(i + 1) % 4];
    const double c = cross(e1, e2);
    if (std::abs(c) < 1e-12 * diam * diam)
      throw std::invalid_argument("quad type: vertices nearly collinear");
    if (sign == 0.0)
      sign = c;
    else if (c * sign < 0.0)
      throw std::invalid_argument("quad type: vertices not in convex position");
  }
  return q;
}

std::array<Complex, 4> vertices_from_zw(Complex z, Complex w, const TrapezoidType& type) {
  type.validate();
  const Complex rw = std::polar(1.0, type.theta) * w;
  return {z + type.c * w, z + type.c * rw, z + (type.c - 1.0) * w, z + (type.c - 1.0) * rw};
}

std::pair<Complex, Complex> zw_from_diagonal(Complex p1, Complex p3, const TrapezoidType& type) {
  type.validate();
  const Complex w = p1 - p3;
  return {p1 - type.c * w, w};
}

Classification classify_quad(Complex p1, Complex p2, Complex p3, Complex p4, double tol) {
  Classification out;
  const std::array<Complex, 4> p{p1, p2, p3, p4};
  const double diam = diameter(p);
  if (diam == 0.0) {
    out.reason = "all vertices coincide";
    return out;
  }
  if (min_gap(p) < tol * diam) {
    out.reason = "coincident vertices";
    return out;
  }

  const Complex w = p1 - p3;
  const Complex u = p2 - p4;
  if (std::abs(std::abs(u) / std::abs(w) - 1.0) > 16.0 * tol) {
    out.reason = "diagonals differ in length";
    return out;
  }
  const double theta = std::arg(u / w);
  if (!(theta > 1e-9 && theta < kPi - 1e-9)) {
    out.reason = (theta < -1e-9 && theta > -(kPi - 1e-9)) ? "labeling reverses orientation"
                                                          : "diagonals collinear";
    return out;
  }
  const Complex rho = std::polar(1.0, theta);
  const Complex c_est = (p1 - p2) / (w * (1.0 - rho));
  const double c = c_est.real();
  if (!(c > 0.0 && c < 1.0)) {
    out.reason = "diagonals do not cross between their endpoints";
    return out;
  }

  const Complex z = p1 - c * w;
  TrapezoidType probe{c <= 0.5 ? c : 1.0 - c, theta};
  const Complex wp = c <= 0.5 ? w : -w;
  const auto rec = vertices_from_zw(z, wp, probe);
  const std::array<Complex, 4> target =
      c <= 0.5 ? std::array<Complex, 4>{p1, p2, p3, p4} : std::array<Complex, 4>{p3, p4, p1, p2};
  double defect = 0.0;
  for (int i = 0; i < 4; ++i) defect = std::max(defect, std::abs(rec[i] - target[i]));
  if (defect / diam > tol) {
    out.reason = "not an isosceles trapezoid within tolerance";
    return out;
  }

  out.ok = true;
  out.c = probe.c;
  out.theta = theta;
  out.balanced = std::abs(p1 - p2) <= std::abs(p3 - p4) + tol * diam;
  return out;
}

QuadSimilarityType trapezoid_to_reference(const TrapezoidType& type) {
  type.validate();
  // z0 = c, w0 = -1 sends the first diagonal to (0, 1).
  const auto v = vertices_from_zw(Complex(type.c, 0.0), Complex(-1.0, 0.0), type);
  return QuadSimilarityType::from_vertices(v[0], v[1], v[2], v[3]);
}

}  // namespace inscribe
