#include "inscribe/system.hpp"

#include <cmath>
#include <stdexcept>

namespace inscribe {

InscriptionParams translate(const InscriptionParams& p, int k) {
  const double d = static_cast<double>(k);
  return {p.t1 + d, p.t2 + d, p.t3 + d, p.t4 + d};
}

InscriptionParams canonical(const InscriptionParams& p) {
  return translate(p, -static_cast<int>(std::floor(p.t1)));
}

ResidualMap ResidualMap::from_trapezoid(const TrapezoidType& type) {
  type.validate();
  const Complex rho = std::polar(1.0, type.theta);
  return {type.c * (1.0 - rho), type.c + (1.0 - type.c) * rho, type.c};
}

ResidualMap ResidualMap::from_quad(const QuadSimilarityType& type) {
  const Complex q2 = type.q2(), q4 = type.q4();
  // Intersection of the reference diagonals (0,1) and (q2,q4); convexity of
  // the type guarantees Im(q4 - q2) != 0.
  const double s = -q2.imag() / (q4 - q2).imag();
  const double x = q2.real() + s * (q4 - q2).real();
  return {q2, q4, x};
}

double ResidualValue::norm() const {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
}

ResidualValue residual(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                       const InscriptionParams& params) {
  const Complex p1 = g1.eval(params.t1);
  const Complex p3 = g2.eval(params.t3);
  const Complex d = p3 - p1;
  const Complex r1 = g1.eval(params.t2) - (p1 + map.mu2 * d);
  const Complex r2 = g2.eval(params.t4) - (p1 + map.mu4 * d);
  return {{r1.real(), r1.imag(), r2.real(), r2.imag()}};
}

ResidualValue residual(const PeriodicCurve& g1, const PeriodicCurve& g2, const TrapezoidType& type,
                       const InscriptionParams& params) {
  return residual(g1, g2, ResidualMap::from_trapezoid(type), params);
}

ResidualValue general_residual(const PeriodicCurve& g1, const PeriodicCurve& g2,
                               const QuadSimilarityType& type, const InscriptionParams& params) {
  return residual(g1, g2, ResidualMap::from_quad(type), params);
}

Eigen::Matrix4d jacobian(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                         const InscriptionParams& params) {
  if (!g1.smooth() || !g2.smooth())
    throw std::invalid_argument("jacobian: requires smooth curve representations");
  const Complex d1 = g1.deriv(params.t1);
  const Complex d2 = g1.deriv(params.t2);
  const Complex d3 = g2.deriv(params.t3);
  const Complex d4 = g2.deriv(params.t4);

  const Complex r1_t1 = -(1.0 - map.mu2) * d1;
  const Complex r1_t3 = -map.mu2 * d3;
  const Complex r2_t1 = -(1.0 - map.mu4) * d1;
  const Complex r2_t3 = -map.mu4 * d3;

  Eigen::Matrix4d jac;
  jac << r1_t1.real(), d2.real(), r1_t3.real(), 0.0,  //
      r1_t1.imag(), d2.imag(), r1_t3.imag(), 0.0,     //
      r2_t1.real(), 0.0, r2_t3.real(), d4.real(),     //
      r2_t1.imag(), 0.0, r2_t3.imag(), d4.imag();
  return jac;
}

Eigen::Matrix4d jacobian(const PeriodicCurve& g1, const PeriodicCurve& g2,
                         const TrapezoidType& type, const InscriptionParams& params) {
  return jacobian(g1, g2, ResidualMap::from_trapezoid(type), params);
}

InscriptionGeometry geometry_at(const PeriodicCurve& g1, const PeriodicCurve& g2,
                                const ResidualMap& map, const InscriptionParams& params) {
  const Complex p1 = g1.eval(params.t1);
  const Complex p3 = g2.eval(params.t3);
  return {p1 + map.diag_cross * (p3 - p1),
          p1 - p3,
          {p1, g1.eval(params.t2), p3, g2.eval(params.t4)}};
}

}  // namespace inscribe
