#pragma once

#include <Eigen/Dense>
#include <array>

#include "inscribe/curve.hpp"
#include "inscribe/quad.hpp"

namespace inscribe {

// Curve parameters locating candidate vertices: p1 = g1(t1), p2 = g1(t2),
// p3 = g2(t3), p4 = g2(t4).
struct InscriptionParams {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
};

// Shifts all four parameters by the integer k; the residual is invariant.
InscriptionParams translate(const InscriptionParams& p, int k);

// Translate so t1 lands in [0, 1).
InscriptionParams canonical(const InscriptionParams& p);

// Both residual flavors predict the second diagonal affinely from the first:
// p2_hat = p1 + mu2 (p3 - p1), p4_hat = p1 + mu4 (p3 - p1). The coefficients
// are exactly the reference vertices q2, q4 of the similarity type.
struct ResidualMap {
  Complex mu2, mu4;
  double diag_cross = 0.5;  // parameter along p1->p3 where the diagonals meet

  static ResidualMap from_trapezoid(const TrapezoidType& type);
  static ResidualMap from_quad(const QuadSimilarityType& type);
};

struct ResidualValue {
  std::array<double, 4> r{};  // (Re r1, Im r1, Re r2, Im r2)
  double norm() const;
};

ResidualValue residual(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                       const InscriptionParams& params);
ResidualValue residual(const PeriodicCurve& g1, const PeriodicCurve& g2, const TrapezoidType& type,
                       const InscriptionParams& params);
ResidualValue general_residual(const PeriodicCurve& g1, const PeriodicCurve& g2,
                               const QuadSimilarityType& type, const InscriptionParams& params);

// Analytic d r / d (t1..t4); requires smooth curve representations.
Eigen::Matrix4d jacobian(const PeriodicCurve& g1, const PeriodicCurve& g2, const ResidualMap& map,
                         const InscriptionParams& params);
Eigen::Matrix4d jacobian(const PeriodicCurve& g1, const PeriodicCurve& g2,
                         const TrapezoidType& type, const InscriptionParams& params);

// Diagonal data and the four on-curve vertices at the given parameters.
struct InscriptionGeometry {
  Complex z, w;
  std::array<Complex, 4> vertices;
};
InscriptionGeometry geometry_at(const PeriodicCurve& g1, const PeriodicCurve& g2,
                                const ResidualMap& map, const InscriptionParams& params);

}  // namespace inscribe
