#pragma once

#include <array>
#include <optional>
#include <string>

#include "inscribe/curve.hpp"

namespace inscribe {

// Similarity class of an isosceles trapezoid: diagonals meet with ratio
// c/(1-c) and angle theta between them.
struct TrapezoidType {
  double c = 0.5;
  double theta = kPi / 2;

  // Requires c in (0, 1/2] and theta in (0, pi).
  void validate() const;
};

// Four reference vertices up to similarity, normalized to q1 = 0, q3 = 1.
// Diagonals are q1q3 and q2q4. Used by the conjecture explorer.
class QuadSimilarityType {
public:
  // Normalizes the given vertices (maps v1 -> 0, v3 -> 1); rejects nearly
  // coincident vertices and non-convex labelings.
  static QuadSimilarityType from_vertices(Complex v1, Complex v2, Complex v3, Complex v4);

  const std::array<Complex, 4>& vertices() const { return q_; }
  Complex q2() const { return q_[1]; }
  Complex q4() const { return q_[3]; }

private:
  std::array<Complex, 4> q_{};
};

// p1 = z + c w, p2 = z + c e^{i theta} w, p3 = z + (c-1) w,
// p4 = z + (c-1) e^{i theta} w. With w = 0 all four collapse to z.
std::array<Complex, 4> vertices_from_zw(Complex z, Complex w, const TrapezoidType& type);

// Inverse on the first diagonal: w = p1 - p3, z = p1 - c w.
std::pair<Complex, Complex> zw_from_diagonal(Complex p1, Complex p3, const TrapezoidType& type);

struct Classification {
  bool ok = false;
  double c = 0.0;
  double theta = 0.0;
  bool balanced = false;
  std::string reason;  // degeneracy reason when !ok
};

// Decides whether the labeled quadrilateral is an isosceles trapezoid within
// tol (absolute, on unit-diameter-normalized coordinates). Returns its (c,
// theta) with c normalized into (0, 1/2]; balanced reports whether the input
// labeling had |p1p2| <= |p3p4|.
Classification classify_quad(Complex p1, Complex p2, Complex p3, Complex p4, double tol = 1e-8);

// Reference vertices of the trapezoid type with q1 = 0, q3 = 1.
QuadSimilarityType trapezoid_to_reference(const TrapezoidType& type);

}  // namespace inscribe
