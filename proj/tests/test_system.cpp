#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inscribe/experiments.hpp"
#include "inscribe/rng.hpp"
#include "inscribe/solver.hpp"
#include "inscribe/system.hpp"

using namespace inscribe;

namespace {

PeriodicCurve perturbed_line(double alpha, double amplitude, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Complex> coeffs(7, Complex(0, 0));
  coeffs[3] = Complex(alpha, 0.0);
  for (int k = 1; k <= 3; ++k) {
    coeffs[3 + k] = std::polar(amplitude * std::pow(2.0, -k), kTau * rng.next_double());
    coeffs[3 - k] = std::polar(amplitude * std::pow(2.0, -k), kTau * rng.next_double());
  }
  return PeriodicCurve::fourier_symmetric(std::move(coeffs));
}

}  // namespace

TEST_CASE("residual vanishes on the closed-form vertical-line solutions") {
  const PeriodicCurve g1 = PeriodicCurve::vertical(0.0);
  const PeriodicCurve g2 = PeriodicCurve::vertical(1.0);
  const TrapezoidType type{0.5, kPi / 2};

  const Inscription ins = vertical_line_solutions(0.0, 1.0, type, 0.0);
  CHECK(residual(g1, g2, type, ins.params).norm() < 1e-14);

  SplitMix64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const TrapezoidType t{rng.uniform(0.05, 0.5), rng.uniform(0.1, kPi - 0.1)};
    const double a1 = rng.uniform(-2, 2);
    const double a2 = a1 + rng.uniform(0.2, 2.0);
    const Inscription v = vertical_line_solutions(a1, a2, t, rng.uniform(-1, 1));
    CHECK(residual(PeriodicCurve::vertical(a1), PeriodicCurve::vertical(a2), t, v.params).norm() <
          1e-12);
  }
}

TEST_CASE("w never vanishes on disjoint curves") {
  const PeriodicCurve g1 = perturbed_line(0.0, 0.1, 11);
  const PeriodicCurve g2 = perturbed_line(1.0, 0.1, 12);
  DistanceWitness wit;
  REQUIRE(is_disjoint(g1, g2, 0.1, &wit));

  const ResidualMap map = ResidualMap::from_trapezoid(TrapezoidType{0.4, 1.0});
  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const InscriptionParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                              rng.uniform(-2, 2)};
    const auto geo = geometry_at(g1, g2, map, p);
    CHECK(std::abs(geo.w) >= wit.distance - 1e-12);
  }
}

TEST_CASE("residual near vertical lines scales with the perturbation") {
  const double amplitude = 1e-3;
  const PeriodicCurve g1 = perturbed_line(0.0, amplitude, 31);
  const PeriodicCurve g2 = perturbed_line(1.0, amplitude, 32);
  const TrapezoidType type{0.5, kPi / 2};
  const Inscription line_solution = vertical_line_solutions(0.0, 1.0, type, 0.3);
  const double r = residual(g1, g2, type, line_solution.params).norm();
  CHECK(r > 0.0);
  CHECK(r < 20.0 * amplitude);
}

TEST_CASE("jacobian") {
  const PeriodicCurve g1 = perturbed_line(-0.5, 0.12, 41);
  const PeriodicCurve g2 = perturbed_line(0.5, 0.12, 42);
  const TrapezoidType type{0.3, 2.1};
  const ResidualMap map = ResidualMap::from_trapezoid(type);

  SUBCASE("columns for t2 and t4 are the curve tangents") {
    const InscriptionParams p{0.1, 0.4, -0.2, 0.7};
    const Eigen::Matrix4d jac = jacobian(g1, g2, map, p);
    const Complex d2 = g1.deriv(p.t2), d4 = g2.deriv(p.t4);
    CHECK(jac(0, 1) == doctest::Approx(d2.real()).epsilon(1e-14));
    CHECK(jac(1, 1) == doctest::Approx(d2.imag()).epsilon(1e-14));
    CHECK(jac(2, 1) == doctest::Approx(0.0));
    CHECK(jac(3, 1) == doctest::Approx(0.0));
    CHECK(jac(2, 3) == doctest::Approx(d4.real()).epsilon(1e-14));
    CHECK(jac(3, 3) == doctest::Approx(d4.imag()).epsilon(1e-14));
    CHECK(jac(0, 3) == doctest::Approx(0.0));
    CHECK(jac(1, 3) == doctest::Approx(0.0));
  }

  SUBCASE("matches central finite differences entrywise") {
    SplitMix64 rng(43);
    const double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
      InscriptionParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                          rng.uniform(-1, 1)};
      const Eigen::Matrix4d jac = jacobian(g1, g2, map, p);
      double* slots[4] = {&p.t1, &p.t2, &p.t3, &p.t4};
      for (int col = 0; col < 4; ++col) {
        const double saved = *slots[col];
        *slots[col] = saved + h;
        const ResidualValue plus = residual(g1, g2, map, p);
        *slots[col] = saved - h;
        const ResidualValue minus = residual(g1, g2, map, p);
        *slots[col] = saved;
        for (int row = 0; row < 4; ++row) {
          const double fd = (plus.r[row] - minus.r[row]) / (2.0 * h);
          CHECK(std::abs(jac(row, col) - fd) < 1e-5);
        }
      }
    }
  }

  SUBCASE("vertical lines: rank 3 with kernel along the family direction") {
    const PeriodicCurve l1 = PeriodicCurve::vertical(0.0);
    const PeriodicCurve l2 = PeriodicCurve::vertical(1.0);
    const TrapezoidType square{0.5, kPi / 2};
    const Inscription ins = vertical_line_solutions(0.0, 1.0, square, 0.25);
    const Eigen::Matrix4d jac = jacobian(l1, l2, ResidualMap::from_trapezoid(square), ins.params);
    const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac);
    CHECK(svd.singularValues()(2) > 1e-6);   // rank 3
    CHECK(svd.singularValues()(3) < 1e-12);  // one-dimensional kernel
    const Eigen::Vector4d shift = Eigen::Vector4d::Ones().normalized();
    CHECK((jac * shift).norm() < 1e-12);
  }

  SUBCASE("polyline representations are rejected") {
    std::vector<Complex> samples;
    for (int j = 0; j < 16; ++j) samples.push_back(Complex(0.0, j / 16.0));
    const PeriodicCurve poly = PeriodicCurve::polyline(samples);
    CHECK_THROWS_AS(jacobian(poly, g2, map, InscriptionParams{0, 0, 0, 0}),
                    std::invalid_argument);
  }
}

TEST_CASE("general_residual") {
  const PeriodicCurve g1 = perturbed_line(0.0, 0.1, 51);
  const PeriodicCurve g2 = perturbed_line(1.0, 0.1, 52);

  SUBCASE("reduces exactly to the trapezoid residual on reference types") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
      const TrapezoidType type{rng.uniform(0.05, 0.5), rng.uniform(0.1, kPi - 0.1)};
      const QuadSimilarityType q = trapezoid_to_reference(type);
      const InscriptionParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                                rng.uniform(-2, 2)};
      const ResidualValue a = residual(g1, g2, type, p);
      const ResidualValue b = general_residual(g1, g2, q, p);
      for (int i = 0; i < 4; ++i) CHECK(std::abs(a.r[i] - b.r[i]) < 1e-14);
    }
  }

  SUBCASE("square type on vertical lines matches the closed-form family") {
    const PeriodicCurve l1 = PeriodicCurve::vertical(0.0);
    const PeriodicCurve l2 = PeriodicCurve::vertical(1.0);
    const TrapezoidType square{0.5, kPi / 2};
    const QuadSimilarityType q = trapezoid_to_reference(square);
    for (double s : {-0.4, 0.0, 0.7, 1.9}) {
      const Inscription ins = vertical_line_solutions(0.0, 1.0, square, s);
      CHECK(general_residual(l1, l2, q, ins.params).norm() < 1e-12);
    }
  }
}

TEST_CASE("translate") {
  const PeriodicCurve g1 = perturbed_line(0.0, 0.15, 61);
  const PeriodicCurve g2 = perturbed_line(1.0, 0.15, 62);
  const TrapezoidType type{0.25, 0.9};
  const ResidualMap map = ResidualMap::from_trapezoid(type);

  const InscriptionParams p{0.3, 0.5, -0.1, 0.2};
  const InscriptionParams same = translate(p, 0);
  CHECK(same.t1 == p.t1);
  CHECK(same.t4 == p.t4);

  SplitMix64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const InscriptionParams q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                              rng.uniform(-1, 1)};
    const ResidualValue base = residual(g1, g2, map, q);
    for (int k = -3; k <= 3; ++k) {
      const ResidualValue moved = residual(g1, g2, map, translate(q, k));
      for (int i = 0; i < 4; ++i) CHECK(std::abs(base.r[i] - moved.r[i]) < 1e-12);
    }
  }

  // Vertices of the translate are the original vertices shifted by i.
  const auto geo0 = geometry_at(g1, g2, map, p);
  const auto geo1 = geometry_at(g1, g2, map, translate(p, 1));
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(geo1.vertices[i] - geo0.vertices[i] - Complex(0, 1)) < 1e-12);

  // Canonicalization lands t1 in [0, 1).
  const InscriptionParams far{-3.7, 1.2, 0.4, -0.9};
  const InscriptionParams canon = canonical(far);
  CHECK(canon.t1 >= 0.0);
  CHECK(canon.t1 < 1.0);
  CHECK(canon.t2 - canon.t1 == doctest::Approx(far.t2 - far.t1).epsilon(1e-12));
}

TEST_CASE("zero-residual certificates classify back to the requested type") {
  const auto [g1, g2] = random_pair(7, 3, 0.1, 1.0);
  const TrapezoidType type{0.35, 1.3};
  SolveConfig config;
  const SolveResult result = solve_all(g1, g2, type, config);
  REQUIRE(result.inscriptions.size() >= 1);
  for (const auto& ins : result.inscriptions) {
    if (ins.residual_norm < 1e-9 && std::abs(ins.w) > 1e-6) {
      const auto cls =
          classify_quad(ins.vertices[0], ins.vertices[1], ins.vertices[2], ins.vertices[3], 1e-6);
      REQUIRE(cls.ok);
      CHECK(std::abs(cls.c - type.c) < 1e-6);
      CHECK(std::abs(cls.theta - type.theta) < 1e-6);
      CHECK(cls.balanced);
    }
  }
}
