#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inscribe/quad.hpp"
#include "inscribe/rng.hpp"

using namespace inscribe;

TEST_CASE("vertices_from_zw") {
  const TrapezoidType square{0.5, kPi / 2};

  SUBCASE("w = 0 collapses all four points to z") {
    const Complex z(0.3, -1.7);
    for (const Complex& p : vertices_from_zw(z, Complex(0, 0), square))
      CHECK(std::abs(p - z) < 1e-15);
  }

  SUBCASE("two vertical lines at x = 0 and x = 1") {
    const auto p = vertices_from_zw(Complex(0.5, 0.0), Complex(-1.0, 1.0), square);
    CHECK(std::abs(p[0] - Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(p[1] - Complex(0.0, -0.5)) < 1e-15);
    CHECK(std::abs(p[2] - Complex(1.0, -0.5)) < 1e-15);
    CHECK(std::abs(p[3] - Complex(1.0, 0.5)) < 1e-15);
    CHECK(p[0].real() == doctest::Approx(0.0));
    CHECK(p[1].real() == doctest::Approx(0.0));
    CHECK(p[2].real() == doctest::Approx(1.0));
    CHECK(p[3].real() == doctest::Approx(1.0));
  }

  SUBCASE("annotated trapezoid with diagonal crossing (2, 2)") {
    // p3 = (0,0), p4 = (4,0), p1 = (3,3), p2 = (1,3): ratio 1/3, right angle.
    const TrapezoidType type{1.0 / 3.0, kPi / 2};
    const auto p = vertices_from_zw(Complex(2, 2), Complex(3, 3), type);
    CHECK(std::abs(p[0] - Complex(3, 3)) < 1e-12);
    CHECK(std::abs(p[1] - Complex(1, 3)) < 1e-12);
    CHECK(std::abs(p[2] - Complex(0, 0)) < 1e-12);
    CHECK(std::abs(p[3] - Complex(4, 0)) < 1e-12);
  }
}

TEST_CASE("zw_from_diagonal") {
  const TrapezoidType type{0.3, 1.2};

  auto [z0, w0] = zw_from_diagonal(Complex(0, 0), Complex(0, 0), type);
  CHECK(std::abs(z0) < 1e-15);
  CHECK(std::abs(w0) < 1e-15);

  const Complex w_ref(0.8, -0.4);
  auto [z1, w1] = zw_from_diagonal(type.c * w_ref, (type.c - 1.0) * w_ref, type);
  CHECK(std::abs(z1) < 1e-15);
  CHECK(std::abs(w1 - w_ref) < 1e-15);

  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Complex p1(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Complex p3(rng.uniform(-2, 2), rng.uniform(-2, 2));
    auto [z, w] = zw_from_diagonal(p1, p3, type);
    const auto v = vertices_from_zw(z, w, type);
    CHECK(std::abs(v[0] - p1) < 1e-15);
    CHECK(std::abs(v[2] - p3) < 1e-15);
  }
}

TEST_CASE("classify_quad") {
  SUBCASE("unit square") {
    const auto cls = classify_quad(Complex(1, 1), Complex(0, 1), Complex(0, 0), Complex(1, 0));
    REQUIRE(cls.ok);
    CHECK(cls.c == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cls.theta == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(cls.balanced);
  }

  SUBCASE("annotated trapezoid coordinates") {
    const auto cls = classify_quad(Complex(3, 3), Complex(1, 3), Complex(0, 0), Complex(4, 0));
    REQUIRE(cls.ok);
    CHECK(cls.c == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(cls.theta == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(cls.balanced);
  }

  SUBCASE("generic non-isosceles quadrilateral is rejected") {
    const auto cls =
        classify_quad(Complex(0, 0), Complex(1, 0.2), Complex(1.3, 1), Complex(-0.1, 0.9));
    CHECK_FALSE(cls.ok);
    CHECK(!cls.reason.empty());
  }

  SUBCASE("collinear labeling is rejected with a reason") {
    const auto cls = classify_quad(Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(3, 0));
    CHECK_FALSE(cls.ok);
    CHECK(cls.reason == "diagonals collinear");
  }

  SUBCASE("round trip over random types and frames") {
    SplitMix64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const TrapezoidType type{rng.uniform(0.02, 0.5), rng.uniform(0.05, kPi - 0.05)};
      const Complex z(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const Complex w = std::polar(rng.uniform(0.1, 4.0), rng.uniform(0.0, kTau));
      const auto p = vertices_from_zw(z, w, type);
      const auto cls = classify_quad(p[0], p[1], p[2], p[3]);
      REQUIRE(cls.ok);
      CHECK(std::abs(cls.c - type.c) < 1e-10);
      CHECK(std::abs(cls.theta - type.theta) < 1e-10);
      CHECK(cls.balanced);
    }
  }

  SUBCASE("similarity invariance") {
    SplitMix64 rng(9);
    const TrapezoidType type{0.27, 2.0};
    const auto p = vertices_from_zw(Complex(0.4, -0.2), Complex(1.3, 0.7), type);
    for (int i = 0; i < 100; ++i) {
      const Complex scale = std::polar(rng.uniform(0.2, 5.0), rng.uniform(0.0, kTau));
      const Complex offset(rng.uniform(-10, 10), rng.uniform(-10, 10));
      const auto cls = classify_quad(scale * p[0] + offset, scale * p[1] + offset,
                                     scale * p[2] + offset, scale * p[3] + offset);
      REQUIRE(cls.ok);
      CHECK(std::abs(cls.c - type.c) < 1e-10);
      CHECK(std::abs(cls.theta - type.theta) < 1e-10);
    }
  }

  SUBCASE("labelings with the long side first canonicalize to c <= 1/2") {
    // Build with c' = 0.7 > 1/2 directly from the defining formulas.
    const double c = 0.7, theta = 1.1;
    const Complex z(0.2, 0.5), w(1.0, -0.3);
    const Complex rw = std::polar(1.0, theta) * w;
    const auto cls = classify_quad(z + c * w, z + c * rw, z + (c - 1.0) * w, z + (c - 1.0) * rw);
    REQUIRE(cls.ok);
    CHECK(cls.c == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(cls.theta == doctest::Approx(theta).epsilon(1e-10));
    CHECK_FALSE(cls.balanced);  // |p1p2| > |p3p4| in the input labeling
  }
}

TEST_CASE("trapezoid_to_reference") {
  SUBCASE("the square type gives a square with q1 = 0, q3 = 1") {
    const auto q = trapezoid_to_reference(TrapezoidType{0.5, kPi / 2}).vertices();
    CHECK(std::abs(q[0]) < 1e-15);
    CHECK(std::abs(q[2] - Complex(1, 0)) < 1e-15);
    const double side = std::abs(q[1] - q[0]);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(q[(i + 1) % 4] - q[i]) == doctest::Approx(side).epsilon(1e-12));
  }

  SUBCASE("classify round trip over 100 random types") {
    SplitMix64 rng(21);
    for (int i = 0; i < 100; ++i) {
      const TrapezoidType type{rng.uniform(0.05, 0.5), rng.uniform(0.1, kPi - 0.1)};
      const auto q = trapezoid_to_reference(type).vertices();
      const auto cls = classify_quad(q[0], q[1], q[2], q[3]);
      REQUIRE(cls.ok);
      CHECK(std::abs(cls.c - type.c) < 1e-10);
      CHECK(std::abs(cls.theta - type.theta) < 1e-10);
    }
  }

  SUBCASE("degenerate c is rejected by the reference validation") {
    CHECK_THROWS_AS(trapezoid_to_reference(TrapezoidType{5e-7, kPi / 2}), std::invalid_argument);
  }
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS((TrapezoidType{0.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TrapezoidType{0.6, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TrapezoidType{0.3, 0.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TrapezoidType{0.3, kPi}).validate(), std::invalid_argument);
  CHECK_NOTHROW((TrapezoidType{0.5, 3.0}).validate());

  // Normalization maps v1 -> 0 and v3 -> 1.
  const auto q = QuadSimilarityType::from_vertices(Complex(1, 1), Complex(2, 0), Complex(3, 1),
                                                   Complex(2, 2.5));
  CHECK(std::abs(q.vertices()[0]) < 1e-15);
  CHECK(std::abs(q.vertices()[2] - Complex(1, 0)) < 1e-15);

  CHECK_THROWS_AS(QuadSimilarityType::from_vertices(Complex(0, 0), Complex(0, 0), Complex(1, 0),
                                                    Complex(0.5, 1)),
                  std::invalid_argument);
  // Crossing labeling: q2 and q4 on the same side of the q1q3 diagonal.
  CHECK_THROWS_AS(QuadSimilarityType::from_vertices(Complex(0, 0), Complex(0.3, -0.5),
                                                    Complex(1, 0), Complex(0.7, -0.5)),
                  std::invalid_argument);
}
