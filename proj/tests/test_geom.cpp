#include <gtest/gtest.h>

#include "hagge/geom.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace hagge {
namespace {

using testing::Gen;
using testing::pt;
using testing::q;
using R = Rational;
using P = Point<R>;

const Circle<R> kUnit{q(0), q(0), q(-1)};

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected GeometryError";
  return ErrorCode::InvalidScene;
}

TEST(LineThrough, Examples) {
  EXPECT_TRUE(equivalent(line_through(pt(q(0), q(1)), pt(q(0), q(1, 2))), Line<R>(q(1), q(0), q(0))));
  EXPECT_TRUE(equivalent(line_through(pt(q(1), q(0)), pt(q(0), q(0))), Line<R>(q(0), q(1), q(0))));
  EXPECT_TRUE(equivalent(line_through(pt(q(0), q(1)), pt(q(1), q(0))), Line<R>(q(1), q(1), q(-1))));
}

TEST(LineThrough, CoincidentPointsRejected) {
  EXPECT_EQ(error_of([] { line_through(pt(q(1, 3), q(2)), pt(q(1, 3), q(2))); }), ErrorCode::CoincidentPoints);
}

TEST(Line, ZeroNormalRejectedAndEquivalenceIsProportionality) {
  EXPECT_EQ(error_of([] { Line<R>(q(0), q(0), q(1)); }), ErrorCode::InvalidLine);
  const Line<R> l(q(2), q(-4), q(6));
  EXPECT_TRUE(equivalent(l, Line<R>(q(-1, 3), q(2, 3), q(-1))));
  EXPECT_FALSE(equivalent(l, Line<R>(q(1), q(-2), q(4))));
  EXPECT_EQ(l.normalized(), Line<R>(q(1), q(-2), q(3)));
  EXPECT_EQ(Line<R>(q(0), q(5), q(10)).normalized(), Line<R>(q(0), q(1), q(2)));
}

TEST(SecondIntersection, Examples) {
  auto diameter = second_intersection(kUnit, pt(q(1), q(0)), pt(q(0), q(0)));
  EXPECT_EQ(diameter.point, pt(q(-1), q(0)));
  EXPECT_FALSE(diameter.tangent);

  auto vertical = second_intersection(kUnit, pt(q(0), q(1)), pt(q(0), q(1, 2)));
  EXPECT_EQ(vertical.point, pt(q(0), q(-1)));
  EXPECT_FALSE(vertical.tangent);

  auto tangent = second_intersection(kUnit, pt(q(1), q(0)), pt(q(1), q(1)));
  EXPECT_EQ(tangent.point, pt(q(1), q(0)));
  EXPECT_TRUE(tangent.tangent);
}

TEST(SecondIntersection, Errors) {
  EXPECT_EQ(error_of([] { second_intersection(kUnit, pt(q(1, 2), q(0)), pt(q(0), q(0))); }),
            ErrorCode::PointNotOnCircle);
  EXPECT_EQ(error_of([] { second_intersection(kUnit, pt(q(1), q(0)), pt(q(1), q(0))); }),
            ErrorCode::CoincidentPoints);
}

TEST(SecondIntersection, PropertyMatchesPerpendicularFootOracle) {
  Gen gen(1);
  for (int trial = 0; trial < 300; ++trial) {
    const P center = gen.point();
    R r = abs(gen.rational());
    if (r.is_zero()) r = q(1);
    const Circle<R> c = circle_from_center(center, r * r);
    const P a = gen.on_circle(center, r);
    P d = gen.point();
    if (d == a) continue;
    const auto got = second_intersection(c, a, d);
    EXPECT_TRUE(on_circle(c, got.point));
    EXPECT_TRUE(collinear(a, d, got.point));
    EXPECT_EQ(got.point, oracle::chord_far_end(center, a, d));
    // Tangent exactly when the chord direction is perpendicular to the radius.
    EXPECT_EQ(got.tangent, dot(P(d - a), P(a - center)).is_zero());
    EXPECT_EQ(got.tangent, got.point == a);
  }
}

TEST(SecondIntersection, TangencyDetectedOnRandomTangents) {
  Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const P center = gen.point();
    const P a = gen.on_circle(center, q(3, 2));
    const Circle<R> c = circle_from_center(center, q(9, 4));
    const P radius = a - center;
    const P d = a + gen.rational() * P{-radius.y, radius.x};
    if (d == a) continue;
    const auto got = second_intersection(c, a, d);
    EXPECT_TRUE(got.tangent);
    EXPECT_EQ(got.point, a);
  }
}

TEST(CircleThrough3, Examples) {
  EXPECT_EQ(circle_through_3(pt(q(1), q(0)), pt(q(-1), q(0)), pt(q(0), q(1))), kUnit);

  const auto s1 = circle_through_3(pt(q(-1, 2), q(0)), pt(q(-1, 10), q(4, 5)), pt(q(-9, 10), q(4, 5)));
  EXPECT_EQ(s1.center(), pt(q(-1, 2), q(1, 2)));
  EXPECT_EQ(s1.radius_sq(), q(1, 4));

  const auto h = circle_through_3(pt(q(0), q(1)), pt(q(-1, 5), q(2, 5)), pt(q(1, 5), q(2, 5)));
  EXPECT_EQ(h.center(), pt(q(0), q(2, 3)));
  EXPECT_EQ(h.radius_sq(), q(1, 9));
}

TEST(CircleThrough3, CollinearRejected) {
  EXPECT_EQ(error_of([] { circle_through_3(pt(q(0), q(0)), pt(q(1), q(1)), pt(q(3), q(3))); }),
            ErrorCode::CollinearPoints);
  EXPECT_EQ(error_of([] { circle_through_3(pt(q(0), q(0)), pt(q(0), q(0)), pt(q(3), q(3))); }),
            ErrorCode::CollinearPoints);
}

TEST(CircleThrough3, PropertyAgreesWithBisectorOracle) {
  Gen gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const P a = gen.point(), b = gen.point(), c = gen.point();
    if (collinear(a, b, c)) continue;
    const Circle<R> circ = circle_through_3(a, b, c);
    EXPECT_TRUE(on_circle(circ, a));
    EXPECT_TRUE(on_circle(circ, b));
    EXPECT_TRUE(on_circle(circ, c));
    const P center = oracle::circumcenter(a, b, c);
    EXPECT_EQ(circ.center(), center);
    EXPECT_EQ(circ.radius_sq(), oracle::squared_distance(center, a));
  }
}

TEST(FourthVertex, Examples) {
  EXPECT_EQ(fourth_vertex(pt(q(0), q(1)), pt(q(1, 2), q(0)), pt(q(0), q(-1))), pt(q(-1, 2), q(0)));
  EXPECT_EQ(fourth_vertex(pt(q(1), q(0)), pt(q(1, 2), q(0)), pt(q(-3, 5), q(4, 5))), pt(q(-1, 10), q(4, 5)));
  const P a = pt(q(2, 7), q(-1));
  const P e = pt(q(5), q(1, 3));
  EXPECT_EQ(fourth_vertex(a, a, e), e);
}

TEST(FourthVertex, PropertyDiagonalsShareMidpoint) {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const P a = gen.point(), qq = gen.point(), e = gen.point();
    EXPECT_EQ(midpoint(a, e), midpoint(qq, fourth_vertex(a, qq, e)));
  }
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect_across_line(pt(q(0), q(-1)), Line<R>(q(0), q(1), q(0))), pt(q(0), q(1)));
  EXPECT_EQ(reflect_across_line(pt(q(-3, 5), q(4, 5)), Line<R>(q(1), q(-1), q(1))), pt(q(-1, 5), q(2, 5)));
  EXPECT_EQ(reflect_across_line(pt(q(3, 5), q(4, 5)), Line<R>(q(1), q(1), q(-1))), pt(q(1, 5), q(2, 5)));
}

TEST(Reflect, PropertyInvolutionFixedLineAndProjectionOracle) {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const P a = gen.point(), b = gen.point(), p = gen.point();
    if (a == b) continue;
    const Line<R> l = line_through(a, b);
    const P image = reflect_across_line(p, l);
    EXPECT_EQ(reflect_across_line(image, l), p);
    EXPECT_EQ(image, oracle::reflect(p, a, b));
    const P on = midpoint(a, b);
    EXPECT_EQ(reflect_across_line(on, l), on);
  }
}

TEST(Primitives, MidpointCollinearOnCircle) {
  EXPECT_EQ(midpoint(pt(q(0), q(1)), pt(q(0), q(-1))), pt(q(0), q(0)));
  EXPECT_TRUE(collinear(pt(q(1, 2), q(0)), pt(q(0), q(0)), pt(q(-1, 2), q(0))));
  EXPECT_FALSE(collinear(pt(q(1, 2), q(0)), pt(q(0), q(1, 1000)), pt(q(-1, 2), q(0))));
  EXPECT_TRUE(on_circle(kUnit, pt(q(3, 5), q(4, 5))));
  EXPECT_FALSE(on_circle(kUnit, pt(q(3, 5), q(4, 5) + q(1, 1000000))));
}

TEST(Primitives, DoubleBackendUsesScaledTolerance) {
  const Circle<double> unit{0.0, 0.0, -1.0};
  EXPECT_TRUE(on_circle(unit, Point<double>{0.6, 0.8 + 1e-12}));
  EXPECT_FALSE(on_circle(unit, Point<double>{0.6, 0.8 + 1e-6}));
  const Circle<double> big = circle_from_center(Point<double>{1e4, -2e4}, 1e8);
  EXPECT_TRUE(on_circle(big, Point<double>{1e4 + 1e4 * (1 + 1e-13), -2e4}));
  EXPECT_TRUE(collinear(Point<double>{0, 0}, Point<double>{1, 1}, Point<double>{1e6, 1e6 + 1e-5}));
  const auto chord = second_intersection(unit, Point<double>{0.0, 1.0}, Point<double>{0.0, 0.5});
  EXPECT_NEAR(chord.point.y, -1.0, 1e-15);
}

TEST(Homothety, FactorsTwoOneZero) {
  const Circle<R> c = circle_from_center(pt(q(0), q(1, 4)), q(1, 16));
  const P center = pt(q(1, 2), q(0));
  const Circle<R> doubled = homothety(c, center, q(2));
  EXPECT_EQ(doubled.center(), pt(q(-1, 2), q(1, 2)));
  EXPECT_EQ(doubled.radius_sq(), q(1, 4));
  EXPECT_EQ(homothety(c, center, q(1)), c);
  const Circle<R> collapsed = homothety(c, center, q(0));
  EXPECT_EQ(collapsed.center(), center);
  EXPECT_EQ(collapsed.radius_sq(), q(0));
}

}  // namespace
}  // namespace hagge
