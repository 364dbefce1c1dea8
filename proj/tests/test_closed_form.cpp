#include <gtest/gtest.h>

#include "hagge/closed_form.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace hagge {
namespace {

using testing::Gen;
using testing::pt;
using testing::q;
using R = Rational;
using P = Point<R>;

const P kD = pt(q(0), q(1, 2));
const Circle<R> kUnit{q(0), q(0), q(-1)};

TEST(VertexFromParam, Examples) {
  EXPECT_EQ(vertex_from_param(q(0)), pt(q(0), q(1)));
  EXPECT_EQ(vertex_from_param(q(1)), pt(q(1), q(0)));
  EXPECT_EQ(vertex_from_param(q(-1)), pt(q(-1), q(0)));
}

TEST(VertexFromParam, AlwaysOnUnitCircle) {
  Gen gen(10);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(on_circle(kUnit, vertex_from_param(gen.rational(500, 97))));
}

TEST(ChordLine, Examples) {
  EXPECT_TRUE(equivalent(chord_line(q(0), kD), Line<R>(q(1), q(0), q(0))));
  EXPECT_TRUE(equivalent(chord_line(q(1), pt(q(0), q(0))), Line<R>(q(0), q(1), q(0))));
  EXPECT_EQ(chord_line(q(1), pt(q(0), q(0))), Line<R>(q(0), q(2), q(0)));

  Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    const R m = gen.rational(), n = gen.rational();
    if (m.is_zero() && n == q(1)) continue;
    EXPECT_EQ(chord_line(q(0), pt(m, n)), Line<R>(n - q(1), -m, m));
  }
}

TEST(ChordLine, ProportionalToLineThroughVertexAndD) {
  Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    const R a = gen.rational();
    const P d = gen.point();
    if (vertex_from_param(a) == d) continue;
    EXPECT_TRUE(equivalent(chord_line(a, d), line_through(vertex_from_param(a), d)));
  }
}

TEST(ChordLine, DAtVertexRejected) {
  try {
    chord_line(q(1), pt(q(1), q(0)));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DIsVertex);
  }
  EXPECT_THROW(chord_end(q(0), pt(q(0), q(1))), GeometryError);
  EXPECT_THROW(special_point(q(0), pt(q(0), q(1)), q(1)), GeometryError);
  EXPECT_THROW(diagonal_midpoint(q(0), pt(q(0), q(1))), GeometryError);
}

TEST(ChordEnd, Examples) {
  EXPECT_EQ(chord_end(q(0), kD), pt(q(0), q(-1)));
  EXPECT_EQ(chord_end(q(1), kD), pt(q(-3, 5), q(4, 5)));
  EXPECT_EQ(chord_end(q(-1), kD), pt(q(3, 5), q(4, 5)));
}

TEST(ChordEnd, MatchesGeometricChordIncludingTangents) {
  Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    const R a = gen.rational();
    const P d = gen.point();
    const P vertex = vertex_from_param(a);
    if (vertex == d) continue;
    const P e = chord_end(a, d);
    EXPECT_EQ(e, second_intersection(kUnit, vertex, d).point);
    EXPECT_EQ(e, oracle::chord_far_end(pt(q(0), q(0)), vertex, d));
    EXPECT_TRUE(on_circle(kUnit, e));
  }
  // Tangent at (1, 0): D straight above the vertex.
  EXPECT_EQ(chord_end(q(1), pt(q(1), q(3, 7))), pt(q(1), q(0)));
}

TEST(SpecialPoint, Examples) {
  EXPECT_EQ(special_point(q(0), kD, q(1, 2)), pt(q(-1, 2), q(0)));
  EXPECT_EQ(special_point(q(1), kD, q(1, 2)), pt(q(-1, 10), q(4, 5)));
  EXPECT_EQ(special_point(q(-1), kD, q(1, 2)), pt(q(-9, 10), q(4, 5)));
}

TEST(SpecialPoint, IsFourthVertexOfParallelogram) {
  Gen gen(14);
  for (int i = 0; i < 300; ++i) {
    const R a = gen.rational(), k = gen.rational();
    const P d = gen.point();
    const P vertex = vertex_from_param(a);
    if (vertex == d) continue;
    const P e = oracle::chord_far_end(pt(q(0), q(0)), vertex, d);
    EXPECT_EQ(special_point(a, d, k), vertex + e - pt(k, q(0)));
  }
}

TEST(DiagonalMidpoint, Examples) {
  EXPECT_EQ(diagonal_midpoint(q(0), kD), pt(q(0), q(0)));
  EXPECT_EQ(diagonal_midpoint(q(1), kD), pt(q(1, 5), q(2, 5)));
  EXPECT_EQ(diagonal_midpoint(q(-1), kD), pt(q(-1, 5), q(2, 5)));
}

TEST(DiagonalMidpoint, MidpointOfChordAndIndependentOfK) {
  Gen gen(15);
  for (int i = 0; i < 300; ++i) {
    const R a = gen.rational(), k1 = gen.rational(), k2 = gen.rational();
    const P d = gen.point();
    const P vertex = vertex_from_param(a);
    if (vertex == d) continue;
    const P um = diagonal_midpoint(a, d);
    EXPECT_EQ(um, midpoint(vertex, chord_end(a, d)));
    EXPECT_EQ(um, midpoint(pt(k1, q(0)), special_point(a, d, k1)));
    EXPECT_EQ(um, midpoint(pt(k2, q(0)), special_point(a, d, k2)));
  }
}

TEST(SpecialCircle, Examples) {
  const Circle<R> s1 = special_circle(kD, q(1, 2));
  EXPECT_EQ(s1, (Circle<R>{q(1, 2), q(-1, 2), q(1, 4)}));
  EXPECT_EQ(s1.center(), pt(q(-1, 2), q(1, 2)));
  EXPECT_EQ(s1.radius_sq(), q(1, 4));
  EXPECT_EQ(s1, circle_through_3(pt(q(-1, 2), q(0)), pt(q(-1, 10), q(4, 5)), pt(q(-9, 10), q(4, 5))));

  Gen gen(16);
  for (int i = 0; i < 20; ++i) {
    const P d = gen.point();
    if (d == pt(q(0), q(0))) continue;
    const Circle<R> at_o = special_circle(d, q(0));
    EXPECT_EQ(at_o, (Circle<R>{-d.x, -d.y, q(0)}));
    EXPECT_EQ(at_o.center(), d);
    EXPECT_TRUE(on_circle(at_o, pt(q(0), q(0))));
  }

  try {
    special_circle(pt(q(0), q(0)), q(3, 4));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePointCircle);
  }
}

TEST(SpecialCircle, CentreRadiusAndPMembership) {
  Gen gen(17);
  for (int i = 0; i < 200; ++i) {
    const P d = gen.point();
    const R k = gen.rational();
    if (d == pt(q(0), q(0))) continue;
    const Circle<R> c = special_circle(d, k);
    EXPECT_EQ(c.center(), pt(d.x - k, d.y));
    EXPECT_EQ(c.radius_sq(), dot(d, d));
    EXPECT_EQ(c.t, k * (k - q(2) * d.x));
    EXPECT_TRUE(on_circle(c, pt(-k, q(0))));
  }
}

// Regression for the misprinted y-coefficient -2mn: it only coincides with
// the oracle circle when n = 0 or m = 1.
TEST(SpecialCircle, PrintedYCoefficientFailsOracleExactlyWhenNNonzeroAndMNotOne) {
  Gen gen(18);
  int disagreements = 0;
  int agreements = 0;
  for (int i = 0; i < 300; ++i) {
    const R a = gen.rational(), b = gen.rational(), c = gen.rational(), k = gen.rational();
    P d = gen.point();
    if (i % 10 == 0) d.x = q(1);
    if (i % 10 == 1) d.y = q(0);
    if (a == b || b == c || a == c || d == pt(q(0), q(0))) continue;
    const P va = vertex_from_param(a), vb = vertex_from_param(b), vc = vertex_from_param(c);
    if (va == d || vb == d || vc == d) continue;
    const P u = special_point(a, d, k), v = special_point(b, d, k), w = special_point(c, d, k);
    if (collinear(u, v, w)) continue;
    const Circle<R> fitted = circle_through_3(u, v, w);
    EXPECT_EQ(fitted, special_circle(d, k));
    const bool should_differ = !d.y.is_zero() && d.x != q(1);
    EXPECT_EQ(fitted != printed_special_circle(d, k), should_differ);
    (should_differ ? disagreements : agreements)++;
  }
  EXPECT_GT(disagreements, 100);
  EXPECT_GT(agreements, 10);
}

TEST(MidpointCircle, Examples) {
  const Circle<R> s1 = midpoint_circle(kD);
  EXPECT_EQ(s1, (Circle<R>{q(0), q(-1, 4), q(0)}));
  for (const P& x : {pt(q(0), q(0)), kD, pt(q(1, 5), q(2, 5)), pt(q(-1, 5), q(2, 5))}) {
    EXPECT_TRUE(on_circle(s1, x));
  }
  const Circle<R> unit_d = midpoint_circle(pt(q(1), q(0)));
  EXPECT_EQ(unit_d, (Circle<R>{q(-1, 2), q(0), q(0)}));
  EXPECT_EQ(unit_d.center(), pt(q(1, 2), q(0)));
  EXPECT_EQ(unit_d.radius_sq(), q(1, 4));
  EXPECT_THROW(midpoint_circle(pt(q(0), q(0))), GeometryError);

  Gen gen(19);
  for (int i = 0; i < 50; ++i) {
    const P d = gen.point();
    if (d == pt(q(0), q(0))) continue;
    EXPECT_TRUE(midpoint_circle(d).evaluate(pt(q(0), q(0))).is_zero());
  }
}

}  // namespace
}  // namespace hagge
