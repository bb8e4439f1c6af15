#include <gtest/gtest.h>

#include <random>

#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "support.hpp"

namespace skein {
namespace {

TEST(CurveClass, Canonicalization) {
  EXPECT_EQ(CurveClass(1, -1), CurveClass(-1, 1));
  EXPECT_EQ(CurveClass(1, -1).r(), -1);
  EXPECT_EQ(CurveClass(1, -1).s(), 1);
  EXPECT_EQ(CurveClass(-3, 0), CurveClass(3, 0));
  EXPECT_EQ(CurveClass(-3, 0).r(), 3);
  EXPECT_THROW(CurveClass(0, 0), Error);
}

TEST(CurveClass, GcdDecompose) {
  auto d = gcd_decompose(CurveClass(4, 2));
  EXPECT_EQ(d.d, 2);
  EXPECT_EQ(d.primitive, CurveClass(2, 1));
  d = gcd_decompose(CurveClass(0, 3));
  EXPECT_EQ(d.d, 3);
  EXPECT_EQ(d.primitive, CurveClass(0, 1));
  d = gcd_decompose(CurveClass(1, -1));
  EXPECT_EQ(d.d, 1);
  EXPECT_EQ(d.primitive, CurveClass(-1, 1));
  EXPECT_EQ(CurveClass(6, 4).scaled_primitive(5), CurveClass(15, 10));
  EXPECT_THROW(CurveClass(6, 4).scaled_primitive(0), Error);
}

TEST(CurveClass, ParseAndPrint) {
  EXPECT_EQ(CurveClass::Parse("(2,-1)"), CurveClass(-2, 1));
  EXPECT_EQ(CurveClass::Parse(" ( 3 , 0 ) "), CurveClass(3, 0));
  EXPECT_EQ(CurveClass(2, -1).ToString(), "(-2,1)");
  try {
    (void)CurveClass::Parse("(1;2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(CurveClass::Parse("(0,0)"), ParseError);
  EXPECT_THROW(CurveClass::Parse("(1,2"), ParseError);
  EXPECT_THROW(CurveClass::Parse("(1,2)x"), ParseError);
}

TEST(MappingClass, Examples) {
  CurveClass c(0, 1);
  EXPECT_EQ(mcg_apply(MappingClass::Sigma(), c), CurveClass(1, 1));
  for (int n = 1; n <= 10; ++n) {
    c = mcg_apply(MappingClass::Sigma(), c);
    EXPECT_EQ(c, CurveClass(n, 1));
    EXPECT_EQ(mcg_apply(MappingClass::SigmaPower(n), CurveClass(0, 1)), CurveClass(n, 1));
  }
  EXPECT_EQ(mcg_apply(MappingClass::Identity(), CurveClass(3, 7)), CurveClass(3, 7));
  EXPECT_EQ(mcg_apply(MappingClass::Rotation(), CurveClass(1, 0)), CurveClass(0, 1));
  EXPECT_THROW(MappingClass(2, 0, 0, 1), Error);
  EXPECT_EQ(MappingClass::SigmaPower(-3).apply(CurveClass(0, 1)), CurveClass(-3, 1));
}

TEST(IntersectionNumber, Examples) {
  EXPECT_EQ(intersection_number(CurveClass(1, 0), CurveClass(0, 1)), 1);
  EXPECT_EQ(intersection_number(CurveClass(1, 0), CurveClass(1, 0)), 0);
  EXPECT_EQ(intersection_number(CurveClass(1, 2), CurveClass(1, 0)), 2);
  EXPECT_THROW(intersection_number(CurveClass(2, 0), CurveClass(0, 1)), Error);
}

MappingClass RandomMapping(std::mt19937& rng) {
  MappingClass m = MappingClass::Identity();
  std::uniform_int_distribution<int> step(0, 3);
  for (int i = 0; i < 6; ++i) {
    switch (step(rng)) {
      case 0: m = m * MappingClass::Sigma(); break;
      case 1: m = m * MappingClass::Sigma().inverse(); break;
      case 2: m = m * MappingClass::Rotation(); break;
      default: break;
    }
  }
  return m;
}

TEST(CurveProperty, ActionPreservesInvariants) {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    const MappingClass m = RandomMapping(rng);
    const CurveClass a = testing::RandomSlope(rng, 9);
    const CurveClass b = testing::RandomSlope(rng, 9);
    EXPECT_EQ(gcd_decompose(m.apply(a)).d, gcd_decompose(a).d);
    EXPECT_EQ(m.inverse().apply(m.apply(a)), a);
    const CurveClass pa = a.primitive();
    const CurveClass pb = b.primitive();
    EXPECT_EQ(intersection_number(m.apply(pa), m.apply(pb)), intersection_number(pa, pb));
  }
}

TEST(CurveProperty, CanonicalizationIdempotent) {
  std::mt19937 rng(19);
  for (int i = 0; i < 500; ++i) {
    const CurveClass c = testing::RandomSlope(rng, 20);
    EXPECT_EQ(CurveClass(c.r(), c.s()), c);
    EXPECT_EQ(CurveClass(-c.r(), -c.s()), c);
    EXPECT_TRUE(c.s() > 0 || (c.s() == 0 && c.r() > 0));
    EXPECT_EQ(CurveClass::Parse(c.ToString()), c);
  }
}

}  // namespace
}  // namespace skein
