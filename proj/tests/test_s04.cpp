#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skein/render.hpp"
#include "skein/s04.hpp"
#include "support.hpp"

namespace skein::s04 {
namespace {

using testing::L;

SeqPtr S() { return PolySeq::S(); }
SeqPtr TH() { return PolySeq::THat(); }

Element Of(const Label& l, const SeqPtr& f, const LaurentPoly& c = 1) { return Element::Of(l, c, f); }

// c * x for a peripheral constant c, in the flavor of x.
Element Scale(const Element& c, const Element& x) {
  Element out(x.flavor());
  for (const auto& [lc, cc] : c.terms()) {
    for (const auto& [lx, cx] : x.terms()) {
      Label l = lx;
      for (std::size_t i = 0; i < 4; ++i) l.periph[i] += lc.periph[i];
      out.add(l, cc * cx);
    }
  }
  return out;
}

TEST(Constants, Definitions) {
  const SeqPtr mono = PolySeq::Monomial();
  Element c0(mono);
  c0.add(Gammas({1, 0, 1, 0}), 1);
  c0.add(Gammas({0, 1, 0, 1}), 1);
  EXPECT_EQ(c(0, mono), c0);
  EXPECT_EQ(c(4, mono), c0);
  EXPECT_EQ(c(-2, mono), c0);
  Element c1(mono);
  c1.add(Gammas({1, 0, 0, 1}), 1);
  c1.add(Gammas({0, 1, 1, 0}), 1);
  EXPECT_EQ(c(1, mono), c1);
  EXPECT_EQ(c(-1, mono), c1);
  EXPECT_EQ(c(0, S()), convert(c0, S()));
  EXPECT_EQ(big_gamma(mono).coeff(Label::Empty()), LaurentPoly(-2));
  EXPECT_EQ(big_gamma(mono).coeff(Gammas({1, 1, 1, 1})), LaurentPoly(1));
  EXPECT_EQ(big_gamma(mono).coeff(Gammas({0, 0, 2, 0})), LaurentPoly(1));
  EXPECT_EQ(big_gamma(S()).coeff(Label::Empty()), LaurentPoly(2));
}

TEST(MulABn, Examples) {
  const SeqPtr s = S();
  EXPECT_EQ(mul_a_bn(0, s), Of(Slope(1, 1), s, L("q^2")) + Of(Slope(-1, 1), s, L("q^-2")) + c(0, s));
  EXPECT_EQ(mul_a_bn(1, s), Of(Slope(2, 1), s, L("q^2")) + Of(Slope(0, 1), s, L("q^-2")) + c(1, s));
  EXPECT_EQ(mul_a_bn(-1, s), Of(Slope(0, 1), s, L("q^2")) + Of(Slope(-2, 1), s, L("q^-2")) + c(1, s));
}

TEST(MulABn, SigmaEquivariance) {
  for (int n = -10; n <= 10; ++n) {
    EXPECT_EQ(sigma(mul_a_bn(n, S())), mul_a_bn(n + 1, S())) << n;
    EXPECT_EQ(sigma(mul_a_bn(n, S()), -1), mul_a_bn(n - 1, S())) << n;
  }
}

TEST(MulTnaB, Examples) {
  const SeqPtr th = TH();
  EXPECT_EQ(mul_tna_b(1), Of(Slope(1, 1), th, L("q^2")) + Of(Slope(-1, 1), th, L("q^-2")) + c(0, th));
  EXPECT_EQ(mul_tna_b(0), Of(Slope(0, 1), th, 2));
  const Element two = Of(Slope(2, 1), th, L("q^4")) + Of(Slope(-2, 1), th, L("q^-4")) +
                      Scale(c(0, th), Of(Slope(1, 0), th)) + Scale(c(1, th), Of(Label::Empty(), th, L("q^2 + q^-2")));
  EXPECT_EQ(mul_tna_b(2), two);
  EXPECT_EQ(f_poly(1), Poly1(LaurentPoly(1)));
  EXPECT_TRUE(g_poly(1).is_zero());
}

TEST(MulTnaB, BruteForceOracleTo30) {
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(mul_tna_b(n), oracles::BruteTnaB(n)) << n;
}

TEST(MulS10Sm2, Examples) {
  const SeqPtr s = S();
  const Element m0 = Of(Slope(1, 2), s, L("q^4")) + Of(Slope(-1, 2), s, L("q^-4")) +
                     Scale(c(0, s), Of(Slope(0, 1), s)) + bracket_constant(s);
  EXPECT_EQ(mul_s10_sm2(0), m0);
  const Element m1 = Of(Slope(2, 2), s, L("q^4")) + Of(Slope(0, 2), s, L("q^-4")) +
                     Scale(c(0, s), Of(Slope(1, 1), s, L("q^2"))) + Scale(c(1, s), Of(Slope(0, 1), s, L("q^-2"))) +
                     big_gamma(s);
  EXPECT_EQ(mul_s10_sm2(1), m1);
  // sigma carries c_0 S_{0,1} to c_1 S_{1,1}.
  const Element m2 = Of(Slope(3, 2), s, L("q^4")) + Of(Slope(1, 2), s, L("q^-4")) +
                     Scale(c(1, s), Of(Slope(1, 1), s)) + bracket_constant(s);
  EXPECT_EQ(mul_s10_sm2(2), m2);
}

TEST(MulS10Sm2, SigmaFixesTheConstants) {
  EXPECT_EQ(sigma(bracket_constant(S())), bracket_constant(S()));
  EXPECT_EQ(sigma(h1_constant(S())), h1_constant(S()));
  EXPECT_EQ(sigma(big_gamma(S())), big_gamma(S()));
  for (int m = -6; m <= 6; ++m) EXPECT_EQ(sigma(mul_s10_sm2(m), 2), mul_s10_sm2(m + 4)) << m;
}

TEST(GClosed, Examples) {
  const SeqPtr s = S();
  EXPECT_EQ(g_s04_closed(2), Scale(c(0, s), Of(Slope(1, 1), s, L("q^2"))));
  EXPECT_EQ(g_s04_closed(3), Scale(c(1, s), Of(Slope(1, 1), s, L("q^2"))) + Scale(c(0, s), Of(Slope(2, 1), s, L("q^2"))));
  EXPECT_TRUE(g_s04_closed(1).is_zero());
  EXPECT_TRUE(g_s04_closed(0).is_zero());
}

TEST(MulSn1S01, BaseCases) {
  const SeqPtr s = S();
  const SN1S01 one = mul_sn1_s01(1);
  EXPECT_EQ(one.full, Of(Slope(1, 2), s, L("q^2")) + Of(Slope(1, 0), s, L("q^-2")) + h1_constant(s));
  EXPECT_EQ(one.h, h1_constant(s));
  const SN1S01 zero = mul_sn1_s01(0);
  EXPECT_EQ(zero.full, Of(Slope(0, 2), s) + Of(Label::Empty(), s));
  EXPECT_TRUE(zero.h.is_zero());
}

TEST(MulSn1S01, HStructure) {
  const HBoundsResult two = check_h(2);
  EXPECT_TRUE(two.labels_ok);
  EXPECT_TRUE(two.exponents_ok);
  EXPECT_GE(two.min_exponent, -2);
  EXPECT_LE(two.max_exponent, 2);
  for (int n = 1; n <= 20; ++n) {
    const HBoundsResult r = check_h(n);
    EXPECT_TRUE(r.labels_ok) << n;
    EXPECT_TRUE(r.exponents_ok) << n;
    const Element h = mul_sn1_s01(n).h;
    for (const auto& [l, coeff] : h.terms())
      if (l.slope) EXPECT_EQ(l.slope->primitive(), CurveClass(1, 0)) << n;
  }
  EXPECT_TRUE(verify_h_bounds(20).certified());
}

TEST(MulSn1S01, GIsolatedFromRecursion) {
  const SeqPtr s = S();
  for (int n = 1; n <= 20; ++n) {
    const Element full = mul_sn1_s01(n).full;
    Element rest(s);
    for (const auto& [l, c] : full.terms())
      if (l.slope && l.slope->primitive() != CurveClass(1, 0)) rest.add(l, c);
    EXPECT_EQ(rest, Of(Slope(n, 2), s, LaurentPoly::Q(2 * n)) + g_s04_closed(n)) << n;
  }
}

TEST(MulSn1S01, H2MatchesExpectedShape) {
  const SeqPtr s = S();
  const Element want = big_gamma(s) + Scale(h1_constant(s), Of(Slope(1, 0), s, L("q^-2")));
  EXPECT_EQ(mul_sn1_s01(2).h, want);
}

TEST(LowestTerm, Examples) {
  const SeqPtr s = S();
  for (int n : {1, 2, 5}) {
    const Extraction ex = lowest_q_term(n);
    EXPECT_EQ(ex.exponent, -2 * n);
    EXPECT_EQ(ex.element, Of(Slope(n, 0), s));
  }
  EXPECT_THROW(lowest_q_term(0), Error);
  EXPECT_TRUE(verify_lowest_term(20).certified());
}

TEST(P1Forcing, Examples) {
  const P1Forcing one = p1_forcing_witness(1);
  EXPECT_TRUE(one.violated);
  EXPECT_EQ(one.gamma_coeff, LaurentPoly(-1));
  EXPECT_FALSE(one.gamma_coeff.is_positive());
  const P1Forcing m2 = p1_forcing_witness(-2);
  EXPECT_TRUE(m2.violated);
  EXPECT_EQ(m2.a_coeff, LaurentPoly(-2));
  EXPECT_THROW(p1_forcing_witness(0), Error);
  for (int d : {-3, -2, -1, 1, 2, 3}) {
    const P1Forcing w = p1_forcing_witness(d);
    EXPECT_TRUE(w.violated) << d;
    EXPECT_TRUE(!w.gamma_coeff.is_positive() || !w.a_coeff.is_positive()) << d;
    EXPECT_EQ(w.gamma_coeff, LaurentPoly(-d));
    EXPECT_EQ(w.a_coeff, LaurentPoly(d));
  }
}

TEST(PartialProduct, RulesAndErrors) {
  const SeqPtr s = S();
  EXPECT_EQ(mul(Of(Slope(1, 0), s), Of(Slope(3, 1), s)), mul_a_bn(3, s));
  EXPECT_EQ(mul(Of(Slope(1, 0), s), Of(Slope(3, 2), s)), mul_s10_sm2(3));
  EXPECT_EQ(mul(Of(Slope(4, 1), s), Of(Slope(0, 1), s)), mul_sn1_s01(4).full);
  EXPECT_EQ(mul(Of(Slope(2, 0), s), Of(Slope(0, 1), s)), convert(mul_tna_b(2), s) + Of(Slope(0, 1), s));
  try {
    (void)mul(Of(Slope(1, 1), s), Of(Slope(1, 3), s));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoProductRule);
  }
  EXPECT_THROW(mul(Of(Slope(1, 0), TH()), Of(Slope(0, 1), TH())), Error);
}

TEST(S04Property, GammaCentrality) {
  const SeqPtr s = S();
  const std::vector<std::pair<Label, Label>> pairs{{Slope(1, 0), Slope(0, 1)}, {Slope(1, 0), Slope(2, 2)},
                                                   {Slope(3, 1), Slope(0, 1)}, {Slope(2, 0), Slope(0, 1)}};
  const std::vector<Exponents> gs{{1, 0, 0, 0}, {0, 0, 2, 1}, {1, 1, 1, 1}};
  for (const auto& g : gs) {
    const Element gm = Of(Gammas(g), s);
    for (const auto& [a, b] : pairs) {
      const Element ab = mul(Of(a, s), Of(b, s));
      EXPECT_EQ(mul(gm, ab), mul(ab, gm));
      EXPECT_EQ(mul(mul(gm, Of(a, s)), Of(b, s)), mul(gm, ab));
      EXPECT_EQ(mul(Of(a, s), mul(gm, Of(b, s))), mul(gm, ab));
    }
  }
}

TEST(S04Property, SigmaRoundTrip) {
  const Element x = mul_sn1_s01(3).full;
  EXPECT_EQ(sigma(sigma(x, 3), -3), x);
  EXPECT_EQ(sigma(sigma(x), 1), sigma(x, 2));
}

TEST(Render, S04Labels) {
  const SeqPtr s = S();
  EXPECT_EQ(label_text(Slope(1, 0, {1, 1, 0, 0}), *s), "S(1,0)*g1*g2");
  EXPECT_EQ(label_text(Gammas({0, 0, 2, 0}), *s), "g3^2");
  EXPECT_EQ(to_text(mul_sn1_s01(1).full), "g3*g4 + g1*g2 + q^-2 S(1,0) + q^2 S(1,2)");
}

}  // namespace
}  // namespace skein::s04
