#include <gtest/gtest.h>

#include "skein/positivity.hpp"
#include "skein/torus.hpp"
#include "support.hpp"

namespace skein::positivity {
namespace {

using testing::L;

std::string Detail(const PositivityReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

SeqPtr WithP2(long c0) {
  const SeqPtr th = PolySeq::THat();
  return PolySeq::Table("p2", {th->at(0), th->at(1), Poly1::X(2) + Poly1(LaurentPoly(c0))});
}

TEST(PerturbedThat, Shape) {
  const SeqPtr p = perturbed_that(2, {1, -2});
  EXPECT_EQ(p->at(2), PolySeq::THat()->at(2) + Poly1(LaurentPoly(1)) - LaurentPoly(2) * Poly1::X());
  EXPECT_EQ(p->last_index(), 2);
  EXPECT_THROW(perturbed_that(2, {1}), Error);
}

TEST(KillPerturbation, FindsNegativeConstants) {
  EXPECT_FALSE(kill_perturbation(2, {0, 0}).has_value());
  EXPECT_FALSE(kill_perturbation(3, {0, 0, 0}).has_value());
  for (int d0 = -3; d0 <= 3; ++d0)
    for (int d1 = -3; d1 <= 3; ++d1) {
      if (d0 == 0 && d1 == 0) continue;
      const auto w = kill_perturbation(2, {d0, d1});
      ASSERT_TRUE(w.has_value()) << d0 << "," << d1;
      EXPECT_FALSE(w->coeff.is_positive());
      EXPECT_EQ(w->replay(), w->coeff);
    }
}

TEST(TorusUniqueness, Examples) {
  const PositivityReport two = torus_uniqueness(2, 3);
  EXPECT_TRUE(two.certified());
  EXPECT_EQ(Detail(two, "level 2"), "48/48 perturbations killed");
  EXPECT_EQ(Detail(two, "unperturbed that"), "no violation");

  const PositivityReport four = torus_uniqueness(4, 2);
  EXPECT_TRUE(four.certified());
  EXPECT_EQ(Detail(four, "level 4"), "624/624 perturbations killed");

  const PositivityReport three = torus_uniqueness(3, 3);
  EXPECT_TRUE(three.certified());
  EXPECT_EQ(Detail(three, "level 3"), "342/342 perturbations killed");
  EXPECT_THROW(torus_uniqueness(1, 2), Error);
}

TEST(TorusUniqueness, MonotoneInBox) {
  for (int box = 3; box >= 0; --box) EXPECT_TRUE(torus_uniqueness(3, box).certified()) << box;
}

TEST(LowerBound, Examples) {
  EXPECT_TRUE(lower_bound_certify(PolySeq::S(), 12).certified());
  EXPECT_TRUE(lower_bound_certify(PolySeq::Monomial(), 12).certified());
  EXPECT_TRUE(lower_bound_certify(PolySeq::THat(), 12).certified());
  const PositivityReport bad = lower_bound_certify(WithP2(-3), 2);
  ASSERT_FALSE(bad.certified());
  for (const auto& w : bad.witnesses) {
    EXPECT_FALSE(w.coeff.is_positive());
    EXPECT_EQ(w.replay(), w.coeff);
  }
  EXPECT_EQ(bad.witnesses.front().label, "T(0,1)");
  EXPECT_EQ(bad.witnesses.front().coeff, LaurentPoly(-1));
}

TEST(LowerBound, RejectsShiftedP1) {
  const SeqPtr p = PolySeq::Table("p", {Poly1(LaurentPoly(1)), Poly1({LaurentPoly(1), LaurentPoly(1)})});
  EXPECT_THROW(lower_bound_certify(p, 1), Error);
}

TEST(Sandwich, Examples) {
  EXPECT_TRUE(sandwich_check(PolySeq::THat(), 20).certified());
  EXPECT_TRUE(sandwich_check(PolySeq::S(), 20).certified());
  const PositivityReport mono = sandwich_check(PolySeq::Monomial(), 20);
  ASSERT_FALSE(mono.certified());
  ASSERT_EQ(mono.witnesses.size(), 1u);
  EXPECT_EQ(mono.witnesses[0].coeff, LaurentPoly(-1));
  EXPECT_EQ(mono.witnesses[0].replay(), LaurentPoly(-1));
  EXPECT_EQ(Detail(mono, "(That) <= (Monomial)"), "holds");
  EXPECT_EQ(Detail(mono, "(Monomial) <= (S)"), "fails");
}

TEST(Sandwich, FailureImpliesTorusViolation) {
  for (const SeqPtr& p : {PolySeq::THat(), PolySeq::S(), PolySeq::Monomial()}) {
    const int n_max = 3;
    if (sandwich_check(p, n_max).certified()) continue;
    bool found = false;
    for (int bound = 1; bound <= 2 * n_max && !found; ++bound) found = !torus::positivity_scan(p, bound).certified();
    EXPECT_TRUE(found) << p->name();
  }
  const SeqPtr low = WithP2(-3);
  EXPECT_FALSE(sandwich_check(low, 2).certified());
  const auto prod = torus::structure_constants(low, torus::Label::Curve(CurveClass(2, 0)),
                                               torus::Label::Curve(CurveClass(0, 1)));
  EXPECT_EQ(prod.coeff(torus::Label::Curve(CurveClass(0, 1))), LaurentPoly(-1));
}

}  // namespace
}  // namespace skein::positivity
