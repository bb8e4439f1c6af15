#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "skein/skein.h"

namespace {

struct Result {
  skein_result* r = nullptr;
  ~Result() { skein_result_free(r); }
  std::string text() const { return skein_result_text(r); }
  nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(skein_result_json(r)); }
  skein_verdict verdict() const { return skein_result_verdict(r); }
};

struct Seq {
  skein_seq* s = nullptr;
  explicit Seq(const char* spec) { EXPECT_EQ(skein_seq_open(spec, &s), SKEIN_OK) << skein_last_error(); }
  ~Seq() { skein_seq_free(s); }
};

TEST(CApi, TorusProduct) {
  Seq that("that");
  Result res;
  ASSERT_EQ(skein_tor_mul("(2,1)", "(0,1)", that.s, 0, &res.r), SKEIN_OK) << skein_last_error();
  EXPECT_EQ(res.text(), "q^-2 (2,0)_T + q^2 (2,2)_T\n");
  EXPECT_EQ(res.verdict(), SKEIN_VERDICT_NONE);
  EXPECT_EQ(res.json()["terms"].size(), 2u);

  Result q1;
  ASSERT_EQ(skein_tor_mul("(2,1)", "(0,1)", that.s, 1, &q1.r), SKEIN_OK);
  EXPECT_EQ(q1.text(), "(2,0)_T + (2,2)_T\n");
}

TEST(CApi, ParseErrorsAreReported) {
  Seq that("that");
  skein_result* r = nullptr;
  EXPECT_EQ(skein_tor_mul("(2,x)", "(0,1)", that.s, 0, &r), SKEIN_ERR_PARSE);
  EXPECT_EQ(r, nullptr);
  const std::string msg = skein_last_error();
  EXPECT_NE(msg.find("column 4"), std::string::npos) << msg;
  EXPECT_NE(msg.find("(2,x)\n"), std::string::npos) << msg;

  skein_seq* bad = nullptr;
  EXPECT_EQ(skein_seq_open("nope", &bad), SKEIN_ERR_PARSE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(skein_seq_open("file:/nonexistent/seq.txt", &bad), SKEIN_ERR_IO);
}

TEST(CApi, ErrorCodes) {
  Seq t("t");
  Seq s("s");
  skein_result* r = nullptr;
  EXPECT_EQ(skein_tor_mul("(1,0)", "(0,1)", t.s, 0, &r), SKEIN_ERR_NOT_NORMALIZED);
  EXPECT_EQ(skein_s04_mul("S(1,1)", "S(1,3)", s.s, &r), SKEIN_ERR_NO_PRODUCT_RULE);
  EXPECT_EQ(skein_s04_force_p1(0, &r), SKEIN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(skein_tor_mul("(1,0)", "(0,1)", nullptr, 0, &r), SKEIN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(skein_tor_mul("(1,0)", "(0,1)", s.s, 0, nullptr), SKEIN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(skein_ptor_verify("bogus", 3, &r), SKEIN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(skein_element_read("{not json", &r), SKEIN_ERR_PARSE);
  EXPECT_EQ(r, nullptr);
  EXPECT_STREQ(skein_status_name(SKEIN_ERR_NO_PRODUCT_RULE), "no product rule");
}

TEST(CApi, Verdicts) {
  Seq s("s");
  Seq that("that");
  Result scan;
  ASSERT_EQ(skein_tor_scan(s.s, 3, 0, &scan.r), SKEIN_OK);
  EXPECT_EQ(scan.verdict(), SKEIN_VERDICT_VIOLATION);
  EXPECT_NE(scan.text().find("(2,1)_S * (0,1)_S -> coefficient of 1 = -q^-2 - q^2"), std::string::npos);

  Result leq;
  ASSERT_EQ(skein_order_leq(that.s, s.s, 20, 0, &leq.r), SKEIN_OK);
  EXPECT_EQ(leq.text(), "(That) <= (S) certified to n=20\n");
  EXPECT_EQ(leq.verdict(), SKEIN_VERDICT_CERTIFIED);

  Result rev;
  ASSERT_EQ(skein_order_leq(s.s, that.s, 20, 0, &rev.r), SKEIN_OK);
  EXPECT_EQ(rev.verdict(), SKEIN_VERDICT_VIOLATION);
  EXPECT_EQ(rev.json()["witness"]["n"], 2);
  EXPECT_EQ(rev.json()["witness"]["k"], 0);
}

TEST(CApi, ElementRoundTrip) {
  Seq that("that");
  Seq s("s");
  const char* ops[] = {"tor", "ptor", "s04"};
  for (const char* op : ops) {
    Result first;
    const std::string which = op;
    skein_status st;
    if (which == "tor") st = skein_tor_mul("(3,1)", "(1,2)", s.s, 0, &first.r);
    else if (which == "ptor") st = skein_ptor_mul("T(4,1)", "T(0,1)", that.s, &first.r);
    else st = skein_s04_mul("S(3,1)", "S(0,1)", s.s, &first.r);
    ASSERT_EQ(st, SKEIN_OK) << skein_last_error();
    Result second;
    ASSERT_EQ(skein_element_read(skein_result_json(first.r), &second.r), SKEIN_OK) << skein_last_error();
    EXPECT_STREQ(skein_result_json(second.r), skein_result_json(first.r));
    EXPECT_EQ(second.text(), first.text());
  }
}

TEST(CApi, OtherCommands) {
  Seq s("s");
  Result ex;
  ASSERT_EQ(skein_ptor_extract(s.s, 3, &ex.r), SKEIN_OK);
  EXPECT_EQ(ex.json()["exponent"], -3);
  Result ex4;
  ASSERT_EQ(skein_s04_extract(4, &ex4.r), SKEIN_OK);
  EXPECT_EQ(ex4.json()["exponent"], -8);
  Result force;
  ASSERT_EQ(skein_s04_force_p1(2, &force.r), SKEIN_OK);
  EXPECT_EQ(force.verdict(), SKEIN_VERDICT_VIOLATION);
  Result uniq;
  ASSERT_EQ(skein_certify_torus_unique(2, 1, &uniq.r), SKEIN_OK);
  EXPECT_EQ(uniq.verdict(), SKEIN_VERDICT_CERTIFIED);
  Result sand;
  ASSERT_EQ(skein_certify_sandwich(s.s, 10, &sand.r), SKEIN_OK);
  EXPECT_EQ(sand.verdict(), SKEIN_VERDICT_CERTIFIED);
  Result cheb;
  ASSERT_EQ(skein_cheb(s.s, 2, &cheb.r), SKEIN_OK);
  EXPECT_EQ(cheb.text(), "S_2(x) = x^2 - 1\n  at x = t + t^-1: t^-2 + 1 + t^2\n");
  Result h;
  ASSERT_EQ(skein_s04_verify("h-bounds", 5, &h.r), SKEIN_OK);
  EXPECT_EQ(h.verdict(), SKEIN_VERDICT_CERTIFIED);
  Result g;
  ASSERT_EQ(skein_ptor_verify("g-closed", 10, &g.r), SKEIN_OK);
  EXPECT_EQ(g.verdict(), SKEIN_VERDICT_CERTIFIED);
  EXPECT_STREQ(skein_seq_display_name(s.s), "S");
  EXPECT_STREQ(skein_seq_name(s.s), "s");
}

}  // namespace
