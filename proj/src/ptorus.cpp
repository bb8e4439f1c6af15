#include "skein/ptorus.hpp"

#include <string>

#include "skein/render.hpp"

namespace skein::ptorus {

namespace {

const CurveClass kA{1, 0};

// U + q^2 + q^-2
Element PeripheralFactor() {
  Element out(PolySeq::THat());
  out.add(UPower(1), 1);
  out.add(Label::Empty(), LaurentPoly::Q(2) + LaurentPoly::Q(-2));
  return out;
}

// T_{r,s} with T_{0,0} read as `empty_value`.
void AddT(Element& out, std::int64_t r, std::int64_t s, const LaurentPoly& c, long empty_value) {
  if (r == 0 && s == 0) out.add(Label::Empty(), c * LaurentPoly(empty_value));
  else out.add(Slope(r, s), c);
}

[[noreturn]] void NoRule(const CurveClass& a, const CurveClass& b) {
  throw Error(ErrorKind::kNoProductRule,
              "no product rule on the once-punctured torus for T" + a.ToString() + " * T" + b.ToString());
}

Element SlopeRule(const CurveClass& a, const CurveClass& b) {
  const SeqPtr that = PolySeq::THat();
  if (b.is_primitive() && intersection_number(a.primitive(), b) == 1) return mul_once(Label::Curve(a), b);
  if (a.is_primitive() && intersection_number(a, b.primitive()) == 1) {
    // Mirror of mul_once: the multiple curve sits on the right.
    const std::int64_t d = det(a, b);
    Element out(that);
    AddT(out, a.r() + b.r(), a.s() + b.s(), LaurentPoly::Q(d), 2);
    AddT(out, a.r() - b.r(), a.s() - b.s(), LaurentPoly::Q(-d), 2);
    return out;
  }
  if (a == kA && b.s() == 2 && b.is_primitive()) return mul_t10_tn2(b.r());
  if (a.s() == 1 && a.r() >= 0 && b == CurveClass(0, 1)) return mul_tn1_t01(static_cast<int>(a.r()));
  NoRule(a, b);
}

}  // namespace

Element mul_once(const Label& a, const CurveClass& b) {
  if (!a.slope) throw Error(ErrorKind::kInvalidArgument, "mul_once: first factor needs a slope");
  if (!b.is_primitive())
    throw Error(ErrorKind::kInvalidArgument, "mul_once: second factor " + b.ToString() + " is not primitive");
  const CurveClass& x = *a.slope;
  if (intersection_number(x.primitive(), b) != 1)
    throw Error(ErrorKind::kInvalidArgument,
                "mul_once: " + x.primitive().ToString() + " and " + b.ToString() + " do not intersect once");
  const std::int64_t d = det(x, b);
  Element out(PolySeq::THat());
  out.add(Label{CurveClass(x.r() + b.r(), x.s() + b.s()), a.periph}, LaurentPoly::Q(d));
  out.add(Label{CurveClass(x.r() - b.r(), x.s() - b.s()), a.periph}, LaurentPoly::Q(-d));
  return out;
}

int parity_indicator(std::int64_t n) { return n % 2 != 0 ? 1 : 0; }

Element mul_t10_tn2(std::int64_t n) {
  Element out(PolySeq::THat());
  out.add(Slope(n + 1, 2), LaurentPoly::Q(2));
  out.add(Slope(n - 1, 2), LaurentPoly::Q(-2));
  if (parity_indicator(n) == 1) out += PeripheralFactor();
  return out;
}

Poly1 g_closed(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "G_n needs n >= 0");
  Poly1 out;
  for (int i = 1; i <= n / 2; ++i) out += LaurentPoly::Q(4 * i - n - 2) * PolySeq::S()->at(n - 2 * i);
  return out;
}

Poly1 g_recursive(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "G_n needs n >= 0");
  Poly1 prev;  // G_0
  Poly1 cur;   // G_1
  if (n == 0) return prev;
  const Poly1 a = Poly1::X(1);
  for (int k = 1; k < n; ++k) {
    Poly1 next = LaurentPoly::Q(-1) * (cur * a) - LaurentPoly::Q(-2) * prev +
                 Poly1(LaurentPoly::Monomial(parity_indicator(k), k - 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Element mul_tn1_t01(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "T_{n,1} T_{0,1} needs n >= 0");
  const SeqPtr that = PolySeq::THat();
  Element out(that);
  AddT(out, n, 2, LaurentPoly::Q(n), 2);
  // T_{0,0} is 2 here: at n = 0 this is T_{0,1}^2 = T_{0,2} + 2.
  AddT(out, n, 0, LaurentPoly::Q(-n), 2);
  const Element g = on_curve<1>(g_closed(n), kA, that);
  out += mul(PeripheralFactor(), g);
  return out;
}

Element mul(const Element& x, const Element& y) {
  const SeqPtr that = PolySeq::THat();
  if (x.flavor()->id() != that->id() || y.flavor()->id() != that->id())
    throw Error(ErrorKind::kFlavorMismatch, "once-punctured torus products are computed in the that flavor");
  return multiply_with(x, y, SlopeRule);
}

Element mul_any(const Element& x, const Element& y) {
  const SeqPtr that = PolySeq::THat();
  return convert(mul(convert(x, that), convert(y, that)), x.flavor());
}

Element t10_times_tn1_t01_left(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "needs n >= 1");
  // T_{1,0} T_{n,1} = q T_{n+1,1} + q^-1 T_{n-1,1}
  return LaurentPoly::Q(1) * mul_tn1_t01(n + 1) + LaurentPoly::Q(-1) * mul_tn1_t01(n - 1);
}

Element t10_times_tn1_t01_right(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "needs n >= 1");
  const SeqPtr that = PolySeq::THat();
  const Element a = Element::Of(Label::Curve(kA), 1, that);
  // q^n T_{1,0} T_{n,2}
  Element out = LaurentPoly::Q(n) * mul_t10_tn2(n);
  // q^-n T_{1,0} T_{n,0}
  Element tn0(that);
  AddT(tn0, n, 0, 1, 2);
  out += LaurentPoly::Q(-n) * mul(a, tn0);
  // (U + q^2 + q^-2) T_{1,0} G_n
  out += mul(PeripheralFactor(), mul(a, on_curve<1>(g_closed(n), kA, that)));
  return out;
}

Extraction upper_bound_extract(const SeqPtr& p, int n) {
  if (p->at(1) != Poly1::X(1))
    throw Error(ErrorKind::kInvalidArgument, "upper_bound_extract needs P_1 = x, got " + p->at(1).ToString());
  if (!p->has_integer_coefficients())
    throw Error(ErrorKind::kInvalidArgument, "upper_bound_extract needs a sequence with integer coefficients");
  const Element full = convert(mul_tn1_t01(n), p);
  auto parts = split_by_q_exponent(full);
  if (parts.empty()) throw Error(ErrorKind::kInvalidArgument, "product vanished");
  auto& [e, elem] = *parts.begin();
  return {e, elem};
}

namespace {

PositivityReport Header(const std::string& check, const std::string& sequence, int n_max) {
  PositivityReport report;
  report.surface = surface_tag(Surface::kPTorus);
  report.sequence = sequence;
  report.check = check;
  report.bound = n_max;
  return report;
}

void Finish(PositivityReport& report, int checked) {
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  report.details.emplace_back("checked", std::to_string(checked));
}

}  // namespace

PositivityReport verify_g_closed(int n_max) {
  if (n_max < 0) throw Error(ErrorKind::kInvalidArgument, "g-closed needs n_max >= 0");
  PositivityReport report = Header("g-closed", "that", n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Poly1 diff = g_recursive(n) - g_closed(n);
    if (diff.is_zero()) continue;
    report.witnesses.push_back({"G_" + std::to_string(n) + " recursive - closed", "", {}, nullptr});
  }
  Finish(report, n_max + 1);
  report.details.emplace_back("claim", "G_n = sum_{i=1}^{n/2} q^{4i-n-2} S_{n-2i}((1,0))");
  return report;
}

PositivityReport verify_induction(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "induction needs n_max >= 1");
  PositivityReport report = Header("induction", "that", n_max);
  const SeqPtr that = PolySeq::THat();
  for (int n = 1; n <= n_max; ++n) {
    const Element diff = t10_times_tn1_t01_left(n) - t10_times_tn1_t01_right(n);
    for (const auto& [l, c] : diff.terms()) {
      const Label target = l;
      report.witnesses.push_back({"T(1,0) * (T(" + std::to_string(n) + ",1) * T(0,1)) left - right",
                                  label_text(l, *that), c, [n, target] {
                                    return (t10_times_tn1_t01_left(n) - t10_times_tn1_t01_right(n)).coeff(target);
                                  }});
    }
  }
  Finish(report, n_max);
  return report;
}

PositivityReport verify_extraction(const SeqPtr& p, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "extraction needs n_max >= 1");
  PositivityReport report = Header("extract", p->name(), n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Extraction ex = upper_bound_extract(p, n);
    const Element expected = Element::Of(Slope(n, 0), 1, p);
    if (ex.exponent == -n && ex.element == expected) continue;
    report.witnesses.push_back({"lowest q-part of P(" + std::to_string(n) + ",1) * P(0,1): q^" +
                                    std::to_string(ex.exponent) + " (" + to_text(ex.element) + ")",
                                "", {}, nullptr});
  }
  Finish(report, n_max);
  report.details.emplace_back("claim", "lowest part is q^-n P_n((1,0))");
  return report;
}

}  // namespace skein::ptorus
