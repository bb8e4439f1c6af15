#include "skein/s04.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "skein/render.hpp"

namespace skein::s04 {

namespace {

const CurveClass kA{1, 0};
const CurveClass kB{0, 1};

std::int64_t FloorDiv2(std::int64_t m) { return m >= 0 ? m / 2 : -((1 - m) / 2); }

// Product of elements whose terms all commute (peripheral constants and
// polynomials in one curve).
Element CentralMul(const Element& x, const Element& y) {
  return multiply_with(x, y, [](const CurveClass& a, const CurveClass& b) -> Element {
    throw Error(ErrorKind::kNoProductRule, "non-commuting factors " + a.ToString() + ", " + b.ToString());
  });
}

Element InFlavor(const Label& l, const SeqPtr& f, const LaurentPoly& coeff = 1) {
  return convert(Element::Of(l, coeff, PolySeq::Monomial()), f);
}

// S_d(a) b through T_j(a) b.
Element SdA_B(std::int64_t d) {
  const SeqPtr that = PolySeq::THat();
  const auto& e = that->expansion_of(*PolySeq::S(), static_cast<int>(d));
  Element out(that);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j].is_zero()) continue;
    if (j == 0) out += Element::Of(Label::Curve(kB), e[j], that);
    else out += e[j] * mul_tna_b(static_cast<int>(j));
  }
  return convert(out, PolySeq::S());
}

Element SlopeRule(const CurveClass& a, const CurveClass& b) {
  const SeqPtr s = PolySeq::S();
  if (a == kA && b.s() == 1) return mul_a_bn(b.r(), s);
  if (a == kA && b.s() == 2) return mul_s10_sm2(b.r());
  if (a.primitive() == kA && b == kB) return SdA_B(a.multiplicity());
  if (a.s() == 1 && a.r() >= 0 && b == kB) return mul_sn1_s01(static_cast<int>(a.r())).full;
  throw Error(ErrorKind::kNoProductRule,
              "no product rule on the four-punctured sphere for S" + a.ToString() + " * S" + b.ToString());
}

Element BaseS10S02() {
  const SeqPtr s = PolySeq::S();
  Element out(s);
  out.add(Slope(1, 2), LaurentPoly::Q(4));
  out.add(Slope(-1, 2), LaurentPoly::Q(-4));
  out += CentralMul(c(0, s), Element::Of(Label::Curve(kB), 1, s));
  out += bracket_constant(s);
  return out;
}

Element BaseS10S12() {
  const SeqPtr s = PolySeq::S();
  Element out(s);
  out.add(Slope(2, 2), LaurentPoly::Q(4));
  out.add(Slope(0, 2), LaurentPoly::Q(-4));
  out += CentralMul(c(0, s), Element::Of(Slope(1, 1), LaurentPoly::Q(2), s));
  out += CentralMul(c(1, s), Element::Of(Slope(0, 1), LaurentPoly::Q(-2), s));
  out += big_gamma(s);
  return out;
}

}  // namespace

Element c(std::int64_t n, const SeqPtr& flavor) {
  Element out(PolySeq::Monomial());
  if (n % 2 == 0) {
    out.add(Gammas({1, 0, 1, 0}), 1);
    out.add(Gammas({0, 1, 0, 1}), 1);
  } else {
    out.add(Gammas({1, 0, 0, 1}), 1);
    out.add(Gammas({0, 1, 1, 0}), 1);
  }
  return convert(out, flavor);
}

Element h1_constant(const SeqPtr& flavor) {
  Element out(PolySeq::Monomial());
  out.add(Gammas({1, 1, 0, 0}), 1);
  out.add(Gammas({0, 0, 1, 1}), 1);
  return convert(out, flavor);
}

Element big_gamma(const SeqPtr& flavor) {
  Element out(PolySeq::Monomial());
  out.add(Gammas({1, 1, 1, 1}), 1);
  out.add(Gammas({2, 0, 0, 0}), 1);
  out.add(Gammas({0, 2, 0, 0}), 1);
  out.add(Gammas({0, 0, 2, 0}), 1);
  out.add(Gammas({0, 0, 0, 2}), 1);
  out.add(Label::Empty(), -2);
  return convert(out, flavor);
}

Element bracket_constant(const SeqPtr& flavor) {
  return InFlavor(Label::Curve(kA), flavor) +
         (LaurentPoly::Q(2) + LaurentPoly::Q(-2)) * h1_constant(flavor);
}

Element sigma(const Element& x, std::int64_t k) {
  const bool odd = k % 2 != 0;
  const std::array<std::size_t, 4> perm = odd ? std::array<std::size_t, 4>{1, 0, 2, 3}
                                              : std::array<std::size_t, 4>{0, 1, 2, 3};
  return transport<4>(x, MappingClass::SigmaPower(k), perm);
}

Element mul_a_bn(std::int64_t n, const SeqPtr& flavor) {
  Element out(PolySeq::Monomial());
  out.add(Slope(n + 1, 1), LaurentPoly::Q(2));
  out.add(Slope(n - 1, 1), LaurentPoly::Q(-2));
  return convert(out, flavor) + c(n, flavor);
}

Poly1 f_poly(int n) {
  Poly1 out;
  for (int i = 1; i <= n; i += 2) out += quantum_int(i) * PolySeq::THat()->at(n - i);
  return out;
}

Poly1 g_poly(int n) {
  Poly1 out;
  for (int i = 2; i <= n; i += 2) out += quantum_int(i) * PolySeq::THat()->at(n - i);
  return out;
}

Element mul_tna_b(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "T_n(a) b needs n >= 0");
  const SeqPtr that = PolySeq::THat();
  Element out(that);
  out.add(Slope(n, 1), LaurentPoly::Q(2 * n));
  out.add(Slope(-n, 1), LaurentPoly::Q(-2 * n));
  out += CentralMul(c(0, that), on_curve<4>(f_poly(n), kA, that));
  out += CentralMul(c(1, that), on_curve<4>(g_poly(n), kA, that));
  return out;
}

Element mul_s10_sm2(std::int64_t m) {
  const std::int64_t k = FloorDiv2(m);
  const Element base = (m - 2 * k) == 0 ? BaseS10S02() : BaseS10S12();
  return sigma(base, k);
}

Element g_s04_closed(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "g_n needs n >= 0");
  const SeqPtr s = PolySeq::S();
  Element out(s);
  for (int i = 1; i <= n / 2; ++i)
    for (int j = i; j <= n - i; ++j)
      out += CentralMul(c(n - j + 1, s), Element::Of(Slope(j, 1), LaurentPoly::Q(4 * i - 2), s));
  return out;
}

SN1S01 mul_sn1_s01(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "S_{n,1} S_{0,1} needs n >= 0");
  static std::recursive_mutex mu;
  static std::vector<Element> full;
  const SeqPtr s = PolySeq::S();
  Element result(s);
  {
    std::lock_guard lock(mu);
    if (full.empty()) {
      full.push_back(commuting_product(Label::Curve(kB), Label::Curve(kB), s));
      Element one(s);
      one.add(Slope(1, 2), LaurentPoly::Q(2));
      one.add(Slope(1, 0), LaurentPoly::Q(-2));
      one += h1_constant(s);
      full.push_back(std::move(one));
    }
    const Element a = Element::Of(Label::Curve(kA), 1, s);
    const Element b = Element::Of(Label::Curve(kB), 1, s);
    // S_{m+1,1} = q^-2 S_{1,0} S_{m,1} - q^-4 S_{m-1,1} - q^-2 c_m, times S_{0,1} on the right.
    while (full.size() <= static_cast<std::size_t>(n)) {
      const int m = static_cast<int>(full.size()) - 1;
      Element next = LaurentPoly::Q(-2) * mul(a, full[m]);
      next -= LaurentPoly::Q(-4) * full[m - 1];
      next -= LaurentPoly::Q(-2) * CentralMul(c(m, s), b);
      full.push_back(std::move(next));
    }
    result = full[static_cast<std::size_t>(n)];
  }
  Element h = result;
  h.add(n == 0 ? Slope(0, 2) : Slope(n, 2), -LaurentPoly::Q(2 * n));
  h.add(n == 0 ? Label::Empty() : Slope(n, 0), -LaurentPoly::Q(-2 * n));
  h -= g_s04_closed(n);
  return {std::move(result), std::move(h)};
}

Element mul(const Element& x, const Element& y) {
  const SeqPtr s = PolySeq::S();
  if (x.flavor()->id() != s->id() || y.flavor()->id() != s->id())
    throw Error(ErrorKind::kFlavorMismatch, "four-punctured sphere products are computed in the s flavor");
  return multiply_with(x, y, SlopeRule);
}

Element mul_any(const Element& x, const Element& y) {
  const SeqPtr s = PolySeq::S();
  return convert(mul(convert(x, s), convert(y, s)), x.flavor());
}

Extraction lowest_q_term(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "lowest_q_term needs n >= 1");
  auto parts = split_by_q_exponent(mul_sn1_s01(n).full);
  auto& [e, elem] = *parts.begin();
  return {e, elem};
}

HBoundsResult check_h(int n) {
  const Element h = mul_sn1_s01(n).h;
  HBoundsResult r{true, true, 0, 0};
  bool first = true;
  for (const auto& [l, coeff] : h.terms()) {
    if (l.slope && l.slope->primitive() != kA) r.labels_ok = false;
    const auto range = coeff.degree_range();
    if (first) {
      r.min_exponent = range->first;
      r.max_exponent = range->second;
      first = false;
    } else {
      r.min_exponent = std::min(r.min_exponent, range->first);
      r.max_exponent = std::max(r.max_exponent, range->second);
    }
  }
  if (!first) r.exponents_ok = r.min_exponent >= -2 * n + 2 && r.max_exponent <= 2 * n - 2;
  return r;
}

P1Forcing p1_forcing_witness(std::int64_t delta) {
  if (delta == 0) throw Error(ErrorKind::kInvalidArgument, "p1 forcing needs a nonzero delta");
  const SeqPtr mono = PolySeq::Monomial();
  const LaurentPoly dl(static_cast<long>(delta));
  const std::string name = "x" + std::string(delta > 0 ? "+" : "") + std::to_string(delta);
  const SeqPtr p = PolySeq::Table(name, {Poly1(LaurentPoly(1)), Poly1({dl, LaurentPoly(1)})});
  // (a + delta)(b + delta) = ab + delta a + delta b + delta^2
  Element prod = mul_a_bn(0, mono);
  prod.add(Label::Curve(kA), dl);
  prod.add(Label::Curve(kB), dl);
  prod.add(Label::Empty(), dl * dl);
  P1Forcing out{delta, convert(prod, p), Gammas({1, 0, 0, 0}), {}, Label::Curve(kA), {}, false};
  out.gamma_coeff = out.product.coeff(out.gamma_label);
  out.a_coeff = out.product.coeff(out.a_label);
  out.violated = !out.gamma_coeff.is_positive() || !out.a_coeff.is_positive();
  return out;
}

PositivityReport verify_h_bounds(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "h-bounds needs n_max >= 1");
  PositivityReport report;
  report.surface = surface_tag(Surface::kS04);
  report.sequence = "s";
  report.check = "h-bounds";
  report.bound = n_max;
  const SeqPtr s = PolySeq::S();
  const bool h1_ok = mul_sn1_s01(1).h == h1_constant(s);
  if (!h1_ok) {
    report.witnesses.push_back({"h_1", "gamma1 gamma2 + gamma3 gamma4", {}, nullptr});
  }
  for (int n = 1; n <= n_max; ++n) {
    const HBoundsResult r = check_h(n);
    if (r.labels_ok && r.exponents_ok) continue;
    const Element h = mul_sn1_s01(n).h;
    for (const auto& [l, coeff] : h.terms()) {
      const auto range = coeff.degree_range();
      const bool bad_label = l.slope && l.slope->primitive() != kA;
      const bool bad_exp = range->first < -2 * n + 2 || range->second > 2 * n - 2;
      if (!bad_label && !bad_exp) continue;
      const Label target = l;
      report.witnesses.push_back(
          {"h_" + std::to_string(n), label_text(l, *s), coeff, [n, target] { return mul_sn1_s01(n).h.coeff(target); }});
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  report.details.emplace_back("h_1", h1_ok ? "gamma1 gamma2 + gamma3 gamma4" : "mismatch");
  report.details.emplace_back("claim", "h_n in Z[q^+-1][S_{1,0}, gamma_i], q-exponents in [-2n+2, 2n-2]");
  return report;
}

PositivityReport verify_lowest_term(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "lowest-term needs n_max >= 1");
  PositivityReport report;
  report.surface = surface_tag(Surface::kS04);
  report.sequence = "s";
  report.check = "lowest-term";
  report.bound = n_max;
  const SeqPtr s = PolySeq::S();
  for (int n = 1; n <= n_max; ++n) {
    const Extraction ex = lowest_q_term(n);
    if (ex.exponent == -2 * n && ex.element == Element::Of(Slope(n, 0), 1, s)) continue;
    report.witnesses.push_back({"lowest q-part of S(" + std::to_string(n) + ",1) * S(0,1): q^" +
                                    std::to_string(ex.exponent) + " (" + to_text(ex.element) + ")",
                                "", {}, nullptr});
  }
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  report.details.emplace_back("checked", std::to_string(n_max));
  report.details.emplace_back("claim", "lowest part is q^-2n S_{n,0}");
  return report;
}

}  // namespace skein::s04
