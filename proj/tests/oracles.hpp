#pragma once

// Independent reference computations used to cross-check the closed forms.

#include "skein/element.hpp"
#include "skein/s04.hpp"
#include "skein/torus.hpp"

namespace skein::oracles {

// a * x on the four-punctured sphere in the T-hat flavor, using only
// a b_k = q^2 b_{k+1} + q^-2 b_{k-1} + c_k and products in R[a].
inline s04::Element LeftMulA(const s04::Element& x) {
  const SeqPtr that = PolySeq::THat();
  const s04::Label a = s04::Slope(1, 0);
  s04::Element out(that);
  for (const auto& [l, c] : x.terms()) {
    if (l.slope && l.slope->primitive() == CurveClass(1, 0)) {
      out += c * commuting_product(a, l, that);
    } else if (!l.slope) {
      out += c * commuting_product(a, l, that);
    } else {
      if (l.slope->s() != 1) throw Error(ErrorKind::kNoProductRule, "oracle handles (k,1) slopes only");
      const s04::Element abk = convert(s04::mul_a_bn(l.slope->r(), that), that);
      out += c * times_peripheral(abk, l.periph);
    }
  }
  return out;
}

// T_n(a) b from T_0 b = 2b, T_1 b = ab, T_n b = a (T_{n-1} b) - T_{n-2} b.
inline s04::Element BruteTnaB(int n) {
  const SeqPtr that = PolySeq::THat();
  const s04::Element b = s04::Element::Of(s04::Slope(0, 1), 1, that);
  s04::Element prev = LaurentPoly(2) * b;
  if (n == 0) return prev;
  s04::Element cur = LeftMulA(b);
  for (int k = 2; k <= n; ++k) {
    s04::Element next = LeftMulA(cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// (r,s)_T (u,v)_T straight from the two-term formula, with (0,0)_T = 2.
inline torus::Element FrohmanGelca(std::int64_t r, std::int64_t s, std::int64_t u, std::int64_t v) {
  const SeqPtr that = PolySeq::THat();
  const std::int64_t d = r * v - s * u;
  torus::Element out(that);
  auto put = [&](std::int64_t x, std::int64_t y, std::int64_t e) {
    if (x == 0 && y == 0) out.add(torus::Label::Empty(), LaurentPoly::Monomial(2, e));
    else out.add(torus::Label::Curve(CurveClass(x, y)), LaurentPoly::Q(e));
  };
  put(r + u, s + v, d);
  put(r - u, s - v, -d);
  return out;
}

}  // namespace skein::oracles
