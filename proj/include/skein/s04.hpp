#pragma once

#include <array>
#include <cstdint>

#include "skein/element.hpp"
#include "skein/report.hpp"

// Four-punctured sphere. Punctures are numbered 1..4 (array index 0..3);
// a = (1,0), b = (0,1), b_n = (n,1). The half twist sigma acts on slopes by
// [[1,1],[0,1]] and swaps punctures 1 and 2.
//
// Products are partial: left multiplication by a on (n,1), (n,2) and (k,0)
// curves, S_{n,0} b (through T_n(a) b), and S_{n,1} S_{0,1}. Anything else
// raises ErrorKind::kNoProductRule. The working flavor is S.
namespace skein::s04 {

using Label = skein::Label<4>;
using Element = skein::Element<4>;
using Exponents = std::array<int, 4>;

inline Label Slope(std::int64_t r, std::int64_t s, Exponents g = {}) { return {CurveClass(r, s), g}; }
inline Label Gammas(Exponents g) { return {std::nullopt, g}; }

// c_n = gamma1 gamma3 + gamma2 gamma4 (n even), gamma1 gamma4 + gamma2 gamma3 (n odd).
Element c(std::int64_t n, const SeqPtr& flavor);
// gamma1 gamma2 + gamma3 gamma4
Element h1_constant(const SeqPtr& flavor);
// gamma1 gamma2 gamma3 gamma4 + sum gamma_i^2 - 2
Element big_gamma(const SeqPtr& flavor);
// S_{1,0} + (q^2 + q^-2)(gamma1 gamma2 + gamma3 gamma4)
Element bracket_constant(const SeqPtr& flavor);

// sigma^k applied to every label.
Element sigma(const Element& x, std::int64_t k = 1);

// a b_n = q^2 b_{n+1} + q^-2 b_{n-1} + c_n, in the requested flavor.
Element mul_a_bn(std::int64_t n, const SeqPtr& flavor);

// T_n(a) b = q^{2n} b_n + q^{-2n} b_{-n} + c_0 f_n(a) + c_1 g_n(a), in T-hat.
Element mul_tna_b(int n);
// f_n, g_n as polynomials in a.
Poly1 f_poly(int n);
Poly1 g_poly(int n);

// S_{1,0} S_{m,2}: the two base products (m = 0, 1) transported by sigma^k, k = floor(m/2).
Element mul_s10_sm2(std::int64_t m);

// g_n = sum_{i=1}^{n/2} q^{4i-2} sum_{j=i}^{n-i} c_{n-j+1} S_{j,1}.
Element g_s04_closed(int n);

struct SN1S01 {
  Element full;
  Element h;
};
// S_{n,1} S_{0,1} by the recursion in n, and the remainder
// h_n = full - q^{2n} S_{n,2} - q^{-2n} S_{n,0} - g_n.
SN1S01 mul_sn1_s01(int n);

// Partial product in the S flavor.
Element mul(const Element& x, const Element& y);
// Converts to S, multiplies, converts back to x's flavor.
Element mul_any(const Element& x, const Element& y);

struct Extraction {
  LaurentPoly::Exponent exponent;
  Element element;
};
Extraction lowest_q_term(int n);

struct HBoundsResult {
  bool labels_ok;      // only S_{k,0} slopes and gamma monomials
  bool exponents_ok;   // q-exponents within [-2n+2, 2n-2]
  LaurentPoly::Exponent min_exponent;
  LaurentPoly::Exponent max_exponent;
};
HBoundsResult check_h(int n);

struct P1Forcing {
  std::int64_t delta;
  // P_1(a) P_1(b) expanded in a basis with P_1 = x + delta.
  Element product;
  Label gamma_label;  // P_1(gamma_1)
  LaurentPoly gamma_coeff;
  Label a_label;      // P_1(a)
  LaurentPoly a_coeff;
  bool violated;
};
P1Forcing p1_forcing_witness(std::int64_t delta);

PositivityReport verify_h_bounds(int n_max);
// lowest_q_term(n) == (-2n, S_{n,0}) for 1 <= n <= n_max.
PositivityReport verify_lowest_term(int n_max);

}  // namespace skein::s04
