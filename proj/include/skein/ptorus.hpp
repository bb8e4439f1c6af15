#pragma once

#include <cstdint>
#include <vector>

#include "skein/element.hpp"
#include "skein/report.hpp"

// Once-punctured torus. Only the product families needed for the upper
// bound argument are available; any other pair of slopes raises
// ErrorKind::kNoProductRule. Products are computed in the T-hat flavor,
// where the label (r,s) is T_{r,s} = T_d(primitive) and u counts copies of
// the peripheral curve U.
namespace skein::ptorus {

using Label = skein::Label<1>;
using Element = skein::Element<1>;

inline Label Slope(std::int64_t r, std::int64_t s, int u = 0) { return {CurveClass(r, s), {u}}; }
inline Label UPower(int u) { return {std::nullopt, {u}}; }

// T_a * T_b when the primitive of a meets b once (b primitive):
// q^D T_{a+b} + q^-D T_{a-b} with D = det(a, b). U-powers of a carry over.
Element mul_once(const Label& a, const CurveClass& b);

// A_n: 1 for odd n, 0 for even n.
int parity_indicator(std::int64_t n);

// T_{1,0} T_{n,2} = q^2 T_{n+1,2} + q^-2 T_{n-1,2} + (U + q^2 + q^-2) A_n.
Element mul_t10_tn2(std::int64_t n);

// G_n as a polynomial in a = (1,0): sum_{i=1}^{n/2} q^{4i-n-2} S_{n-2i}(a).
Poly1 g_closed(int n);
// The same G_n, computed by G_{n+1} = q^-1 G_n a - q^-2 G_{n-1} + q^{n-1} A_n.
Poly1 g_recursive(int n);

// T_{n,1} T_{0,1} = q^n T_{n,2} + q^-n T_{n,0} + (U + q^2 + q^-2) G_n, n >= 0.
Element mul_tn1_t01(int n);

// Partial product; both factors must be in the T-hat flavor.
Element mul(const Element& x, const Element& y);
// Converts to T-hat, multiplies, converts back to x's flavor.
Element mul_any(const Element& x, const Element& y);

// T_{1,0} (T_{n,1} T_{0,1}) computed two ways: through T_{1,0} T_{n,1} and
// the closed forms at n +- 1, or through the closed form at n and the
// T_{1,0} products of each of its terms.
Element t10_times_tn1_t01_left(int n);
Element t10_times_tn1_t01_right(int n);

struct Extraction {
  LaurentPoly::Exponent exponent;
  Element element;
};

// Lowest power of q in P((n,1)) P((0,1)) expanded in B_P, with its
// (integer-coefficient) element. P must have P_1 = x and integer coefficients.
Extraction upper_bound_extract(const SeqPtr& p, int n);

// g_recursive(n) == g_closed(n) for 0 <= n <= n_max.
PositivityReport verify_g_closed(int n_max);
// Left and right induction expansions agree for 1 <= n <= n_max.
PositivityReport verify_induction(int n_max);
// Lowest q-part of P((n,1)) P((0,1)) is q^-n P_n((1,0)) for 1 <= n <= n_max.
PositivityReport verify_extraction(const SeqPtr& p, int n_max);

}  // namespace skein::ptorus
