#pragma once

#include <cstddef>
#include <vector>

#include "skein/element.hpp"
#include "skein/report.hpp"

// Skein algebra of the closed torus. Products are computed in the T-hat
// flavor, where the label (r,s) is T_d of the primitive curve, with the
// Frohman-Gelca product-to-sum rule.
namespace skein::torus {

using Label = skein::Label<0>;
using Element = skein::Element<0>;

// (r,s)_T * (u,v)_T = q^D (r+u,s+v)_T + q^-D (r-u,s-v)_T with D = rv - su.
// A (0,0) term on the right stands for 2 * Empty.
Element fg_mul(const Label& a, const Label& b);

// Bilinear extension of fg_mul. Both factors must be in the T-hat flavor.
Element mul(const Element& x, const Element& y);

// Converts both factors to T-hat, multiplies and converts back to x's flavor.
Element mul_any(const Element& x, const Element& y);

// Product of two basis elements of B_P, expanded in B_P.
Element structure_constants(const SeqPtr& p, const Label& a, const Label& b);

// Empty followed by every canonical slope with |r|, |s| <= bound, in
// lexicographic order.
std::vector<Label> labels_in_box(int bound);

// Checks every structure constant of B_P over labels_in_box(bound). With
// at_q1 the coefficients are specialized to q = 1 first. Violations are
// listed in scan order, at most max_witnesses of them.
PositivityReport positivity_scan(const SeqPtr& p, int bound, bool at_q1 = false,
                                 std::size_t max_witnesses = 1000);

Element transport(const Element& x, const MappingClass& m);

}  // namespace skein::torus
