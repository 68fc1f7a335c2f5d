#pragma once

#include "drinfeld/mzv_expr.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// Coefficient of w = x^a y x^b in Φ·Φ′: p_w = a_w + b_w.
Scalar product_deg1(const NCSeries& a, const NCSeries& b, const Word& w);
/// Coefficient of w = x^a y x^b y x^c in Φ·Φ′ by the closed four-term formula.
Scalar product_deg2(const NCSeries& a, const NCSeries& b, const Word& w);
/// Φ·Φ′ on every word of y-degree 1 and 2 through product_deg1/product_deg2;
/// constant 1, pure-x words left at zero.
NCSeries product_closed_form(const NCSeries& a, const NCSeries& b);

/// Φ(x,y)·Φ′(x, Φ⁻¹yΦ), computed by literal substitution. Truncation is the
/// smaller of the two operands'.
NCSeries substitution_product(const NCSeries& a, const NCSeries& b);

/// Φ⁻¹ y Φ.
NCSeries conjugated_y(const NCSeries& phi);

/// a_{x^byx^a} = -a_{x^ayx^b} on even-length degree-1 words and
/// a_{x^byx^a} = a_{x^ayx^b} on odd-length ones (the y-degree 1 part of a Lie
/// series is a combination of ad_x^k(y)).
bool degree1_antisymmetric(const NCSeries& s);
/// Constant 1, no length-1 words, no pure-x or pure-y words.
bool group_element_shape(const NCSeries& s);

}  // namespace drinfeld
