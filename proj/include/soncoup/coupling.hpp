#pragma once

// Coupling coefficients of the class-one representations of SO(n): 3j-symbol
// squares, the alpha-graph group integral I_n(l1,l2,l3|l4,l5,l6), the 6j-symbol
// extracted from it, representation dimensions and the c^(alpha) weights.
//
// Every quantity is computed through the gamma-product algebra. Symbolic mode
// returns the reduced rational function of n. Fixed n >= 5 substitutes n
// into each gamma product directly; fixed n <= 4 evaluates the symbolic
// result, since factorials such as (n-4)! only make sense there by
// continuation.

#include <string>
#include <vector>

#include "soncoup/gamma_product.hpp"
#include "soncoup/labels.hpp"
#include "soncoup/value.hpp"

namespace soncoup {

/// Fixed-n values for n at or above this use direct substitution.
inline constexpr long kDirectPathMinN = 5;

/// d_l = (2l+n-2) (l+n-3)! / (l! (n-2)!).
CouplingValue dim(int l, const Mode& mode);

GammaProduct threej_squared_gamma(const Triad& t, int shift);
/// Square of the class-one 3j-symbol (l1 l2 l3; 0 0 0) of SO(n + shift).
/// Zero unless selection_ok. shift must be even and non-negative.
CouplingValue threej_squared(const Triad& t, int shift, const Mode& mode);

/// G_n(j1,j2,j3,m) divided by the integral of sin^{2m+n-2} over [0, pi].
CouplingValue g_reduced(int j1, int j2, int j3, int m, const Mode& mode);

CouplingValue i_alpha(const CouplingLabels& labels, const Mode& mode);

/// 6j-symbol at fixed n, with 3j-symbols carrying the phase (-1)^J times
/// the positive root of their square. Throws UndefinedBySelectionRules when
/// a triad fails or a 3j-symbol vanishes at this n.
SqrtRational sixj(const CouplingLabels& labels, long n);
CouplingValue sixj_squared(const CouplingLabels& labels, const Mode& mode);

/// d_{l1} ... d_{l6} I_n.
CouplingValue c_alpha(const CouplingLabels& labels, const Mode& mode);

/// Orbit under the tetrahedral symmetries of the 6j-symbol, sorted.
std::vector<CouplingLabels> symmetry_orbit(const CouplingLabels& labels);
/// Lexicographically smallest member of the orbit.
CouplingLabels canonical_representative(const CouplingLabels& labels);

} // namespace soncoup
