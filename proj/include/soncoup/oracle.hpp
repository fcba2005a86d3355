#pragma once

// Independent reference computations. Nothing here goes through the gamma
// product algebra: 3j-symbol squares and G values come from direct exact
// integration of Gegenbauer polynomials, the SO(3) coupling comes from
// Wigner's closed form and Racah's single sum, and the n = 3 group integral
// can also be estimated by numerical quadrature on the sphere.

#include "soncoup/exact.hpp"
#include "soncoup/labels.hpp"
#include "soncoup/value.hpp"

namespace soncoup {

/// 3j-symbol square of SO(n) by exact integration of three normalized zonal
/// harmonics against the sphere measure. Requires n >= 3.
BigRat threej_squared_by_integration(const Triad& t, long n);

/// G_n(j1,j2,j3,m) divided by the integral of sin^{2m+n-2}, by exact
/// integration. Requires n >= 3.
BigRat g_by_integration(int j1, int j2, int j3, int m, long n);

/// (l1 l2 l3; 0 0 0)^2 of SO(3) from the closed form. Zero when the triad
/// fails the selection rules.
BigRat wigner_threej_squared(const Triad& t);

/// Standard SO(3) 6j-symbol {j1 j2 j3; j4 j5 j6} from Racah's formula.
/// Zero when any of its four triangles fails.
SqrtRational racah_sixj(int j1, int j2, int j3, int j4, int j5, int j6);

/// I_3 assembled from standard 3j- and 6j-symbols:
/// (-1)^{l4+l5+l6} times four 3j-symbols times the 6j-symbol.
BigRat i_by_racah_n3(const CouplingLabels& labels);

struct QuadratureSpec {
  /// Nodes per angle. At least lmax + 1 is required; 2 lmax + 1 or more
  /// makes the rule exact for the integrand. Zero selects 2 lmax + 1.
  int points = 0;
};

struct QuadratureResult {
  double value = 0.0;
  /// Bound on the accumulated rounding error of the summation.
  double error_bound = 0.0;
  int points = 0;
};

/// I_3 by Gauss-Legendre quadrature in cos(theta) and the trapezoid rule in
/// phi over three unit vectors, one azimuth fixed by rotation invariance.
/// Throws ResolutionTooLow when spec.points < lmax + 1.
QuadratureResult i_by_quadrature_n3(const CouplingLabels& labels, const QuadratureSpec& spec = {});

} // namespace soncoup
