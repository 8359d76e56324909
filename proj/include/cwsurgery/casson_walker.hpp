#pragma once

#include "cwsurgery/rational.hpp"
#include "cwsurgery/slope.hpp"

namespace cwsurgery {

/// p/q surgery on a knot in S^3 with Conway coefficient a2.
struct FramedKnotSurgery {
  Integer a2;
  Slope slope;
};

/// Rationally framed 2-component link K_x u K_y, described by the
/// invariants the surgery formula consumes.
struct TwoComponentLinkData {
  Integer a2x;  ///< a2(K_x)
  Integer a2y;  ///< a2(K_y)
  Rational a3;  ///< a3(L), coefficient of z^3 in the link's Conway polynomial
  Integer lk;   ///< linking number, a1(L)
  Slope fx;
  Slope fy;
};

/// Determinant and signature of [[fx, lk], [lk, fy]].
struct LinkingForm {
  Rational det;
  int signature = 0;
};

/// Throws DomainError("not a rational homology sphere") when det == 0.
LinkingForm linking_form(const TwoComponentLinkData& link);

/// v3(L) = (-a3 + (a2x + a2y) lk + (lk^3 - lk)/12) / 2.
Rational v3(const TwoComponentLinkData& link);

/// lambda_w of p/q surgery on a knot: 2 (a2 q/p - S(q/p)/24).
/// Throws DomainError when p == 0.
Rational lambda_knot(const FramedKnotSurgery& surgery);

/// Every summand of the right-hand side of the link surgery formula
///
///   D (lambda/2 - sigma/8) = a2x fy - fy/24 - fy/(24 qx^2) + fy lk^2/24
///                          + a2y fx - fx/24 - fx/(24 qy^2) + fx lk^2/24
///                          + 2 v3 + D/24 (S(fx) - fx) + D/24 (S(fy) - fy)
///
/// kept separately so a divergence can be traced to a single term.
struct SurgeryFormulaBreakdown {
  Rational a2x_term;        ///< a2x * fy
  Rational fy_unit_term;    ///< -fy/24
  Rational fy_qx_term;      ///< -fy/(24 qx^2)
  Rational fy_link_term;    ///< fy lk^2/24
  Rational a2y_term;        ///< a2y * fx
  Rational fx_unit_term;    ///< -fx/24
  Rational fx_qy_term;      ///< -fx/(24 qy^2)
  Rational fx_link_term;    ///< fx lk^2/24
  Rational v3_term;         ///< 2 v3
  Rational dedekind_x_term; ///< D/24 (S(fx) - fx)
  Rational dedekind_y_term; ///< D/24 (S(fy) - fy)

  Rational rhs;
  LinkingForm form;
  Rational lambda;
};

SurgeryFormulaBreakdown lambda_link_breakdown(const TwoComponentLinkData& link);

/// lambda_w of the surgery on the link. Throws DomainError when the
/// linking matrix is singular.
Rational lambda_link(const TwoComponentLinkData& link);

/// a2 of the (r, s) torus knot, (r^2 - 1)(s^2 - 1)/24.
/// Throws DomainError unless r, s >= 2 are coprime.
Integer torus_knot_a2(const Integer& r, const Integer& s);

}  // namespace cwsurgery
