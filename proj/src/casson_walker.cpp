#include "cwsurgery/casson_walker.hpp"

#include "cwsurgery/dedekind.hpp"
#include "cwsurgery/error.hpp"
#include "cwsurgery/number_theory.hpp"

namespace cwsurgery {

namespace {

const char* const kNotQHS = "not a rational homology sphere";

}  // namespace

LinkingForm linking_form(const TwoComponentLinkData& link) {
  const Rational fx = link.fx.value();
  const Rational fy = link.fy.value();
  const Rational lk(link.lk);
  LinkingForm form;
  form.det = fx * fy - lk * lk;
  if (form.det.is_zero()) {
    throw DomainError(std::string(kNotQHS) + ": linking matrix is singular");
  }
  // det > 0: definite, sign of the diagonal. det < 0: one eigenvalue of each sign.
  form.signature = form.det.sign() < 0 ? 0 : 2 * fx.sign();
  return form;
}

Rational v3(const TwoComponentLinkData& link) {
  const Integer lk = link.lk;
  const Rational cubic = make_rational(Integer(lk * lk * lk - lk), 12);
  return (-link.a3 + Rational(Integer((link.a2x + link.a2y) * lk)) + cubic) *
         make_rational(1, 2);
}

Rational lambda_knot(const FramedKnotSurgery& surgery) {
  const Slope& slope = surgery.slope;
  if (slope.p() == 0) {
    throw DomainError(std::string(kNotQHS) + ": slope 0/1");
  }
  const Rational inverse = make_rational(slope.q(), slope.p());
  const Rational half = Rational(surgery.a2) * inverse -
                        dedekind_symbol(inverse) * make_rational(1, 24);
  return half * Rational(2);
}

SurgeryFormulaBreakdown lambda_link_breakdown(const TwoComponentLinkData& link) {
  SurgeryFormulaBreakdown b;
  b.form = linking_form(link);

  const Rational fx = link.fx.value();
  const Rational fy = link.fy.value();
  const Rational lk2(Integer(link.lk * link.lk));
  const Rational qx2(Integer(link.fx.q() * link.fx.q()));
  const Rational qy2(Integer(link.fy.q() * link.fy.q()));
  const Rational twenty_fourth = make_rational(1, 24);
  const Rational& D = b.form.det;

  b.a2x_term = Rational(link.a2x) * fy;
  b.fy_unit_term = -fy * twenty_fourth;
  b.fy_qx_term = -fy * twenty_fourth / qx2;
  b.fy_link_term = fy * lk2 * twenty_fourth;
  b.a2y_term = Rational(link.a2y) * fx;
  b.fx_unit_term = -fx * twenty_fourth;
  b.fx_qy_term = -fx * twenty_fourth / qy2;
  b.fx_link_term = fx * lk2 * twenty_fourth;
  b.v3_term = Rational(2) * v3(link);
  b.dedekind_x_term = D * twenty_fourth * (dedekind_symbol(link.fx) - fx);
  b.dedekind_y_term = D * twenty_fourth * (dedekind_symbol(link.fy) - fy);

  b.rhs = b.a2x_term + b.fy_unit_term + b.fy_qx_term + b.fy_link_term + b.a2y_term +
          b.fx_unit_term + b.fx_qy_term + b.fx_link_term + b.v3_term + b.dedekind_x_term +
          b.dedekind_y_term;

  b.lambda = (b.rhs / D + make_rational(b.form.signature, 8)) * Rational(2);
  return b;
}

Rational lambda_link(const TwoComponentLinkData& link) {
  return lambda_link_breakdown(link).lambda;
}

Integer torus_knot_a2(const Integer& r, const Integer& s) {
  if (r < 2 || s < 2) {
    throw DomainError("torus knot parameters must be >= 2, got (" + r.get_str() + ", " +
                      s.get_str() + ")");
  }
  if (gcd_pair(r, s) != 1) {
    throw DomainError("torus knot parameters (" + r.get_str() + ", " + s.get_str() +
                      ") are not coprime");
  }
  return Integer((r * r - 1) * (s * s - 1) / 24);
}

}  // namespace cwsurgery
