#pragma once

#include "hrpairs/rational.hpp"
#include "hrpairs/shapes.hpp"

namespace hrp {

/// s^2 = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 with c4 != 0.
class QuarticCurve {
 public:
  QuarticCurve(Rat c4, Rat c3, Rat c2, Rat c1, Rat c0);

  const Rat& c4() const { return c4_; }
  const Rat& c3() const { return c3_; }
  const Rat& c2() const { return c2_; }
  const Rat& c1() const { return c1_; }
  const Rat& c0() const { return c0_; }

  Rat eval(const Rat& t) const;

 private:
  Rat c4_, c3_, c2_, c1_, c0_;
};

struct CurvePoint {
  Rat t;
  Rat s;
};

bool on_curve(const QuarticCurve& curve, const CurvePoint& point);

/// Sign of the square-root branch used for the leading tangent coefficient
/// r = sign * sqrt(c4). The negative branch is the one that keeps the
/// recovered root finite for the pair family's curves.
enum class RootSign { negative, positive };

/// Heron parametrization (a,b,c) = ((v+w)(u^2-vw), v(u^2+w^2), w(u^2+v^2)).
/// Requires u, v, w > 0 and u^2 > vw; the area is uvw(v+w)(u^2-vw).
Triangle brahmagupta_sides(const Rat& u, const Rat& v, const Rat& w);
Rat brahmagupta_area(const Rat& u, const Rat& v, const Rat& w);

/// The quartic whose rational points make the common-area equation solvable
/// in v: coefficients (4u^2, -4u(u^2+2), u^2(u^2+8), -4u(u^2+2), 4u^2).
/// Requires u > 0; both extreme coefficients are squares with root 2u.
QuarticCurve g_curve(const Rat& u);

/// Tangent-method point construction on s^2 = f(t) from a base point
/// (0, e) with e^2 = c0 and square leading coefficient. Sets
/// r = sign*sqrt(c4), q = c3/(2r); then s^2 - f(t) = A2 t^2 + A1 t with
/// A1 = 2qe - c1 and A2 = q^2 + 2re - c2, and the new point is
/// t1 = -A1/A2, s1 = r t1^2 + q t1 + e.
/// Throws std::domain_error when c4 or c0 is not a square, the base point is
/// invalid, or A2 = 0 (degenerate tangent, no finite new point).
CurvePoint fermat_tangent_point(const QuarticCurve& curve, const CurvePoint& base,
                                RootSign sign = RootSign::negative);

/// Recovers v from the common-area equation
/// 2t^2u^2v - tu^3v - 2t^2v^2 - tu^3 + 2u^2v - 2v^2 = 0,
/// choosing a quadratic root with 0 < v < u^2 (the +sqrt branch is preferred
/// when both qualify). The residual is re-checked exactly before returning.
/// Throws std::domain_error when g(t) is not a square or no root qualifies.
Rat v_from_t(const Rat& u, const Rat& t);

/// Family index u with u > 0 and u^2 > 1/3 (tested exactly by squaring).
class FamilyParameter {
 public:
  explicit FamilyParameter(Rat u);
  const Rat& u() const { return u_; }

 private:
  Rat u_;
};

/// One family output: the rational pair plus the intermediate witnesses.
struct FamilyPair {
  Pair pair;
  Rat u;
  Rat t1;  // tangent-method parameter, > 1
  Rat s1;  // tangent-method ordinate, s1^2 = g(t1)
  Rat v;   // recovered Heron parameter, 0 < v < u^2
};

/// The closed-form pair for index u: triangle
///   a = u^2(3u^2-1)(u^4+6u^2+1)/(4u^2+1)^2,
///   b = u^2(u^2+2)(u^2+1)/(4u^2+1),
///   c = u^2(u^6+20u^4+12u^2+1)/(4u^2+1)^2,
/// rhombus side p = u^2(u^4+6u^2+1)/(2(4u^2+1)), angle parameter t1.
/// Cross-checked internally against brahmagupta_sides(u, v_from_t(u, t1), 1)
/// and the exact pair equalities; asserts t1 > 1, 0 < v < u^2 and
/// 0 < sin(theta) < 1.
FamilyPair pair_from_u(const FamilyParameter& param);

}  // namespace hrp
