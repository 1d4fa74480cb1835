#include "hrpairs/family.hpp"

#include <stdexcept>
#include <utility>

namespace hrp {

QuarticCurve::QuarticCurve(Rat c4, Rat c3, Rat c2, Rat c1, Rat c0)
    : c4_(std::move(c4)), c3_(std::move(c3)), c2_(std::move(c2)), c1_(std::move(c1)),
      c0_(std::move(c0)) {
  if (c4_ == 0) throw std::invalid_argument("quartic curve: leading coefficient is zero");
}

Rat QuarticCurve::eval(const Rat& t) const {
  // Horner form.
  return (((c4_ * t + c3_) * t + c2_) * t + c1_) * t + c0_;
}

bool on_curve(const QuarticCurve& curve, const CurvePoint& point) {
  return point.s * point.s == curve.eval(point.t);
}

Triangle brahmagupta_sides(const Rat& u, const Rat& v, const Rat& w) {
  if (u <= 0 || v <= 0 || w <= 0) {
    throw std::invalid_argument("brahmagupta: parameters must be positive");
  }
  if (u * u <= v * w) {
    throw std::invalid_argument("brahmagupta: u^2 > vw required");
  }
  return Triangle((v + w) * (u * u - v * w), v * (u * u + w * w), w * (u * u + v * v));
}

Rat brahmagupta_area(const Rat& u, const Rat& v, const Rat& w) {
  return u * v * w * (v + w) * (u * u - v * w);
}

QuarticCurve g_curve(const Rat& u) {
  if (u <= 0) throw std::invalid_argument("g_curve: u must be positive");
  const Rat u2 = u * u;
  const Rat odd = -4 * u * (u2 + 2);
  return QuarticCurve(4 * u2, odd, u2 * (u2 + 8), odd, 4 * u2);
}

CurvePoint fermat_tangent_point(const QuarticCurve& curve, const CurvePoint& base,
                                RootSign sign) {
  if (base.t != 0) throw std::domain_error("fermat: base point must sit at t = 0");
  if (base.s * base.s != curve.c0()) {
    throw std::domain_error("fermat: base ordinate does not square to the constant term");
  }
  const auto c4_root = rational_sqrt(curve.c4());
  if (!c4_root) throw std::domain_error("fermat: leading coefficient is not a square");
  // c0 squareness is implied by the base ordinate check above.

  const Rat& e = base.s;
  const Rat r = sign == RootSign::negative ? Rat(-*c4_root) : *c4_root;
  const Rat q = curve.c3() / (2 * r);
  const Rat a2 = q * q + 2 * r * e - curve.c2();
  const Rat a1 = 2 * q * e - curve.c1();
  if (a2 == 0) throw std::domain_error("fermat: tangent degenerates, no finite new point");

  const Rat t1 = -a1 / a2;
  CurvePoint point{t1, r * t1 * t1 + q * t1 + e};
  if (!on_curve(curve, point)) {
    throw std::logic_error("fermat: constructed point left the curve");
  }
  return point;
}

namespace {

// 2t^2u^2v - tu^3v - 2t^2v^2 - tu^3 + 2u^2v - 2v^2, the common-area equation
// once the perimeter has been used to eliminate the rhombus side.
Rat area_match_residual(const Rat& u, const Rat& v, const Rat& t) {
  const Rat t2 = t * t, u2 = u * u, u3 = u2 * u;
  return 2 * t2 * u2 * v - t * u3 * v - 2 * t2 * v * v - t * u3 + 2 * u2 * v - 2 * v * v;
}

}  // namespace

Rat v_from_t(const Rat& u, const Rat& t) {
  const auto g_root = rational_sqrt(g_curve(u).eval(t));
  if (!g_root) throw std::domain_error("v_from_t: g(t) is not a rational square");
  const Rat base = u * (2 * t * t * u - t * u * u + 2 * u);
  const Rat scale = 4 * (t * t + 1);
  const Rat plus_branch = (base + u * *g_root) / scale;
  const Rat minus_branch = (base - u * *g_root) / scale;
  for (const Rat& v : {plus_branch, minus_branch}) {
    if (v > 0 && v < u * u) {
      if (area_match_residual(u, v, t) != 0) {
        throw std::logic_error("v_from_t: root fails the defining equation");
      }
      return v;
    }
  }
  throw std::domain_error("v_from_t: no root in (0, u^2)");
}

FamilyParameter::FamilyParameter(Rat u) : u_(std::move(u)) {
  if (u_ <= 0 || 3 * u_ * u_ <= 1) {
    throw std::invalid_argument("family parameter: u > 0 with u^2 > 1/3 required");
  }
}

FamilyPair pair_from_u(const FamilyParameter& param) {
  const Rat& u = param.u();
  const Rat u2 = u * u;

  const QuarticCurve curve = g_curve(u);
  const CurvePoint tangent = fermat_tangent_point(curve, CurvePoint{0, 2 * u});
  const Rat& t1 = tangent.t;
  if (!(t1 > 1)) throw std::logic_error("family: tangent parameter is not > 1");

  const Rat v = v_from_t(u, t1);

  // Closed forms, then the Heron-parametrization rebuild as a cross-check.
  const Rat q1 = 4 * u2 + 1;
  const Rat q2 = 3 * u2 - 1;
  const Rat q3 = u2 * u2 + 6 * u2 + 1;
  const Rat a = u2 * q2 * q3 / (q1 * q1);
  const Rat b = u2 * (u2 + 2) * (u2 + 1) / q1;
  const Rat c = u2 * (u2 * u2 * u2 + 20 * u2 * u2 + 12 * u2 + 1) / (q1 * q1);
  const Rat p = u2 * q3 / (2 * q1);

  Triangle triangle(a, b, c);
  const Triangle rebuilt = brahmagupta_sides(u, v, 1);
  if (rebuilt.a() != a || rebuilt.b() != b || rebuilt.c() != c) {
    throw std::logic_error("family: closed-form sides differ from the parametrization");
  }

  Rhombus rhombus(p, t1);
  const Rat sin = rhombus.sin_theta();
  if (!(sin > 0 && sin < 1)) throw std::logic_error("family: sin(theta) left (0, 1)");

  // Pair construction asserts the exact perimeter and area equalities.
  Pair pair(std::move(triangle), std::move(rhombus), Provenance::from_family(u));
  return FamilyPair{std::move(pair), u, t1, tangent.s, v};
}

}  // namespace hrp
