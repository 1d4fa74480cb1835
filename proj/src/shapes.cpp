#include "hrpairs/shapes.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hrp {

Triangle::Triangle(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ <= 0 || b_ <= 0 || c_ <= 0) {
    throw std::invalid_argument("triangle: sides must be positive");
  }
  if (a_ + b_ <= c_ || b_ + c_ <= a_ || c_ + a_ <= b_) {
    throw std::invalid_argument("triangle: strict triangle inequality violated");
  }
}

Rat Triangle::perimeter() const { return a_ + b_ + c_; }

std::optional<Rat> Triangle::area() const {
  const Rat a2 = a_ * a_, b2 = b_ * b_, c2 = c_ * c_;
  const Rat sixteen_area_sq =
      2 * a2 * b2 + 2 * b2 * c2 + 2 * c2 * a2 - a2 * a2 - b2 * b2 - c2 * c2;
  return rational_sqrt(sixteen_area_sq / 16);
}

bool Triangle::heron() const {
  if (!is_integer(a_) || !is_integer(b_) || !is_integer(c_)) return false;
  const auto A = area();
  return A && is_integer(*A);
}

std::array<Rat, 3> Triangle::sorted_sides() const {
  std::array<Rat, 3> sides{a_, b_, c_};
  std::sort(sides.begin(), sides.end());
  return sides;
}

Rhombus::Rhombus(Rat side, Rat angle_param) : side_(std::move(side)), t_(std::move(angle_param)) {
  if (side_ <= 0) throw std::invalid_argument("rhombus: side must be positive");
  if (t_ < 1) throw std::invalid_argument("rhombus: angle parameter must be >= 1");
}

Rat Rhombus::sin_theta() const { return 2 * t_ / (t_ * t_ + 1); }

Rat Rhombus::cos_theta() const { return (t_ * t_ - 1) / (t_ * t_ + 1); }

Rat Rhombus::perimeter() const { return 4 * side_; }

Rat Rhombus::area() const { return side_ * side_ * sin_theta(); }

Provenance Provenance::from_family(Rat u) { return Provenance{Kind::family, std::move(u)}; }

Provenance Provenance::from_search() { return Provenance{Kind::search, std::nullopt}; }

Pair::Pair(Triangle triangle, Rhombus rhombus, Provenance provenance)
    : triangle_(std::move(triangle)),
      rhombus_(std::move(rhombus)),
      provenance_(std::move(provenance)) {
  if (triangle_.perimeter() != rhombus_.perimeter()) {
    throw std::invalid_argument("pair: perimeter equality violated");
  }
  const auto triangle_area = triangle_.area();
  if (!triangle_area) {
    throw std::invalid_argument("pair: triangle area is irrational");
  }
  if (*triangle_area != rhombus_.area()) {
    throw std::invalid_argument("pair: area equality violated");
  }
  area_ = *triangle_area;
}

bool Pair::integral() const { return triangle_.heron() && is_integer(rhombus_.side()); }

Pair scale_pair(const Pair& pair, const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("scale_pair: scale must be positive");
  const Triangle& t = pair.triangle();
  return Pair(Triangle(t.a() * lambda, t.b() * lambda, t.c() * lambda),
              Rhombus(pair.rhombus().side() * lambda, pair.rhombus().angle_param()),
              pair.provenance());
}

IntegralScaling minimal_integral_scale(const Pair& pair) {
  const std::array<Rat, 4> lengths{pair.triangle().a(), pair.triangle().b(), pair.triangle().c(),
                                   pair.rhombus().side()};
  Int common_den = 1;
  for (const Rat& x : lengths) {
    Int den = x.get_den();
    common_den = lcm(common_den, den);
  }
  Int numerator_gcd = 0;
  for (const Rat& x : lengths) {
    Int scaled_num = x.get_num() * (common_den / x.get_den());
    numerator_gcd = gcd(numerator_gcd, scaled_num);
  }
  Rat lambda = make_rat(common_den, numerator_gcd);

  IntegralScaling result{lambda, scale_pair(pair, lambda), 0};
  // Integer-sided rational-area triangles are expected to have integral area
  // already; the doubling is a guard, asserted unreachable on family outputs.
  while (result.doublings < 2) {
    const auto area = result.pair.triangle().area();
    if (area && is_integer(*area)) return result;
    result.lambda *= 2;
    result.pair = scale_pair(pair, result.lambda);
    ++result.doublings;
  }
  const auto area = result.pair.triangle().area();
  if (!area || !is_integer(*area)) {
    throw std::logic_error("minimal_integral_scale: area never became integral");
  }
  return result;
}

bool same_pair(const Pair& lhs, const Pair& rhs) {
  return lhs.triangle().sorted_sides() == rhs.triangle().sorted_sides() &&
         lhs.rhombus().side() == rhs.rhombus().side() &&
         lhs.rhombus().angle_param() == rhs.rhombus().angle_param();
}

}  // namespace hrp
