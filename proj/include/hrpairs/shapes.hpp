#pragma once

#include <array>
#include <optional>

#include "hrpairs/rational.hpp"

namespace hrp {

/// Triangle with positive rational sides satisfying the strict triangle
/// inequality. Sides are kept in construction order; dedup comparisons use
/// the sorted side multiset.
class Triangle {
 public:
  Triangle(Rat a, Rat b, Rat c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  Rat perimeter() const;

  /// Exact area via 16A^2 = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4.
  /// Absent when the area is irrational.
  std::optional<Rat> area() const;

  /// Integer sides and integer area.
  bool heron() const;

  std::array<Rat, 3> sorted_sides() const;

 private:
  Rat a_, b_, c_;
};

/// Rhombus with rational side p > 0 and angle parameter t >= 1 encoding
/// sin(theta) = 2t/(t^2+1), cos(theta) = (t^2-1)/(t^2+1). t = 1 is the
/// square (theta = pi/2).
class Rhombus {
 public:
  Rhombus(Rat side, Rat angle_param);

  const Rat& side() const { return side_; }
  const Rat& angle_param() const { return t_; }

  Rat sin_theta() const;
  Rat cos_theta() const;
  Rat perimeter() const;  // 4p
  Rat area() const;       // p^2 sin(theta)

 private:
  Rat side_, t_;
};

struct Provenance {
  enum class Kind { family, search };
  Kind kind = Kind::search;
  std::optional<Rat> u;  // family parameter, when kind == family

  static Provenance from_family(Rat u);
  static Provenance from_search();
};

/// A triangle and rhombus asserted to share perimeter and area exactly.
/// Construction throws std::invalid_argument naming the violated equality.
class Pair {
 public:
  Pair(Triangle triangle, Rhombus rhombus, Provenance provenance);

  const Triangle& triangle() const { return triangle_; }
  const Rhombus& rhombus() const { return rhombus_; }
  const Provenance& provenance() const { return provenance_; }

  Rat perimeter() const { return rhombus_.perimeter(); }
  const Rat& area() const { return area_; }

  /// Heron triangle plus integral rhombus side (the theta-integral pair).
  bool integral() const;

 private:
  Triangle triangle_;
  Rhombus rhombus_;
  Provenance provenance_;
  Rat area_;
};

/// Uniform scaling by lambda > 0; perimeters scale by lambda, areas by
/// lambda^2, the angle parameter is unchanged.
Pair scale_pair(const Pair& pair, const Rat& lambda);

struct IntegralScaling {
  Rat lambda;
  Pair pair;
  int doublings = 0;  // times the defensive area-integrality doubling fired
};

/// Smallest lambda > 0 making all four side lengths integral: lambda = D/g
/// with D the lcm of the four denominators and g the gcd of the numerators
/// over the common denominator D. If the scaled triangle area were ever
/// non-integral, lambda is doubled (at most twice).
IntegralScaling minimal_integral_scale(const Pair& pair);

/// Geometric equality for dedup: sorted triangle sides, rhombus side, angle
/// parameter. Provenance is ignored.
bool same_pair(const Pair& lhs, const Pair& rhs);

}  // namespace hrp
