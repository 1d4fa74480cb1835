#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrpairs/rational.hpp"
#include "hrpairs/shapes.hpp"

namespace hrp {

/// Isosceles triangle parametrized by u > v > 0: legs u^2+v^2, base
/// 2(u^2-v^2), altitude 2uv, area 2uv(u^2-v^2), perimeter 4u^2.
struct IsoscelesTriangle {
  Rat u, v;
  Rat legs, base, altitude, area, perimeter;
};

IsoscelesTriangle isosceles_shape(const Rat& u, const Rat& v);

/// Discriminant of the matching quadratic in t:
/// u^6 - 4u^4v^2 + 8u^2v^4 - 4v^6 (equal to v^6 * sextic_value(u/v)).
Rat match_discriminant(const Rat& u, const Rat& v);

/// Rational roots t of v(u-v)(u+v) t^2 - u^3 t + v(u-v)(u+v) = 0, present
/// only when the discriminant is a rational square. Requires u > v > 0.
std::optional<std::pair<Rat, Rat>> match_quadratic(const Rat& u, const Rat& v);

/// U^6 - 4U^4 + 8U^2 - 4.
Rat sextic_value(const Rat& U);

/// Point on W^2 = U^6 - 4U^4 + 8U^2 - 4; construction re-checks the curve
/// equation exactly.
class SexticPoint {
 public:
  SexticPoint(Rat U, Rat W);
  const Rat& U() const { return U_; }
  const Rat& W() const { return W_; }

 private:
  Rat U_, W_;
};

struct SexticScanReport {
  unsigned long height = 0;
  unsigned long long candidates_tested = 0;
  std::vector<SexticPoint> points;  // canonical order: |U| numerator, denominator, signs
  std::chrono::milliseconds elapsed{0};
};

/// Enumerates U = +-m/n in lowest terms with 0 <= m <= H, 1 <= n <= H and
/// collects every point of the sextic, both W signs. Partitioned over
/// worker threads; the merged result is order-independent and identical to
/// the single-threaded run. Throws std::invalid_argument for H < 1.
SexticScanReport sextic_scan(unsigned long height, unsigned threads = 0);

struct DegeneracyCheck {
  std::string claim;
  bool verified = false;
};

struct DegeneracyReport {
  std::vector<DegeneracyCheck> checks;
  bool all_verified() const;
};

/// Substitutes u = v into the isosceles matching system and records that it
/// forces u^3 t = 0, i.e. only degenerate solutions remain.
DegeneracyReport degenerate_witness();

/// Builds the isosceles triangle for (u, v) and the rhombus (p = u^2, t) and
/// attempts Pair construction. The common-perimeter equation holds by
/// construction, so this throws unless the areas match exactly -- which the
/// nonexistence theorem predicts never happens for valid inputs.
Pair isosceles_pair_attempt(const Rat& u, const Rat& v, const Rat& t);

}  // namespace hrp
