#include "hrpairs/isosceles.hpp"

#include <stdexcept>
#include <thread>
#include <utility>

#include "hrpairs/oracle.hpp"

namespace hrp {

IsoscelesTriangle isosceles_shape(const Rat& u, const Rat& v) {
  if (!(u > v && v > 0)) {
    throw std::invalid_argument("isosceles: u > v > 0 required");
  }
  IsoscelesTriangle t;
  t.u = u;
  t.v = v;
  t.legs = u * u + v * v;
  t.base = 2 * (u * u - v * v);
  t.altitude = 2 * u * v;
  t.area = 2 * u * v * (u * u - v * v);
  t.perimeter = 4 * u * u;
  return t;
}

Rat match_discriminant(const Rat& u, const Rat& v) {
  const Rat u2 = u * u, v2 = v * v;
  return u2 * u2 * u2 - 4 * u2 * u2 * v2 + 8 * u2 * v2 * v2 - 4 * v2 * v2 * v2;
}

std::optional<std::pair<Rat, Rat>> match_quadratic(const Rat& u, const Rat& v) {
  if (!(u > v && v > 0)) {
    throw std::invalid_argument("match_quadratic: u > v > 0 required");
  }
  const auto root = rational_sqrt(match_discriminant(u, v));
  if (!root) return std::nullopt;
  const Rat lead = v * (u - v) * (u + v);  // nonzero: u > v > 0
  const Rat u3 = u * u * u;
  std::pair<Rat, Rat> roots{(u3 + *root) / (2 * lead), (u3 - *root) / (2 * lead)};
  for (const Rat& t : {roots.first, roots.second}) {
    if (lead * t * t - u3 * t + lead != 0) {
      throw std::logic_error("match_quadratic: root fails the quadratic");
    }
  }
  return roots;
}

Rat sextic_value(const Rat& U) {
  const Rat U2 = U * U;
  return ((U2 - 4) * U2 + 8) * U2 - 4;
}

SexticPoint::SexticPoint(Rat U, Rat W) : U_(std::move(U)), W_(std::move(W)) {
  if (W_ * W_ != sextic_value(U_)) {
    throw std::invalid_argument("sextic point: W^2 != U^6 - 4U^4 + 8U^2 - 4");
  }
}

namespace {

// Points for one numerator value m, every coprime denominator n <= height.
// Output order is fixed: n ascending, +U before -U, +W before -W.
void scan_numerator(unsigned long m, unsigned long height, std::vector<SexticPoint>& out,
                    unsigned long long& tested) {
  for (unsigned long n = 1; n <= height; ++n) {
    if (gcd(Int(m), Int(n)) != 1) continue;
    const Rat magnitude = make_rat(m, n);
    const bool skip_negative = (m == 0);
    for (int u_sign : {+1, -1}) {
      if (u_sign < 0 && skip_negative) continue;
      ++tested;
      const Rat U = u_sign < 0 ? Rat(-magnitude) : magnitude;
      const auto W = rational_sqrt(sextic_value(U));
      if (!W) continue;
      out.emplace_back(U, *W);
      if (*W != 0) out.emplace_back(U, Rat(-*W));
    }
  }
}

}  // namespace

SexticScanReport sextic_scan(unsigned long height, unsigned threads) {
  if (height < 1) throw std::invalid_argument("sextic_scan: height must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  if (threads == 0) threads = default_thread_count();

  const unsigned long slots = height + 1;  // one slot per numerator m
  std::vector<std::vector<SexticPoint>> points(slots);
  std::vector<unsigned long long> counts(slots, 0);

  if (threads <= 1) {
    for (unsigned long m = 0; m < slots; ++m) {
      scan_numerator(m, height, points[m], counts[m]);
    }
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (unsigned long m = w; m < slots; m += threads) {
          scan_numerator(m, height, points[m], counts[m]);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  SexticScanReport report;
  report.height = height;
  for (unsigned long m = 0; m < slots; ++m) {
    report.candidates_tested += counts[m];
    for (auto& point : points[m]) report.points.push_back(std::move(point));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

bool DegeneracyReport::all_verified() const {
  for (const auto& check : checks) {
    if (!check.verified) return false;
  }
  return true;
}

DegeneracyReport degenerate_witness() {
  DegeneracyReport report;
  // Substitute u = v symbolically via sampled exact values; each claim is an
  // identity in (v, t), so a handful of witnesses pins the reduction.
  const Rat samples[] = {Rat(1), Rat(2), make_rat(3, 2), make_rat(7, 5)};
  const Rat t_samples[] = {Rat(1), Rat(3), make_rat(24, 11)};

  bool base_zero = true, area_zero = true, forces_zero = true;
  for (const Rat& v : samples) {
    const Rat u = v;
    base_zero = base_zero && (2 * (u * u - v * v) == 0);
    area_zero = area_zero && (2 * u * v * (u * u - v * v) == 0);
    for (const Rat& t : t_samples) {
      // v(u-v)(u+v)t^2 - u^3 t + v(u-v)(u+v) collapses to -u^3 t at u = v.
      const Rat lhs = v * (u - v) * (u + v) * t * t - u * u * u * t + v * (u - v) * (u + v);
      forces_zero = forces_zero && (lhs == -u * u * u * t) && (u * u * u != 0);
    }
  }
  report.checks.push_back({"u = v makes the base 2(u^2 - v^2) vanish", base_zero});
  report.checks.push_back({"u = v makes the triangle area 2uv(u^2 - v^2) vanish", area_zero});
  report.checks.push_back(
      {"u = v collapses the matching quadratic to u^3 t = 0, so t = 0 is forced", forces_zero});
  return report;
}

Pair isosceles_pair_attempt(const Rat& u, const Rat& v, const Rat& t) {
  const IsoscelesTriangle iso = isosceles_shape(u, v);
  Triangle triangle(iso.legs, iso.legs, iso.base);
  Rhombus rhombus(u * u, t);  // perimeter 4u^2 matches by construction
  return Pair(std::move(triangle), std::move(rhombus), Provenance::from_search());
}

}  // namespace hrp
