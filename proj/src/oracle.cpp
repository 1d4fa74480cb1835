#include "hrpairs/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hrpairs/family.hpp"

namespace hrp {

unsigned default_thread_count() {
  if (const char* env = std::getenv("HRPAIRS_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::optional<Rat> recover_t(const Rat& sin_theta) {
  if (!(sin_theta > 0 && sin_theta <= 1)) {
    throw std::domain_error("recover_t: sin(theta) must lie in (0, 1]");
  }
  const auto root = rational_sqrt(1 - sin_theta * sin_theta);
  if (!root) return std::nullopt;
  return (1 + *root) / sin_theta;  // the root >= 1 of t^2 - (2/sin)t + 1
}

namespace {

// All pairs for one perimeter value, in (a, b, c) ascending order.
void search_perimeter(long P, const SearchOptions& options, std::vector<Pair>& out,
                      unsigned long long& tested) {
  const Rat p = make_rat(P, 4);
  for (long a = 1; 3 * a <= P; ++a) {
    for (long b = a; 2 * b <= P - a; ++b) {
      const long c = P - a - b;
      if (c >= a + b) continue;  // strict triangle inequality
      ++tested;
      if (options.filter == SearchFilter::isosceles_only && a != b && b != c) continue;

      // 16 A^2 = P (P-2a) (P-2b) (P-2c); all factors positive here.
      const Int sixteen_area_sq = Int(P) * Int(P - 2 * a) * Int(P - 2 * b) * Int(P - 2 * c);
      const auto k = integer_sqrt(sixteen_area_sq);
      if (!k.exact) continue;  // irrational area
      const Rat area = make_rat(k.root, 4);
      if (options.filter != SearchFilter::all && !is_integer(area)) continue;

      const Rat sin = area / (p * p);
      if (!(sin > 0 && sin <= 1)) continue;
      const auto t = recover_t(sin);
      if (!t) continue;  // cos(theta) irrational

      out.emplace_back(Triangle(Rat(a), Rat(b), Rat(c)), Rhombus(p, *t),
                       Provenance::from_search());
    }
  }
}

}  // namespace

SearchReport search_pairs(long max_perimeter, const SearchOptions& options) {
  if (max_perimeter < 4) throw std::invalid_argument("search_pairs: bound must be >= 4");
  const auto started = std::chrono::steady_clock::now();

  std::vector<long> perimeters;
  const long step = options.rational_side ? 1 : 4;
  for (long P = options.rational_side ? 3 : 4; P <= max_perimeter; P += step) {
    perimeters.push_back(P);
  }

  unsigned threads = options.threads > 0 ? options.threads : default_thread_count();
  std::vector<std::vector<Pair>> found(perimeters.size());
  std::vector<unsigned long long> counts(perimeters.size(), 0);

  if (threads <= 1 || perimeters.size() <= 1) {
    for (std::size_t i = 0; i < perimeters.size(); ++i) {
      search_perimeter(perimeters[i], options, found[i], counts[i]);
    }
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < perimeters.size(); i += threads) {
          search_perimeter(perimeters[i], options, found[i], counts[i]);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  SearchReport report;
  report.perimeter_bound = max_perimeter;
  for (std::size_t i = 0; i < perimeters.size(); ++i) {
    report.triangles_tested += counts[i];
    for (auto& pair : found[i]) report.pairs.push_back(std::move(pair));
  }
  // Slots are perimeter-ascending and each slot is (a, b, c)-ascending, so
  // the concatenation is already canonical; keep the sort as a guarantee.
  std::stable_sort(report.pairs.begin(), report.pairs.end(), [](const Pair& x, const Pair& y) {
    return std::tuple(x.perimeter(), x.triangle().sorted_sides()) <
           std::tuple(y.perimeter(), y.triangle().sorted_sides());
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

bool CrossValidationReport::ok() const {
  for (const auto& entry : entries) {
    if (entry.status == CrossValidationEntry::Status::missing) return false;
  }
  return true;
}

CrossValidationReport cross_validate(const std::vector<Rat>& u_values, long max_perimeter,
                                     unsigned threads) {
  SearchOptions options;
  options.filter = SearchFilter::heron_only;
  options.threads = threads;
  const SearchReport search = search_pairs(max_perimeter, options);

  CrossValidationReport report;
  report.perimeter_bound = max_perimeter;
  std::vector<bool> matched(search.pairs.size(), false);

  for (const Rat& u : u_values) {
    const FamilyPair family = pair_from_u(FamilyParameter(u));
    const Pair integral = minimal_integral_scale(family.pair).pair;
    CrossValidationEntry entry{u, CrossValidationEntry::Status::missing, integral.perimeter()};
    if (integral.perimeter() > max_perimeter) {
      entry.status = CrossValidationEntry::Status::skipped;
    } else {
      for (std::size_t i = 0; i < search.pairs.size(); ++i) {
        if (same_pair(search.pairs[i], integral)) {
          matched[i] = true;
          entry.status = CrossValidationEntry::Status::verified;
          break;
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < search.pairs.size(); ++i) {
    if (!matched[i]) report.unmatched_search_hits.push_back(search.pairs[i]);
  }
  return report;
}

}  // namespace hrp
