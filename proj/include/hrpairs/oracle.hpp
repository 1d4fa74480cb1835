#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "hrpairs/rational.hpp"
#include "hrpairs/shapes.hpp"

namespace hrp {

enum class SearchFilter {
  all,            // any integer triangle with rational area
  heron_only,     // integer area required (identical to `all` when 4 | P)
  isosceles_only  // additionally two equal sides
};

struct SearchOptions {
  SearchFilter filter = SearchFilter::all;
  bool rational_side = false;  // widen to perimeters not divisible by 4
  unsigned threads = 0;        // 0 = default_thread_count()
};

struct SearchReport {
  long perimeter_bound = 0;
  std::vector<Pair> pairs;  // canonical: by perimeter, then sorted sides
  unsigned long long triangles_tested = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Enumerates every integer triangle a <= b <= c with a+b+c = P for each
/// perimeter P <= N with 4 | P (all P when rational_side), keeps those with
/// rational area matching a rhombus of side P/4 and rational angle, and
/// re-validates each hit through Pair construction. Deterministic for fixed
/// options regardless of thread count. Throws std::invalid_argument, N < 4.
SearchReport search_pairs(long max_perimeter, const SearchOptions& options = {});

/// Inverts sin(theta) = 2t/(t^2+1): the root t >= 1 of t^2 - (2/sin)t + 1,
/// present when (1 - sin^2) is a rational square. Requires 0 < sin <= 1.
std::optional<Rat> recover_t(const Rat& sin_theta);

struct CrossValidationEntry {
  enum class Status { verified, skipped, missing };
  Rat u;
  Status status;
  Rat perimeter;  // of the minimal integral pair
};

struct CrossValidationReport {
  long perimeter_bound = 0;
  std::vector<CrossValidationEntry> entries;
  std::vector<Pair> unmatched_search_hits;  // informational
  bool ok() const;                          // no entry missing
};

/// For every u whose minimal integral pair fits under the bound, asserts the
/// exhaustive search finds that exact pair; search hits matching no supplied
/// u are reported informationally.
CrossValidationReport cross_validate(const std::vector<Rat>& u_values, long max_perimeter,
                                     unsigned threads = 0);

/// HRPAIRS_THREADS environment override, else hardware concurrency, else 1.
unsigned default_thread_count();

}  // namespace hrp
