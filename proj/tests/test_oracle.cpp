#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hrpairs/family.hpp"
#include "hrpairs/oracle.hpp"

using namespace hrp;

namespace {

bool contains_pair(const std::vector<Pair>& pairs, const Pair& wanted) {
  for (const Pair& p : pairs) {
    if (same_pair(p, wanted)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("recover_t on known sines") {
  CHECK(*recover_t(make_rat(3, 5)) == 3);
  CHECK(*recover_t(1) == 1);
  CHECK_FALSE(recover_t(make_rat(1, 3)).has_value());  // 8/9 is not a square
  CHECK(*recover_t(make_rat(528, 697)) == make_rat(24, 11));

  CHECK_THROWS_AS(recover_t(0), std::domain_error);
  CHECK_THROWS_AS(recover_t(make_rat(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(recover_t(2), std::domain_error);
}

TEST_CASE("recover_t round-trips the angle parametrization") {
  std::mt19937_64 rng(101010);
  std::uniform_int_distribution<long> part(1, 100);
  for (int i = 0; i < 400; ++i) {
    long m = part(rng), n = part(rng);
    if (m < n) std::swap(m, n);  // t >= 1
    const Rat t = make_rat(m, n);
    const Rat sin = 2 * t / (t * t + 1);
    const auto back = recover_t(sin);
    REQUIRE(back.has_value());
    CHECK(*back == t);
    CHECK(2 * *back / (*back * *back + 1) == sin);
  }
}

TEST_CASE("search up to perimeter 40 finds exactly the (8,15,17) pair") {
  for (const SearchFilter filter : {SearchFilter::all, SearchFilter::heron_only}) {
    SearchOptions options;
    options.filter = filter;
    const SearchReport report = search_pairs(40, options);
    REQUIRE(report.pairs.size() == 1);
    const Pair& hit = report.pairs.front();
    CHECK(hit.triangle().a() == 8);
    CHECK(hit.triangle().b() == 15);
    CHECK(hit.triangle().c() == 17);
    CHECK(hit.rhombus().side() == 10);
    CHECK(hit.rhombus().angle_param() == 3);
    CHECK(hit.area() == 60);
    CHECK(hit.integral());
    CHECK(report.triangles_tested > 0);
  }
}

TEST_CASE("search hits satisfy the shape invariants independently") {
  const SearchReport report = search_pairs(200);
  REQUIRE(report.pairs.size() == 5);  // the five scaled copies of (8,15,17)/10
  for (long k = 1; k <= 5; ++k) {
    const Pair& p = report.pairs[static_cast<std::size_t>(k - 1)];
    CHECK(p.triangle().a() == 8 * k);
    CHECK(p.triangle().b() == 15 * k);
    CHECK(p.triangle().c() == 17 * k);
    CHECK(p.rhombus().side() == 10 * k);
    CHECK(p.rhombus().angle_param() == 3);
    CHECK(p.perimeter() == p.triangle().perimeter());
    CHECK(*p.triangle().area() == p.rhombus().area());
  }
}

TEST_CASE("tiny and invalid bounds") {
  CHECK(search_pairs(4).pairs.empty());
  CHECK(search_pairs(8).pairs.empty());
  CHECK_THROWS_AS(search_pairs(3), std::invalid_argument);
  CHECK_THROWS_AS(search_pairs(0), std::invalid_argument);
}

TEST_CASE("isosceles-only search is empty") {
  SearchOptions options;
  options.filter = SearchFilter::isosceles_only;
  CHECK(search_pairs(100, options).pairs.empty());
  CHECK(search_pairs(240, options).pairs.empty());
}

TEST_CASE("search is deterministic and thread-count independent") {
  SearchOptions serial;
  serial.threads = 1;
  SearchOptions parallel;
  parallel.threads = 5;
  const SearchReport a = search_pairs(160, serial);
  const SearchReport b = search_pairs(160, parallel);
  const SearchReport c = search_pairs(160, parallel);
  REQUIRE(a.pairs.size() == b.pairs.size());
  REQUIRE(b.pairs.size() == c.pairs.size());
  CHECK(a.triangles_tested == b.triangles_tested);
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(same_pair(a.pairs[i], b.pairs[i]));
    CHECK(same_pair(b.pairs[i], c.pairs[i]));
  }
}

TEST_CASE("search results grow monotonically with the bound") {
  const SearchReport small = search_pairs(40);
  const SearchReport large = search_pairs(120);
  CHECK(small.pairs.size() <= large.pairs.size());
  for (const Pair& p : small.pairs) {
    CHECK(contains_pair(large.pairs, p));
  }
}

TEST_CASE("widened search accepts perimeters not divisible by 4") {
  SearchOptions widened;
  widened.rational_side = true;
  const SearchReport report = search_pairs(60, widened);
  // The integral hit is still present.
  bool found_8_15_17 = false;
  for (const Pair& p : report.pairs) {
    if (p.triangle().sorted_sides() == std::array<Rat, 3>{8, 15, 17}) found_8_15_17 = true;
    CHECK(p.perimeter() == 4 * p.rhombus().side());
  }
  CHECK(found_8_15_17);
  CHECK(report.triangles_tested > search_pairs(60).triangles_tested);
}

TEST_CASE("cross_validate confirms the u = 1 pair at bound 40") {
  const CrossValidationReport report = cross_validate({Rat(1)}, 40);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == CrossValidationEntry::Status::verified);
  CHECK(report.entries[0].perimeter == 40);
  CHECK(report.unmatched_search_hits.empty());
  CHECK(report.ok());
}

TEST_CASE("cross_validate skips family pairs beyond the bound") {
  const CrossValidationReport report = cross_validate({Rat(2)}, 39);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == CrossValidationEntry::Status::skipped);
  CHECK(report.ok());
}

TEST_CASE("cross_validate reports non-family search hits informationally") {
  // At bound 80 the search also finds the doubled (16,30,34)/20 copy.
  const CrossValidationReport report = cross_validate({Rat(1)}, 80);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == CrossValidationEntry::Status::verified);
  CHECK(report.unmatched_search_hits.size() == 1);
  CHECK(report.unmatched_search_hits[0].triangle().sorted_sides() ==
        std::array<Rat, 3>{16, 30, 34});
  CHECK(report.ok());
}

TEST_CASE("cross_validate with no parameters passes trivially") {
  const CrossValidationReport report = cross_validate({}, 40);
  CHECK(report.entries.empty());
  CHECK(report.ok());
}

}  // TEST_SUITE
