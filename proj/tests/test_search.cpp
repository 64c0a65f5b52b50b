#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "pretzel/pretzel.hpp"
#include "pretzel/search.hpp"

using namespace pretzel;

namespace {

std::vector<std::vector<int>> collect(int max, Convention conv) {
  std::vector<std::vector<int>> out;
  enumerate_knot_tuples(max, conv, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

std::vector<int> random_knot_tuple(std::mt19937_64& rng, int min_n, int max_n, int max_p) {
  std::uniform_int_distribution<int> nn(min_n, max_n), pp(1, max_p);
  for (;;) {
    std::vector<int> cols(nn(rng));
    for (auto& c : cols) c = pp(rng);
    if (is_knot_tuple(cols)) return cols;
  }
}

}  // namespace

TEST_CASE("canonicalize picks the dihedral minimum") {
  CHECK(canonicalize({3, 1, 2}) == std::vector<int>{1, 2, 3});
  CHECK(canonicalize({2, 1, 3}) == std::vector<int>{1, 2, 3});
  CHECK(canonicalize({5, 5}) == std::vector<int>{5, 5});
  // the sorted arrangement is not in this tuple's dihedral orbit: the 2 and
  // the 3 stay separated by a 1 around the cycle, so the tuple is already
  // its own dihedral minimum
  CHECK(canonicalize({1, 1, 1, 1, 1, 1, 2, 1, 3}) ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 2, 1, 3});
  CHECK_THROWS_AS(canonicalize({}), Error);
}

TEST_CASE("canonicalize is idempotent and constant on dihedral orbits") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> nn(1, 8), pp(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> t(nn(rng));
    for (auto& v : t) v = pp(rng);
    const auto canon = canonicalize(t);
    CHECK(canonicalize(canon) == canon);
    std::uniform_int_distribution<int> rot(0, static_cast<int>(t.size()) - 1);
    std::vector<int> rotated(t.size());
    const int r = rot(rng);
    for (std::size_t i = 0; i < t.size(); ++i) rotated[i] = t[(i + r) % t.size()];
    CHECK(canonicalize(rotated) == canon);
    std::reverse(rotated.begin(), rotated.end());
    CHECK(canonicalize(rotated) == canon);
  }
}

TEST_CASE("knot parity rule matches strand tracing") {
  std::vector<int> parts;
  auto gen = [&](auto&& self, int remaining) -> void {
    if (!parts.empty()) {
      const bool traced = count_components(pretzel_pd(PretzelSpec(parts))) == 1;
      CHECK(traced == is_knot_tuple(parts));
    }
    for (int q = 1; q <= remaining; ++q) {
      parts.push_back(q);
      self(self, remaining - q);
      parts.pop_back();
    }
  };
  gen(gen, 12);
}

TEST_CASE("tuple writhe and Alexander degree match the diagram") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 150; ++trial) {
    const auto t = random_knot_tuple(rng, 3, 8, 6);
    const Diagram d = pretzel_pd(PretzelSpec(t));
    CHECK(writhe_of_tuple(t) == writhe(d));
    CHECK(alexander_degree_of_tuple(t) == alexander_degree(d));
  }
  // arrangement must not matter
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_knot_tuple(rng, 3, 7, 5);
    const int w = writhe_of_tuple(t);
    const int deg = alexander_degree_of_tuple(t);
    std::shuffle(t.begin(), t.end(), rng);
    CHECK(writhe(pretzel_pd(PretzelSpec(t))) == w);
    CHECK(alexander_degree(pretzel_pd(PretzelSpec(t))) == deg);
  }
  CHECK_THROWS_AS(writhe_of_tuple({1, 1}), Error);
  CHECK_THROWS_AS(alexander_degree_of_tuple({2, 2, 3}), Error);
}

TEST_CASE("enumeration basics") {
  CHECK(collect(3, Convention::N3) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(collect(4, Convention::N3) ==
        std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 2}});
  for (const auto& t : collect(14, Convention::N3)) {
    CHECK(t.size() >= 3);
    CHECK(is_knot_tuple(t));
    CHECK(canonicalize(t) == t);
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(t != std::vector<int>{1, 1, 1, 1});
  }
  // re-running yields the identical stream
  CHECK(collect(14, Convention::N3) == collect(14, Convention::N3));
  // no duplicates
  const auto all = collect(16, Convention::N3);
  std::set<std::vector<int>> dedup(all.begin(), all.end());
  CHECK(dedup.size() == all.size());
}

TEST_CASE("knot counts") {
  CHECK(count_knots(3, Convention::N3) == 1);
  CHECK(count_knots(4, Convention::N3) == 2);
  CHECK(count_knots(12, Convention::N3) == 97);
  CHECK(count_knots(20, Convention::N3) == 798);
  CHECK(count_knots(20, Convention::N1) == 863);
  CHECK(count_knots(30, Convention::N3) == 5719);
}

TEST_CASE("the dense evaluator agrees with the exact Jones route") {
  for (const auto& t : collect(12, Convention::N3))
    CHECK(jones_fast(t) == jones(PretzelSpec(t)));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = random_knot_tuple(rng, 3, 9, 7);
    CHECK(jones_fast(t) == jones(PretzelSpec(t)));
  }
  // unknots under the single-column convention
  CHECK(jones_fast({1}) == LaurentPoly(1));
  CHECK(jones_fast({4}) == LaurentPoly(1));
  CHECK_THROWS_AS(jones_fast({1, 1}), Error);
}

TEST_CASE("collision search finds the first pair at twelve crossings") {
  const CollisionReport none = find_jones_collisions(11, Convention::N3, 2);
  CHECK(none.groups.empty());
  CHECK(none.knot_count == 74);

  const CollisionReport report = find_jones_collisions(12, Convention::N3, 2);
  REQUIRE(report.groups.size() == 1);
  const auto& g = report.groups.front();
  CHECK(g.distinct_alexander);
  REQUIRE(g.members.size() == 2);
  CHECK(g.members[0].tuple == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 2, 3});
  CHECK(g.members[1].tuple == std::vector<int>{3, 4, 5});
  CHECK(g.members[0].jones == g.members[1].jones);
  CHECK(g.members[0].alexander_degree == 4);
  CHECK(g.members[1].alexander_degree == 8);
  CHECK(g.members[0].writhe == 8);
  CHECK(g.members[1].writhe == 4);
}

TEST_CASE("parallel and serial searches produce identical reports") {
  const CollisionReport serial = find_jones_collisions(30, Convention::N3, 1);
  const CollisionReport parallel = find_jones_collisions(30, Convention::N3, 4);
  CHECK(to_json(serial) == to_json(parallel));
  CHECK(serial.knot_count == 5719);
  REQUIRE(serial.groups.size() == 3);
  for (int k = 0; k <= 4; k += 2) {
    const auto [a, b] = theorem12_pair(k);
    const auto& g = serial.groups[static_cast<std::size_t>(k / 2)];
    // records stand for column multisets: sorted representatives
    std::vector<int> ta = a.columns, tb = b.columns;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::vector<std::vector<int>> expect = {ta, tb};
    std::sort(expect.begin(), expect.end());
    REQUIRE(g.members.size() == 2);
    CHECK(g.members[0].tuple == expect[0]);
    CHECK(g.members[1].tuple == expect[1]);
  }
}

TEST_CASE("single-column tuples under the n1 convention") {
  // every D(p) closes to the unknot: degree 0, Jones 1
  CHECK(alexander_degree_of_tuple({5}) == 0);
  CHECK(alexander_degree_of_tuple({4}) == 0);
  CHECK(alexander_degree(pretzel_pd(PretzelSpec({4}))) == 0);
  CHECK(writhe_of_tuple({4}) == -4);
  CHECK(writhe_of_tuple({5}) == -5);

  // the unknot family is the one collision group that crosses sums; the
  // two-column tuples add the same-knot duplicate family ((1,4) and (2,3)
  // both close to the five-crossing torus knot), which the default n3
  // convention avoids
  const CollisionReport report = find_jones_collisions(6, Convention::N1, 2);
  CHECK(report.knot_count == count_knots(6, Convention::N1));
  REQUIRE(report.groups.size() == 2);
  const auto& unknots = report.groups.front();
  CHECK_FALSE(unknots.distinct_alexander);
  REQUIRE(unknots.members.size() == 6);
  for (int p = 1; p <= 6; ++p) {
    CHECK(unknots.members[p - 1].tuple == std::vector<int>{p});
    CHECK(unknots.members[p - 1].jones == LaurentPoly(1));
    CHECK(unknots.members[p - 1].alexander_degree == 0);
  }
  const auto& torus5 = report.groups.back();
  CHECK_FALSE(torus5.distinct_alexander);
  REQUIRE(torus5.members.size() == 2);
  CHECK(torus5.members[0].tuple == std::vector<int>{1, 4});
  CHECK(torus5.members[1].tuple == std::vector<int>{2, 3});
  CHECK(torus5.members[0].alexander_degree == 4);
  // mirror tuples stay apart: the trefoil pair (1,2) and (1,1,1) have
  // mirror Jones polynomials and must not be conflated
  CHECK(jones_fast({1, 2}) == jones_fast({1, 1, 1}).mirrored());
  CHECK(jones_fast({1, 2}) != jones_fast({1, 1, 1}));
}

TEST_CASE("dense evaluator near its coefficient bound") {
  // mass-heavy shape: many size-3 columns drive the largest coefficients
  std::vector<int> heavy(35, 3);
  heavy.insert(heavy.end(), {1, 1, 1, 2});  // sum 110, one even column
  REQUIRE(is_knot_tuple(heavy));
  CHECK(jones_fast(heavy) == jones(PretzelSpec(heavy)));
  // a long thin one for the opposite extreme
  std::vector<int> thin(103, 1);
  thin.push_back(6);  // sum 109, 104 columns
  REQUIRE(is_knot_tuple(thin));
  CHECK(jones_fast(thin) == jones(PretzelSpec(thin)));
}

TEST_CASE("report serializations") {
  const CollisionReport report = find_jones_collisions(12, Convention::N3, 2);
  const std::string csv = to_csv(report);
  CHECK(csv.find("tuple,crossings,writhe,alexander_degree,jones\n") == 0);
  CHECK(csv.find("\"1,1,1,1,1,1,1,2,3\",12,8,4,") != std::string::npos);
  CHECK(csv.find("\"3,4,5\",12,4,8,") != std::string::npos);
  const std::string json = to_json(report);
  CHECK(json.find("\"knot_count\": 97") != std::string::npos);
  CHECK(json.find("\"distinct_alexander\": true") != std::string::npos);
  CHECK(json.find("\"tuple\": [3,4,5]") != std::string::npos);
}
