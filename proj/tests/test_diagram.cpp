#include "doctest.h"

#include <functional>
#include <random>

#include "pretzel/diagram.hpp"

using namespace pretzel;

namespace {

// the crossing index ranges of the four column groups of D(m; a,b,c):
// the m single-crossing columns come first, then the a, b, c columns
struct MabcIndex {
  int m, a, b, c;
  int col_a() const { return m; }
  int col_b() const { return m + a; }
  int col_c() const { return m + a + b; }
};

// state with the first i single columns at -1, the first j crossings of the
// a column at -1, and so on; everything else +1
State state_ijkl(const MabcIndex& d, int i, int j, int k, int l) {
  State s = State::all_plus(d.m + d.a + d.b + d.c);
  for (int t = 0; t < i; ++t) s.values[t] = -1;
  for (int t = 0; t < j; ++t) s.values[d.col_a() + t] = -1;
  for (int t = 0; t < k; ++t) s.values[d.col_b() + t] = -1;
  for (int t = 0; t < l; ++t) s.values[d.col_c() + t] = -1;
  return s;
}

Diagram mabc(int m, int a, int b, int c) {
  return pretzel_pd(PretzelSpec::shorthand(m, {a, b, c}));
}

void all_compositions(int max_sum, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> parts;
  auto gen = [&](auto&& self, int remaining) -> void {
    if (!parts.empty()) emit(parts);
    for (int q = 1; q <= remaining; ++q) {
      parts.push_back(q);
      self(self, remaining - q);
      parts.pop_back();
    }
  };
  gen(gen, max_sum);
}

}  // namespace

TEST_CASE("pretzel_pd structure") {
  const Diagram tref = pretzel_pd(PretzelSpec({1, 1, 1}));
  CHECK(tref.crossing_count() == 3);
  CHECK(tref.edge_count == 6);
  const Diagram five = pretzel_pd(PretzelSpec::shorthand(2, {1, 1, 1}));
  CHECK(five.crossing_count() == 5);
  CHECK(pretzel_pd(PretzelSpec({4, 3, 5})).crossing_count() == 12);
  CHECK_THROWS_AS(PretzelSpec({}), Error);
  CHECK_THROWS_AS(PretzelSpec({2, 0}), Error);
}

TEST_CASE("every edge appears exactly twice and the diagram is connected") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nn(1, 6), pp(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> cols(nn(rng));
    for (auto& c : cols) c = pp(rng);
    const Diagram d = pretzel_pd(PretzelSpec(cols));
    std::vector<int> seen(d.edge_count, 0);
    for (const auto& cr : d.crossings)
      for (int e : cr.edge) ++seen[e];
    for (int count : seen) CHECK(count == 2);
    // union along all four edges of each crossing leaves one piece
    std::vector<int> parent(d.edge_count);
    for (int i = 0; i < d.edge_count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& cr : d.crossings)
      for (int e : cr.edge) parent[find(e)] = find(cr.edge[0]);
    int roots = 0;
    for (int i = 0; i < d.edge_count; ++i)
      if (find(i) == i) ++roots;
    CHECK(roots == 1);
  }
}

TEST_CASE("loop counts of the mu anchor states") {
  for (int m : {0, 2, 4}) {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
          const Diagram d = mabc(m, a, b, c);
          const MabcIndex idx{m, a, b, c};
          CHECK(loops_of_state(d, State::all_plus(d.crossing_count())) == m + 3);
          for (int i = 0; i <= m; ++i) {
            CHECK(loops_of_state(d, state_ijkl(idx, i, 0, 0, 0)) == m - i + 3);
            for (int j = 1; j <= a; ++j)
              CHECK(loops_of_state(d, state_ijkl(idx, i, j, 0, 0)) == m - i + j + 1);
            for (int j = 1; j <= a; ++j)
              for (int k = 1; k <= b; ++k)
                CHECK(loops_of_state(d, state_ijkl(idx, i, j, k, 0)) == m - i + j + k - 1);
            for (int j = 1; j <= a; ++j)
              for (int k = 1; k <= b; ++k)
                for (int l = 1; l <= c; ++l) {
                  const int expect = i < m ? m - i + j + k + l - 3 : j + k + l - 1;
                  CHECK(loops_of_state(d, state_ijkl(idx, i, j, k, l)) == expect);
                }
          }
        }
      }
    }
  }
}

TEST_CASE("loop count is constant on each state class") {
  // which crossings within a group sit at -1 must not matter
  std::mt19937_64 rng(22);
  const Diagram d = mabc(4, 3, 2, 3);
  const MabcIndex idx{4, 3, 2, 3};
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> di(0, 4), dj(0, 3), dk(0, 2), dl(0, 3);
    const int i = di(rng), j = dj(rng), k = dk(rng), l = dl(rng);
    State s = state_ijkl(idx, i, j, k, l);
    const int expect = loops_of_state(d, s);
    // shuffle the -1 positions within each group
    auto shuffle_group = [&](int base, int size) {
      for (int t = size - 1; t > 0; --t) {
        std::uniform_int_distribution<int> pick(0, t);
        std::swap(s.values[base + t], s.values[base + pick(rng)]);
      }
    };
    shuffle_group(0, idx.m);
    shuffle_group(idx.col_a(), idx.a);
    shuffle_group(idx.col_b(), idx.b);
    shuffle_group(idx.col_c(), idx.c);
    CHECK(loops_of_state(d, s) == expect);
  }
}

TEST_CASE("single state flip changes the loop count by exactly one") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> nn(1, 5), pp(1, 4), sv(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> cols(nn(rng));
    for (auto& c : cols) c = pp(rng);
    const Diagram d = pretzel_pd(PretzelSpec(cols));
    State s = State::all_plus(d.crossing_count());
    for (auto& v : s.values) v = sv(rng) ? 1 : -1;
    const int before = loops_of_state(d, s);
    std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1);
    const int flip = pick(rng);
    s.values[flip] = static_cast<std::int8_t>(-s.values[flip]);
    const int after = loops_of_state(d, s);
    CHECK(std::abs(after - before) == 1);
  }
}

TEST_CASE("loops_of_state validates the state length") {
  const Diagram d = pretzel_pd(PretzelSpec({2, 2}));
  CHECK_THROWS_AS(loops_of_state(d, State::all_plus(3)), Error);
}

TEST_CASE("brute bracket of the single crossing") {
  const Diagram d = pretzel_pd(PretzelSpec({1}));
  CHECK(bracket_brute(d).to_string() == "-1*A^-3");
}

TEST_CASE("oracle guard") {
  const Diagram d = pretzel_pd(PretzelSpec({7, 7, 7}));
  CHECK_THROWS_AS(bracket_brute(d), Error);
  try {
    bracket_brute(d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCrossings);
  }
  CHECK_NOTHROW(bracket_brute(d, 21));
}

TEST_CASE("bracket exponents share the parity of the crossing number") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> nn(1, 4), pp(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> cols(nn(rng));
    for (auto& c : cols) c = pp(rng);
    const Diagram d = pretzel_pd(PretzelSpec(cols));
    const LaurentPoly br = bracket_brute(d);
    for (const auto& [e, coeff] : br.terms())
      CHECK(((e - d.crossing_count()) % 2) == 0);
  }
}

TEST_CASE("mirroring negates the bracket exponents") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> nn(1, 4), pp(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> cols(nn(rng));
    for (auto& c : cols) c = pp(rng);
    const Diagram d = pretzel_pd(PretzelSpec(cols));
    if (d.crossing_count() > 12) continue;
    CHECK(bracket_brute(d.mirrored()) == bracket_brute(d).mirrored());
  }
}

TEST_CASE("component counts") {
  CHECK(count_components(pretzel_pd(PretzelSpec({1, 1, 1}))) == 1);
  CHECK(count_components(pretzel_pd(PretzelSpec({1, 1}))) == 2);
  CHECK(count_components(pretzel_pd(PretzelSpec({2, 2}))) == 2);
}

TEST_CASE("component parity rule holds for every spec up to 14 crossings") {
  all_compositions(14, [&](const std::vector<int>& cols) {
    int evens = 0;
    for (int p : cols) evens += (p % 2 == 0);
    const bool knot_by_rule = evens == 0 ? (cols.size() % 2 == 1) : evens == 1;
    const int components = count_components(pretzel_pd(PretzelSpec(cols)));
    CHECK((components == 1) == knot_by_rule);
  });
}

TEST_CASE("writhe anchors") {
  CHECK(writhe(pretzel_pd(PretzelSpec({4, 3, 5}))) == 4);
  CHECK(writhe(pretzel_pd(PretzelSpec::shorthand(6, {2, 1, 3}))) == 8);
  CHECK(writhe(pretzel_pd(PretzelSpec({1, 1, 1}))) == -3);
  CHECK_THROWS_AS(writhe(pretzel_pd(PretzelSpec({1, 1}))), Error);
}

TEST_CASE("Seifert circle counts") {
  CHECK(seifert_circle_count(pretzel_pd(PretzelSpec({1, 1, 1}))) == 2);
  CHECK(seifert_circle_count(pretzel_pd(PretzelSpec({4, 3, 5}))) == 5);
  CHECK(seifert_circle_count(pretzel_pd(PretzelSpec::shorthand(6, {2, 1, 3}))) == 9);
  CHECK_THROWS_AS(seifert_circle_count(pretzel_pd(PretzelSpec({3, 3}))), Error);
}

TEST_CASE("Alexander degree") {
  CHECK(alexander_degree(pretzel_pd(PretzelSpec({4, 3, 5}))) == 8);
  CHECK(alexander_degree(pretzel_pd(PretzelSpec::shorthand(6, {2, 1, 3}))) == 4);
  CHECK(alexander_degree(pretzel_pd(PretzelSpec({1, 1, 1}))) == 2);
  CHECK_THROWS_AS(alexander_degree(pretzel_pd(PretzelSpec({1, 2}))), Error);
  try {
    alexander_degree(pretzel_pd(PretzelSpec({1, 2})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReduced);
  }
  CHECK_THROWS_AS(alexander_degree(pretzel_pd(PretzelSpec({1, 1}))), Error);
}

TEST_CASE("diagram dump format") {
  const Diagram d = pretzel_pd(PretzelSpec({1, 1}));
  CHECK(d.dump() == "X(0,1,3,2,0)\nX(1,0,2,3,0)\n");
}
