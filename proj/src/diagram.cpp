#include "pretzel/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace pretzel {
namespace {

// union-find with path halving
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }

  int roots() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

  void reset() { std::iota(parent.begin(), parent.end(), 0); }
};

// arc pairs opened by a smoothing: value +1 with over_first=false is the
// (1,2)(3,0) pairing, everything else follows by flipping
inline std::array<int, 4> smoothing_pairs(const Crossing& c, int value) {
  const bool a_side = (value > 0);
  if (a_side != c.over_first) return {1, 2, 3, 0};  // join e1-e2 and e3-e0
  return {0, 1, 2, 3};                              // join e0-e1 and e2-e3
}

// slot corner coordinates, counterclockwise from top-right
constexpr int kSlotX[4] = {1, -1, -1, 1};
constexpr int kSlotY[4] = {1, 1, -1, -1};

// strand entry slots per crossing, discovered by walking the knot once
struct OrientedTrace {
  // entry[c][0] in {0,2}: entry slot of the strand through slots 0,2
  // entry[c][1] in {1,3}: entry slot of the strand through slots 1,3
  std::vector<std::array<int, 2>> entry;
};

std::vector<std::array<std::pair<int, int>, 2>> edge_incidences(const Diagram& d) {
  std::vector<std::array<std::pair<int, int>, 2>> inc(d.edge_count,
                                                      {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c].edge[s];
      if (inc[e][0].first < 0)
        inc[e][0] = {c, s};
      else
        inc[e][1] = {c, s};
    }
  }
  return inc;
}

OrientedTrace trace_orientation(const Diagram& d) {
  // caller has already established the diagram is a knot
  auto inc = edge_incidences(d);
  OrientedTrace t;
  t.entry.assign(d.crossing_count(), {-1, -1});
  int c = 0, s = 0;  // orientation fixed by entering crossing 0 through slot 0
  do {
    t.entry[c][s & 1] = s;
    const int exit_slot = s ^ 2;
    const int e = d.crossings[c].edge[exit_slot];
    const auto& pair = inc[e];
    if (pair[0] == std::pair{c, exit_slot}) {
      c = pair[1].first, s = pair[1].second;
    } else {
      c = pair[0].first, s = pair[0].second;
    }
  } while (!(c == 0 && s == 0));
  return t;
}

}  // namespace

PretzelSpec::PretzelSpec(std::vector<int> cols) : columns(std::move(cols)) {
  if (columns.empty()) throw Error(ErrorCode::EmptySpec, "a pretzel needs at least one column");
  for (int p : columns)
    if (p < 1) throw Error(ErrorCode::BadParams, "column twist counts must be positive");
}

PretzelSpec PretzelSpec::shorthand(int m, std::vector<int> cols) {
  if (m < 0) throw Error(ErrorCode::BadParams, "shorthand prefix must be non-negative");
  std::vector<int> all(static_cast<std::size_t>(m), 1);
  all.insert(all.end(), cols.begin(), cols.end());
  return PretzelSpec(std::move(all));
}

int PretzelSpec::crossing_count() const {
  return std::accumulate(columns.begin(), columns.end(), 0);
}

std::string PretzelSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(columns[i]);
  }
  return out;
}

Diagram Diagram::mirrored() const {
  Diagram m = *this;
  for (auto& c : m.crossings) c.over_first = !c.over_first;
  return m;
}

std::string Diagram::dump() const {
  std::string out;
  for (const auto& c : crossings) {
    out += "X(" + std::to_string(c.edge[0]) + "," + std::to_string(c.edge[1]) + "," +
           std::to_string(c.edge[2]) + "," + std::to_string(c.edge[3]) + "," +
           (c.over_first ? "1" : "0") + ")\n";
  }
  return out;
}

Diagram pretzel_pd(const PretzelSpec& spec) {
  const int n = spec.column_count();
  Diagram d;
  d.columns = spec.columns;
  d.crossings.reserve(spec.crossing_count());

  // edge ids: top closure arcs 0..n-1 (arc i joins top-right of column i to
  // top-left of column i+1 mod n), bottom arcs n..2n-1 likewise, then the
  // in-column edges between consecutive crossings
  int next_edge = 2 * n;
  const auto top_arc = [&](int i) { return i; };
  const auto bottom_arc = [&](int i) { return n + i; };

  for (int i = 0; i < n; ++i) {
    const int p = spec.columns[i];
    int left_above = top_arc((i + n - 1) % n);
    int right_above = top_arc(i);
    for (int j = 0; j < p; ++j) {
      const bool last = (j == p - 1);
      const int left_below = last ? bottom_arc((i + n - 1) % n) : next_edge++;
      const int right_below = last ? bottom_arc(i) : next_edge++;
      // slots counterclockwise: (top-right, top-left, bottom-left, bottom-right)
      d.crossings.push_back(Crossing{{right_above, left_above, left_below, right_below}, false});
      left_above = left_below;
      right_above = right_below;
    }
  }
  d.edge_count = next_edge;
  return d;
}

int loops_of_state(const Diagram& d, const State& s) {
  if (static_cast<int>(s.values.size()) != d.crossing_count())
    throw Error(ErrorCode::LengthMismatch, "state length differs from crossing count");
  for (auto v : s.values)
    if (v != 1 && v != -1) throw Error(ErrorCode::BadParams, "state values must be +1 or -1");
  UnionFind uf(d.edge_count);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& cr = d.crossings[c];
    const auto p = smoothing_pairs(cr, s.values[c]);
    uf.unite(cr.edge[p[0]], cr.edge[p[1]]);
    uf.unite(cr.edge[p[2]], cr.edge[p[3]]);
  }
  return uf.roots();
}

LaurentPoly bracket_brute(const Diagram& d, int oracle_limit) {
  const int c = d.crossing_count();
  if (c > oracle_limit)
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(c) + " crossings exceeds the oracle limit of " +
                    std::to_string(oracle_limit));

  // tally states by (number of -1 values, resulting circle count)
  std::vector<std::vector<std::uint64_t>> tally(
      static_cast<std::size_t>(c) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(c) + 2, 0));
  UnionFind uf(d.edge_count);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    uf.reset();
    for (int i = 0; i < c; ++i) {
      const auto& cr = d.crossings[i];
      const auto p = smoothing_pairs(cr, (mask >> i) & 1 ? -1 : +1);
      uf.unite(cr.edge[p[0]], cr.edge[p[1]]);
      uf.unite(cr.edge[p[2]], cr.edge[p[3]]);
    }
    const int minus = static_cast<int>(__builtin_popcountll(mask));
    ++tally[minus][uf.roots()];
  }

  // <D> = sum over states of A^(sum s) * delta^(loops - 1)
  std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(c) + 2);
  delta_pow[0] = LaurentPoly(1);
  for (std::size_t l = 1; l < delta_pow.size(); ++l) delta_pow[l] = mul(delta_pow[l - 1], delta());
  LaurentPoly out;
  for (int minus = 0; minus <= c; ++minus) {
    for (int loops = 1; loops <= c + 1; ++loops) {
      const std::uint64_t count = tally[minus][loops];
      if (!count) continue;
      const std::int64_t a_exp = c - 2 * minus;  // (+1)s minus (-1)s
      out = add(out, mul(LaurentPoly::monomial(Coeff(count), a_exp), delta_pow[loops - 1]));
    }
  }
  return out;
}

int count_components(const Diagram& d) {
  UnionFind uf(d.edge_count);
  for (const auto& cr : d.crossings) {
    uf.unite(cr.edge[0], cr.edge[2]);
    uf.unite(cr.edge[1], cr.edge[3]);
  }
  return uf.roots();
}

int writhe(const Diagram& d) {
  if (count_components(d) != 1)
    throw Error(ErrorCode::NotAKnot, "writhe needs a one-component diagram");
  const auto trace = trace_orientation(d);
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& cr = d.crossings[c];
    const int s02 = trace.entry[c][0], s13 = trace.entry[c][1];
    // travel direction entering at a corner points at the opposite corner
    const int over = cr.over_first ? s02 : s13;
    const int under = cr.over_first ? s13 : s02;
    const int ox = -kSlotX[over], oy = -kSlotY[over];
    const int ux = -kSlotX[under], uy = -kSlotY[under];
    // positive crossing: under direction rotated counterclockwise by 90
    // degrees coincides with the over direction
    w += (-uy == ox && ux == oy) ? 1 : -1;
  }
  return w;
}

int seifert_circle_count(const Diagram& d) {
  if (count_components(d) != 1)
    throw Error(ErrorCode::NotAKnot, "Seifert smoothing orientation needs a knot");
  const auto trace = trace_orientation(d);
  UnionFind uf(d.edge_count);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& cr = d.crossings[c];
    const int s02 = trace.entry[c][0], s13 = trace.entry[c][1];
    // oriented smoothing: each incoming strand continues into the other
    // strand's outgoing edge
    uf.unite(cr.edge[s02], cr.edge[s13 ^ 2]);
    uf.unite(cr.edge[s13], cr.edge[s02 ^ 2]);
  }
  return uf.roots();
}

int alexander_degree(const Diagram& d) {
  if (count_components(d) != 1)
    throw Error(ErrorCode::NotAKnot, "Alexander degree computed for knots only");
  if (d.columns.size() <= 2)
    for (int p : d.columns)
      if (p == 1)
        throw Error(ErrorCode::NotReduced,
                    "single-crossing column in a diagram with at most two columns");
  return d.crossing_count() - seifert_circle_count(d) + 1;
}

}  // namespace pretzel
