#pragma once

// Planar-diagram layer: pretzel diagram construction, the brute-force
// Kauffman bracket state sum (the oracle the fast paths are checked
// against), component counting, writhe and Seifert-circle computations.
//
// A crossing stores its four incident edge ids in counterclockwise
// rotational order. Slots 0 and 2 carry one strand, slots 1 and 3 the
// other; `over_first` says the strand through slots 0 and 2 is the
// overstrand. In the pretzel builder the slots are laid out as
// (top-right, top-left, bottom-left, bottom-right), and the strand from
// top-left to bottom-right is the overstrand, so over_first is false.
//
// Smoothing convention: a state value of +1 opens the crossing into the
// two arcs that join slots (1,2) and (3,0) when over_first is false --
// within a twist column that is the vertical smoothing. The convention is
// pinned by requiring the all-(+1) state of D(m; a,b,c) to leave m+3
// circles; the mirrored crossing swaps the two smoothings.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pretzel/laurent.hpp"

namespace pretzel {

inline constexpr int kOracleLimitDefault = 20;

struct PretzelSpec {
  std::vector<int> columns;

  explicit PretzelSpec(std::vector<int> cols);
  // D(m; p_1..p_n): m single-crossing columns prepended
  static PretzelSpec shorthand(int m, std::vector<int> cols);

  int column_count() const { return static_cast<int>(columns.size()); }
  int crossing_count() const;
  std::string to_string() const;  // "4,3,5"
  bool operator==(const PretzelSpec&) const = default;
};

struct State {
  std::vector<std::int8_t> values;  // one of -1, +1 per crossing

  static State all_plus(int crossings) {
    return State{std::vector<std::int8_t>(crossings, 1)};
  }
};

struct Crossing {
  std::array<int, 4> edge;  // incident edges, counterclockwise
  bool over_first;          // strand through slots 0,2 is the overstrand
};

struct Diagram {
  std::vector<Crossing> crossings;
  int edge_count = 0;
  std::vector<int> columns;  // column sizes the builder used

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  Diagram mirrored() const;  // all over/under flipped
  std::string dump() const;  // one line per crossing: X(e1,e2,e3,e4,over_first)
};

// The alternating all-positive pretzel diagram of the spec. Crossings are
// indexed column by column, left to right, top to bottom within a column.
Diagram pretzel_pd(const PretzelSpec& spec);

// Number of closed circles after nullifying every crossing according to
// its state value. Union-find over edge identifiers.
int loops_of_state(const Diagram& d, const State& s);

// Exact Kauffman bracket by summing all 2^c states. Guarded: diagrams
// beyond the oracle limit are refused rather than silently slow.
LaurentPoly bracket_brute(const Diagram& d, int oracle_limit = kOracleLimitDefault);

// Number of link components by strand tracing through crossings.
int count_components(const Diagram& d);

// Writhe of the (unique up to reversal) knot orientation. NotAKnot unless
// count_components(d) == 1.
int writhe(const Diagram& d);

// Circles left after smoothing every crossing coherently with the traced
// orientation. NotAKnot unless the diagram is a knot.
int seifert_circle_count(const Diagram& d);

// Degree of the Alexander polynomial of an alternating knot:
// c(D) - seifert_circle_count(d) + 1. NotReduced for two or fewer columns
// containing a single-crossing column, where the formula is not trusted.
int alexander_degree(const Diagram& d);

}  // namespace pretzel
