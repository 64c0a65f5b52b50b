#pragma once

// Enumeration of alternating pretzel knots up to a crossing bound and the
// Jones-polynomial collision search over them.
//
// Tuples are deduplicated per dihedral class; the enumeration emits the
// nondecreasing representative of each class, which is exactly its
// lexicographic dihedral minimum. The bracket of a pretzel is symmetric in
// the columns and the writhe depends only on the multiset and the column
// count, so every arrangement of a multiset shares one Jones polynomial
// and one record stands for the whole class.
//
// Collisions are searched sum by sum: the bracket of a reduced alternating
// diagram spans exactly 4 * crossings (the Tait span, property-tested), so
// polynomials of tuples with different crossing sums can never collide.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

enum class Convention { N3, N1 };  // minimum number of columns: 3 (default) or 1

const char* convention_name(Convention c);
Convention convention_from_name(std::string_view name);  // ParseError

// Lexicographic minimum over all cyclic rotations of the tuple and of its
// reversal.
std::vector<int> canonicalize(std::vector<int> tuple);

// One component iff (all columns odd and the count is odd) or exactly one
// column is even. Matches strand tracing; tested against it exhaustively.
bool is_knot_tuple(const std::vector<int>& tuple);

// Writhe / Alexander degree of the knot from the column multiset alone.
// The even column is antiparallel exactly when the column count is odd;
// validated against the diagram trace.
int writhe_of_tuple(const std::vector<int>& tuple);           // NotAKnot
int alexander_degree_of_tuple(const std::vector<int>& tuple);  // NotAKnot

// Every canonical knot tuple with column sum <= max_crossings, each exactly
// once, ascending by sum and lexicographically within a sum.
void enumerate_knot_tuples(int max_crossings, Convention convention,
                           const std::function<void(const std::vector<int>&)>& emit);

std::uint64_t count_knots(int max_crossings, Convention convention);

// Jones polynomial in t straight from the tuple; dense fixed-width
// arithmetic in the variable x = -A^-4 for crossing sums the coefficient
// bound allows, exact big-integer fallback beyond. Agrees with jones()
// everywhere (property-tested).
LaurentPoly jones_fast(const std::vector<int>& tuple);

struct KnotRecord {
  std::vector<int> tuple;  // canonical (nondecreasing)
  int crossings = 0;
  int writhe = 0;
  int alexander_degree = 0;
  LaurentPoly jones;
};

struct CollisionGroup {
  std::vector<KnotRecord> members;  // >= 2, sorted by tuple
  bool distinct_alexander = false;  // some pair of members differs in degree
};

struct CollisionReport {
  int max_crossings = 0;
  Convention convention = Convention::N3;
  std::uint64_t knot_count = 0;
  std::vector<CollisionGroup> groups;  // sorted by crossing number, then tuple
};

// Groups of distinct canonical tuples sharing one Jones polynomial.
// Deterministic: parallel and serial runs produce the same report.
// jobs <= 0 picks the available hardware parallelism.
CollisionReport find_jones_collisions(int max_crossings, Convention convention = Convention::N3,
                                      int jobs = 0, bool progress = false);

std::string to_csv(const CollisionReport& report);
std::string to_json(const CollisionReport& report);

}  // namespace pretzel
