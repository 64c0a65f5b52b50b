#include "pretzel/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

#include "pretzel/pretzel.hpp"

namespace pretzel {
namespace {

using int128 = __int128;

// Crossing sums up to this bound keep every intermediate coefficient of the
// dense evaluator below 2^127: the numerator mass is at most 2^(S+2) and
// the partially divided polynomials stay under (S+2)*2^(S+1).
constexpr int kFastSumLimit = 116;

struct TupleShape {
  int sum = 0;
  int n = 0;
  int evens = 0;
  int even_value = 0;
};

TupleShape shape_of(const std::vector<int>& tuple) {
  TupleShape s;
  s.n = static_cast<int>(tuple.size());
  for (int p : tuple) {
    if (p < 1) throw Error(ErrorCode::BadParams, "tuple entries must be positive");
    s.sum += p;
    if (p % 2 == 0) {
      ++s.evens;
      s.even_value = p;
    }
  }
  return s;
}

int writhe_of_shape(const TupleShape& s) {
  if (s.evens == 0) return -s.sum;                      // all columns antiparallel
  return s.n % 2 ? s.sum - 2 * s.even_value : s.sum;    // even column antiparallel iff n odd
}

int alexander_degree_of_shape(const TupleShape& s) {
  if (s.n == 1) return 0;  // single-column diagrams close to the unknot
  if (s.evens == 0) return s.n - 1;
  return s.n % 2 ? s.sum - s.n - s.even_value + 3 : s.sum - s.n + 1;
}

// ---------------------------------------------------------------------------
// dense polynomials in x = -A^-4

struct XPoly {
  int lo = 0;
  std::vector<int128> c;
};

// out = in * (x^q + 1 - x - x^-1); q = 1 cancels to 1 - x^-1 by itself
void mul_bracket_factor(const XPoly& in, int q, XPoly& out) {
  const int shift = std::max(q, 1) + 1;
  out.lo = in.lo - 1;
  out.c.assign(in.c.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < in.c.size(); ++i) {
    const int128 v = in.c[i];
    if (!v) continue;
    out.c[i + static_cast<std::size_t>(q) + 1] += v;
    out.c[i + 1] += v;
    out.c[i + 2] -= v;
    out.c[i] -= v;
  }
}

// out = in * (x^q - 1)
void mul_f_factor(const XPoly& in, int q, XPoly& out) {
  out.lo = in.lo;
  out.c.assign(in.c.size() + static_cast<std::size_t>(q), 0);
  for (std::size_t i = 0; i < in.c.size(); ++i) {
    const int128 v = in.c[i];
    if (!v) continue;
    out.c[i + static_cast<std::size_t>(q)] += v;
    out.c[i] -= v;
  }
}

// The bracket numerator prod(F_i + delta^2) + (delta^2 - 1) prod(F_i),
// divided by (1-x)^(n+1), equals the bracket up to the monomial
// (-1)^(n+1) A^(sum - 2(n+1)); delta = -A^2 (1-x) makes the loop-value
// powers a plain power of (1-x) in this ring.
struct BracketX {
  int lo = 0;
  int len = 0;
  int a_pow = 0;    // overall A-exponent carried outside the x-polynomial
  bool negate = false;  // overall sign (-1)^(n+1)
  std::vector<int128> c;
};

void finalize_bracket(const XPoly& f1, const XPoly& f2, int sum, int n, BracketX& out) {
  const int f2lo = f2.lo - 1;
  const int f2hi = f2.lo + static_cast<int>(f2.c.size()) + 1;  // one past
  out.lo = std::min(f1.lo, f2lo);
  const int hi = std::max(f1.lo + static_cast<int>(f1.c.size()), f2hi);
  out.len = hi - out.lo;
  out.c.assign(static_cast<std::size_t>(out.len), 0);
  for (std::size_t i = 0; i < f1.c.size(); ++i)
    out.c[i + static_cast<std::size_t>(f1.lo - out.lo)] += f1.c[i];
  // (delta^2 - 1) = 1 - x - x^-1
  const std::size_t base = static_cast<std::size_t>(f2.lo - out.lo);
  for (std::size_t i = 0; i < f2.c.size(); ++i) {
    const int128 v = f2.c[i];
    if (!v) continue;
    out.c[base + i] += v;
    out.c[base + i + 1] -= v;
    out.c[base + i - 1] -= v;
  }
  // divide by (1-x) exactly n+1 times: quotient coefficients are prefix sums
  for (int round = 0; round <= n; ++round) {
    int128 running = 0;
    for (int i = 0; i < out.len; ++i) {
      running += out.c[static_cast<std::size_t>(i)];
      out.c[static_cast<std::size_t>(i)] = running;
    }
    if (running != 0)
      throw Error(ErrorCode::NotDivisible, "bracket numerator not divisible by the loop value");
    --out.len;
  }
  out.a_pow = sum - 2 * (n + 1);
  out.negate = ((n + 1) % 2) != 0;
}

// canonical rendering of the Jones polynomial of a knot tuple, straight
// from the bracket-in-x form
void render_jones(const BracketX& br, int writhe, std::string& out) {
  const int shifted = br.a_pow - 3 * writhe;
  if (shifted % 4 != 0)
    throw Error(ErrorCode::NotMultipleOfFour, "bracket exponent not a multiple of 4");
  const int base_t = -shifted / 4;  // t-exponent of the x^0 term
  const bool flip = (((br.negate ? 1 : 0) + writhe) % 2) != 0;  // (-1)^(n+1) (-1)^w
  out.clear();
  bool first = true;
  for (int i = br.len - 1; i >= 0; --i) {
    int128 v = br.c[static_cast<std::size_t>(i)];
    if (!v) continue;
    const int e = br.lo + i;
    if (((e % 2) != 0) != flip) v = -v;  // (-1)^e and the global sign
    if (v > static_cast<int128>(INT64_MAX) || v < -static_cast<int128>(INT64_MAX))
      throw Error(ErrorCode::BadParams, "Jones coefficient exceeded the fixed-width bound");
    if (!first) out += " + ";
    first = false;
    out += std::to_string(static_cast<long long>(v));
    const int t_exp = e + base_t;
    if (t_exp != 0) {
      out += "*t^";
      out += std::to_string(t_exp);
    }
  }
  if (first) out += '0';
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// per-sum enumeration of nondecreasing knot tuples, sharing the partial
// bracket products along the prefix tree

class SumEnumerator {
 public:
  SumEnumerator(int sum, Convention conv, bool with_poly)
      : sum_(sum), conv_(conv), with_poly_(with_poly) {
    if (with_poly_) {
      f1_.resize(static_cast<std::size_t>(sum) + 1);
      f2_.resize(static_cast<std::size_t>(sum) + 1);
      f1_[0] = XPoly{0, {1}};
      f2_[0] = XPoly{0, {1}};
    }
    parts_.reserve(static_cast<std::size_t>(sum));
  }

  // emit(parts, f1, f2): pointers null unless with_poly
  template <class Emit>
  void run(Emit&& emit) {
    descend(1, sum_, 0, emit);
  }

 private:
  template <class Emit>
  void descend(int min_part, int remaining, int evens, Emit& emit) {
    const int level = static_cast<int>(parts_.size());
    for (int q = min_part; q <= remaining; ++q) {
      const bool q_even = (q % 2 == 0);
      if (q_even && evens == 1) continue;  // a knot has at most one even column
      const bool leaf = (q == remaining);
      if (!leaf && remaining - q < q) continue;  // could not stay nondecreasing
      const int n = level + 1;
      if (leaf) {
        const int new_evens = evens + (q_even ? 1 : 0);
        if (new_evens == 0 && n % 2 == 0) continue;  // two components
        if (conv_ == Convention::N3 && n < 3) continue;
      }
      if (with_poly_) {
        mul_bracket_factor(f1_[static_cast<std::size_t>(level)], q,
                           f1_[static_cast<std::size_t>(level) + 1]);
        mul_f_factor(f2_[static_cast<std::size_t>(level)], q,
                     f2_[static_cast<std::size_t>(level) + 1]);
      }
      parts_.push_back(q);
      if (leaf) {
        emit(parts_,
             with_poly_ ? &f1_[static_cast<std::size_t>(level) + 1] : nullptr,
             with_poly_ ? &f2_[static_cast<std::size_t>(level) + 1] : nullptr);
      } else {
        descend(q, remaining - q, evens + (q_even ? 1 : 0), emit);
      }
      parts_.pop_back();
    }
  }

  int sum_;
  Convention conv_;
  bool with_poly_;
  std::vector<XPoly> f1_, f2_;
  std::vector<int> parts_;
};

struct SumOutcome {
  std::uint64_t count = 0;
  std::vector<CollisionGroup> groups;
};

void jones_text_for(const std::vector<int>& tuple, const XPoly* f1, const XPoly* f2,
                    BracketX& scratch, std::string& text) {
  const TupleShape shape = shape_of(tuple);
  if (f1) {
    finalize_bracket(*f1, *f2, shape.sum, shape.n, scratch);
    render_jones(scratch, writhe_of_shape(shape), text);
  } else {
    // beyond the fixed-width bound: exact big-integer route
    text = jones(PretzelSpec(tuple)).to_string("t");
  }
}

SumOutcome process_sum(int sum, Convention conv, std::atomic<std::uint64_t>& ticker,
                       bool progress) {
  SumOutcome out;
  const bool fast = sum <= kFastSumLimit;
  std::vector<std::uint64_t> hashes;
  BracketX scratch;
  std::string text;

  // Polynomials of single-column tuples (all unknots, Jones = 1) do not
  // span 4*sum, so they cannot join the per-sum buckets; the caller groups
  // them across sums instead.
  const auto single_column = [](const std::vector<int>& parts) { return parts.size() == 1; };

  {
    SumEnumerator en(sum, conv, fast);
    en.run([&](const std::vector<int>& parts, const XPoly* f1, const XPoly* f2) {
      ++out.count;
      if (progress) {
        const auto seen = ticker.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen % 1000000 == 0)
          std::fprintf(stderr, "search: %llu tuples processed\n",
                       static_cast<unsigned long long>(seen));
      }
      if (single_column(parts)) return;
      jones_text_for(parts, f1, f2, scratch, text);
      hashes.push_back(fnv1a64(text));
    });
  }

  std::sort(hashes.begin(), hashes.end());
  std::vector<std::uint64_t> dups;
  for (std::size_t i = 1; i < hashes.size(); ++i)
    if (hashes[i] == hashes[i - 1] && (dups.empty() || dups.back() != hashes[i]))
      dups.push_back(hashes[i]);
  if (dups.empty()) return out;

  // second pass: collect the tuples behind duplicated hashes and group them
  // by the exact polynomial text (a hash collision is re-verified here)
  std::map<std::string, std::vector<std::vector<int>>> by_jones;
  {
    SumEnumerator en(sum, conv, fast);
    en.run([&](const std::vector<int>& parts, const XPoly* f1, const XPoly* f2) {
      if (single_column(parts)) return;
      jones_text_for(parts, f1, f2, scratch, text);
      if (std::binary_search(dups.begin(), dups.end(), fnv1a64(text)))
        by_jones[text].push_back(parts);
    });
  }

  for (auto& [jones_text, tuples] : by_jones) {
    if (tuples.size() < 2) continue;  // the hash collided, the polynomials differ
    CollisionGroup group;
    for (auto& tuple : tuples) {
      KnotRecord rec;
      rec.tuple = tuple;
      rec.crossings = sum;
      // members are few: recompute everything through the diagram-level
      // route, which also cross-checks the dense evaluator
      const PretzelSpec spec(tuple);
      const Diagram d = pretzel_pd(spec);
      rec.writhe = writhe(d);
      // the diagram route declines two-column diagrams with a single
      // crossing; those only occur under the n1 convention and the
      // tuple-level formula covers them
      rec.alexander_degree =
          tuple.size() >= 3 ? alexander_degree(d) : alexander_degree_of_tuple(tuple);
      rec.jones = jones(spec);
      if (rec.jones.to_string("t") != jones_text)
        throw Error(ErrorCode::BadParams, "fast and exact Jones evaluators disagree");
      group.members.push_back(std::move(rec));
    }
    std::sort(group.members.begin(), group.members.end(),
              [](const KnotRecord& a, const KnotRecord& b) { return a.tuple < b.tuple; });
    for (const auto& m : group.members)
      if (m.alexander_degree != group.members.front().alexander_degree)
        group.distinct_alexander = true;
    out.groups.push_back(std::move(group));
  }
  return out;
}

}  // namespace

const char* convention_name(Convention c) { return c == Convention::N3 ? "n3" : "n1"; }

Convention convention_from_name(std::string_view name) {
  if (name == "n3") return Convention::N3;
  if (name == "n1") return Convention::N1;
  throw Error(ErrorCode::ParseError, "unknown convention '" + std::string(name) + "'");
}

std::vector<int> canonicalize(std::vector<int> tuple) {
  if (tuple.empty()) throw Error(ErrorCode::EmptySpec, "cannot canonicalize an empty tuple");
  for (int p : tuple)
    if (p < 1) throw Error(ErrorCode::BadParams, "tuple entries must be positive");
  const std::size_t n = tuple.size();
  std::vector<int> best = tuple;
  std::vector<int> cand(n);
  std::vector<int> reversed(tuple.rbegin(), tuple.rend());
  for (const auto& base : {tuple, reversed}) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = base[(r + i) % n];
      if (cand < best) best = cand;
    }
  }
  return best;
}

bool is_knot_tuple(const std::vector<int>& tuple) {
  const TupleShape s = shape_of(tuple);
  return s.evens == 0 ? (s.n % 2 == 1) : s.evens == 1;
}

int writhe_of_tuple(const std::vector<int>& tuple) {
  if (!is_knot_tuple(tuple)) throw Error(ErrorCode::NotAKnot, "tuple has two components");
  return writhe_of_shape(shape_of(tuple));
}

int alexander_degree_of_tuple(const std::vector<int>& tuple) {
  if (!is_knot_tuple(tuple)) throw Error(ErrorCode::NotAKnot, "tuple has two components");
  return alexander_degree_of_shape(shape_of(tuple));
}

void enumerate_knot_tuples(int max_crossings, Convention convention,
                           const std::function<void(const std::vector<int>&)>& emit) {
  if (max_crossings < 3) throw Error(ErrorCode::BadParams, "enumeration needs max_crossings >= 3");
  const int lowest = convention == Convention::N1 ? 1 : 3;
  for (int sum = lowest; sum <= max_crossings; ++sum) {
    SumEnumerator en(sum, convention, false);
    en.run([&](const std::vector<int>& parts, const XPoly*, const XPoly*) { emit(parts); });
  }
}

std::uint64_t count_knots(int max_crossings, Convention convention) {
  std::uint64_t count = 0;
  enumerate_knot_tuples(max_crossings, convention,
                        [&](const std::vector<int>&) { ++count; });
  return count;
}

LaurentPoly jones_fast(const std::vector<int>& tuple) {
  const TupleShape shape = shape_of(tuple);
  if (!is_knot_tuple(tuple)) throw Error(ErrorCode::NotAKnot, "tuple has two components");
  if (shape.sum > kFastSumLimit) return jones(PretzelSpec(tuple));
  XPoly f1{0, {1}}, f2{0, {1}}, swap;
  for (int q : tuple) {
    mul_bracket_factor(f1, q, swap);
    std::swap(f1, swap);
    mul_f_factor(f2, q, swap);
    std::swap(f2, swap);
  }
  BracketX br;
  finalize_bracket(f1, f2, shape.sum, shape.n, br);
  const int w = writhe_of_shape(shape);
  const int shifted = br.a_pow - 3 * w;
  if (shifted % 4 != 0)
    throw Error(ErrorCode::NotMultipleOfFour, "bracket exponent not a multiple of 4");
  const int base_t = -shifted / 4;
  const bool flip = (((br.negate ? 1 : 0) + w) % 2) != 0;
  LaurentPoly out;
  for (int i = br.len - 1; i >= 0; --i) {
    int128 v = br.c[static_cast<std::size_t>(i)];
    if (!v) continue;
    const int e = br.lo + i;
    if (((e % 2) != 0) != flip) v = -v;
    out = add(out, LaurentPoly::monomial(Coeff(static_cast<long long>(v)), e + base_t));
  }
  return out;
}

CollisionReport find_jones_collisions(int max_crossings, Convention convention, int jobs,
                                      bool progress) {
  if (max_crossings < 3) throw Error(ErrorCode::BadParams, "search needs max_crossings >= 3");
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  // one task per crossing sum, largest first: collisions cannot cross sums
  // because the polynomial span pins the sum
  const int lowest = convention == Convention::N1 ? 1 : 3;
  std::vector<int> sums;
  for (int s = max_crossings; s >= lowest; --s) sums.push_back(s);

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> ticker{0};
  std::mutex merge_mutex;
  CollisionReport report;
  report.max_crossings = max_crossings;
  report.convention = convention;
  std::vector<std::thread> workers;
  std::exception_ptr failure;

  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t i = next_task.fetch_add(1);
        if (i >= sums.size()) return;
        SumOutcome got = process_sum(sums[i], convention, ticker, progress);
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.knot_count += got.count;
        for (auto& g : got.groups) report.groups.push_back(std::move(g));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  for (int t = 1; t < jobs; ++t) workers.emplace_back(work);
  work();
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);

  if (convention == Convention::N1) {
    // every single-column tuple closes to the unknot; their shared Jones
    // polynomial 1 has span 0, so this is the one group that crosses sums
    CollisionGroup unknots;
    for (int p = 1; p <= max_crossings; ++p) {
      KnotRecord rec;
      rec.tuple = {p};
      rec.crossings = p;
      rec.writhe = writhe(pretzel_pd(PretzelSpec(rec.tuple)));
      rec.alexander_degree = alexander_degree_of_tuple(rec.tuple);
      rec.jones = jones(PretzelSpec(rec.tuple));
      if (rec.jones != LaurentPoly(1))
        throw Error(ErrorCode::BadParams, "single-column tuple with nontrivial Jones");
      unknots.members.push_back(std::move(rec));
    }
    unknots.distinct_alexander = false;
    report.groups.push_back(std::move(unknots));
  }

  std::sort(report.groups.begin(), report.groups.end(),
            [](const CollisionGroup& a, const CollisionGroup& b) {
              if (a.members.front().crossings != b.members.front().crossings)
                return a.members.front().crossings < b.members.front().crossings;
              return a.members.front().tuple < b.members.front().tuple;
            });
  return report;
}

namespace {

std::string tuple_text(const std::vector<int>& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  return out;
}

}  // namespace

std::string to_csv(const CollisionReport& report) {
  std::string out = "tuple,crossings,writhe,alexander_degree,jones\n";
  for (const auto& g : report.groups) {
    for (const auto& m : g.members) {
      out += '"' + tuple_text(m.tuple) + "\"," + std::to_string(m.crossings) + ',' +
             std::to_string(m.writhe) + ',' + std::to_string(m.alexander_degree) + ',' +
             m.jones.to_string("t") + '\n';
    }
  }
  return out;
}

std::string to_json(const CollisionReport& report) {
  std::string out = "{\n";
  out += "  \"max_crossings\": " + std::to_string(report.max_crossings) + ",\n";
  out += "  \"convention\": \"" + std::string(convention_name(report.convention)) + "\",\n";
  out += "  \"knot_count\": " + std::to_string(report.knot_count) + ",\n";
  out += "  \"groups\": [";
  for (std::size_t gi = 0; gi < report.groups.size(); ++gi) {
    const auto& g = report.groups[gi];
    out += gi ? ",\n    {" : "\n    {";
    out += "\"distinct_alexander\": ";
    out += g.distinct_alexander ? "true" : "false";
    out += ", \"members\": [";
    for (std::size_t mi = 0; mi < g.members.size(); ++mi) {
      const auto& m = g.members[mi];
      out += mi ? ",\n      {" : "\n      {";
      out += "\"tuple\": [";
      for (std::size_t i = 0; i < m.tuple.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m.tuple[i]);
      }
      out += "], \"crossings\": " + std::to_string(m.crossings);
      out += ", \"writhe\": " + std::to_string(m.writhe);
      out += ", \"alexander_degree\": " + std::to_string(m.alexander_degree);
      out += ", \"jones\": \"" + m.jones.to_string("t") + "\"}";
    }
    out += "\n    ]}";
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace pretzel
