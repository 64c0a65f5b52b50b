#pragma once

// Fast exact brackets for arbitrary positive pretzels, the three-column
// closed form, the bracket identity suite, and Jones polynomials.
//
// Each twist column expands in the two-strand tangle basis. With
//   alpha_p = A^p                                  (cap-cup coefficient)
//   beta_p  = A^(p-2) * sum_{t<p} (-A^-4)^t        (identity coefficient)
// and the closure rule "h cap-cup columns leave h circles when h >= 1,
// otherwise 2", the bracket of D(p_1..p_n) is
//   delta * prod(beta_i) + (prod(beta_i + delta*alpha_i) - prod(beta_i)) / delta
// with the division exact. The three-column closed form and the brute
// state sum pin this from two independent directions.

#include <optional>
#include <string_view>
#include <utility>

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

struct TL2Element {
  LaurentPoly alpha;  // cap-cup tangle coefficient
  LaurentPoly beta;   // identity tangle coefficient
};

// Bracket weights of a single column of p >= 1 crossings.
TL2Element column_weights(int p);

// Exact bracket of the alternating pretzel D(p_1..p_n); polynomial time in
// the crossing count.
LaurentPoly bracket_fast(const PretzelSpec& spec);

// Closed form for <D(m; a,b,c)> with m even:
//   A^(3m+a+b+c) delta^-4 ((F_a+d^2)(F_b+d^2)(F_c+d^2) + (-A^-4)^m (d^2-1) F_a F_b F_c)
// OddM when the even-m hypothesis is violated; the divide is exact.
LaurentPoly bracket_closed_form_mabc(long long m, long long a, long long b, long long c);

enum class Identity { Eq2, Eq3, F6Factorization, Lemma31, Lemma32, Thm12Bracket };

// maps the CLI spelling (eq2, eq3, f6_factorization, lemma31, lemma32,
// thm12_bracket) to the enum; ParseError on anything else
Identity identity_from_name(std::string_view name);
std::string_view identity_name(Identity id);

struct IdentityParams {
  std::optional<long long> a;
  std::optional<long long> b;
  std::optional<long long> k;
};

// True iff the named identity holds with the given parameters, both sides
// rebuilt independently from laurent primitives. BadParams when a required
// parameter is missing or out of range (lemma31/lemma32 need a >= 3,
// thm12_bracket needs even k >= 0, eq3 needs a,b >= 1).
bool check_identity(Identity id, const IdentityParams& params);

// Jones polynomial in t of a pretzel knot:
//   V(t)|_{t = A^-4} = (-A)^(-3 w(D)) <D>.
// NotAKnot for multi-component specs.
LaurentPoly jones(const PretzelSpec& spec);

// The two specs (k; k+4, k+3, k+5) and (k+6; k+2, k+1, k+3) whose Jones
// polynomials coincide; k must be even and non-negative (OddK otherwise).
std::pair<PretzelSpec, PretzelSpec> theorem12_pair(long long k);

// Checks bracket_fast against the brute state sum on every composition with
// crossing sum <= max_crossings. Returns the number of specs verified;
// throws std::logic_error naming the first mismatch, if any.
std::uint64_t oracle_check(int max_crossings, int jobs = 0);

}  // namespace pretzel
