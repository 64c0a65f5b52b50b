#include "pretzel/pretzel.hpp"

#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace pretzel {
namespace {

LaurentPoly neg_a_to_minus4() { return LaurentPoly::monomial(-1, -4); }

LaurentPoly delta_squared() { return mul(delta(), delta()); }

}  // namespace

TL2Element column_weights(int p) {
  if (p < 1) throw Error(ErrorCode::BadParams, "column needs at least one crossing");
  TL2Element w;
  w.alpha = LaurentPoly::monomial(1, p);
  // beta_p = A^(p-2) * (1 - A^-4 + A^-8 - ...), p terms
  LaurentPoly geom;
  for (int t = 0; t < p; ++t)
    geom = add(geom, LaurentPoly::monomial(t % 2 ? -1 : 1, -4 * t));
  w.beta = mul(LaurentPoly::monomial(1, p - 2), geom);
  return w;
}

LaurentPoly bracket_fast(const PretzelSpec& spec) {
  const LaurentPoly d = delta();
  LaurentPoly prod_beta(1);
  LaurentPoly prod_mixed(1);  // prod(beta_i + delta * alpha_i)
  for (int p : spec.columns) {
    const TL2Element w = column_weights(p);
    prod_beta = mul(prod_beta, w.beta);
    prod_mixed = mul(prod_mixed, add(w.beta, mul(d, w.alpha)));
  }
  return add(mul(d, prod_beta), divide_exact(sub(prod_mixed, prod_beta), d));
}

LaurentPoly bracket_closed_form_mabc(long long m, long long a, long long b, long long c) {
  if (m < 0 || m % 2 != 0)
    throw Error(ErrorCode::OddM, "the closed form requires a non-negative even m");
  if (a < 1 || b < 1 || c < 1)
    throw Error(ErrorCode::BadParams, "column counts a, b, c must be positive");
  const LaurentPoly d2 = delta_squared();
  const LaurentPoly fa = f_poly(a), fb = f_poly(b), fc = f_poly(c);
  const LaurentPoly lhs = mul(mul(add(fa, d2), add(fb, d2)), add(fc, d2));
  const LaurentPoly rhs = mul(mul(pow(neg_a_to_minus4(), static_cast<unsigned long long>(m)),
                                  sub(d2, LaurentPoly(1))),
                              mul(mul(fa, fb), fc));
  const LaurentPoly numerator = add(lhs, rhs);
  return mul(LaurentPoly::monomial(1, 3 * m + a + b + c),
             divide_exact(numerator, pow(delta(), 4)));
}

Identity identity_from_name(std::string_view name) {
  if (name == "eq2") return Identity::Eq2;
  if (name == "eq3") return Identity::Eq3;
  if (name == "f6_factorization") return Identity::F6Factorization;
  if (name == "lemma31") return Identity::Lemma31;
  if (name == "lemma32") return Identity::Lemma32;
  if (name == "thm12_bracket") return Identity::Thm12Bracket;
  throw Error(ErrorCode::ParseError, "unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Eq2: return "eq2";
    case Identity::Eq3: return "eq3";
    case Identity::F6Factorization: return "f6_factorization";
    case Identity::Lemma31: return "lemma31";
    case Identity::Lemma32: return "lemma32";
    case Identity::Thm12Bracket: return "thm12_bracket";
  }
  return "?";
}

bool check_identity(Identity id, const IdentityParams& params) {
  const LaurentPoly d2 = delta_squared();
  const LaurentPoly one(1);
  switch (id) {
    case Identity::Eq2: {
      // A^-4 (1 - A^-4) (delta^2 - 1) = 1 + (-A^-4)^3
      const LaurentPoly lhs = mul(LaurentPoly::monomial(1, -4),
                                  mul(sub(one, LaurentPoly::monomial(1, -4)), sub(d2, one)));
      const LaurentPoly rhs = add(one, pow(neg_a_to_minus4(), 3));
      return lhs == rhs;
    }
    case Identity::Eq3: {
      // F_{a+b} = (-A^-4)^b F_a + F_b
      if (!params.a || !params.b || *params.a < 1 || *params.b < 1)
        throw Error(ErrorCode::BadParams, "eq3 needs a >= 1 and b >= 1");
      const long long a = *params.a, b = *params.b;
      const LaurentPoly lhs = f_poly(a + b);
      const LaurentPoly rhs =
          add(mul(pow(neg_a_to_minus4(), static_cast<unsigned long long>(b)), f_poly(a)),
              f_poly(b));
      return lhs == rhs;
    }
    case Identity::F6Factorization: {
      // F_6 = A^-4 F_3 (1 - A^-4) (delta^2 - 1)
      const LaurentPoly rhs = mul(mul(LaurentPoly::monomial(1, -4), f_poly(3)),
                                  mul(sub(one, LaurentPoly::monomial(1, -4)), sub(d2, one)));
      return f_poly(6) == rhs;
    }
    case Identity::Lemma31: {
      // (F_{a+2}+d2)(F_{a+1}+d2) - (F_{a-1}+d2)(F_{a-2}+d2) = (-A^-4)^(a-3) F_6 F_a
      if (!params.a || *params.a < 3)
        throw Error(ErrorCode::BadParams, "lemma31 needs a >= 3 so every index is positive");
      const long long a = *params.a;
      const LaurentPoly lhs = sub(mul(add(f_poly(a + 2), d2), add(f_poly(a + 1), d2)),
                                  mul(add(f_poly(a - 1), d2), add(f_poly(a - 2), d2)));
      const LaurentPoly rhs = mul(pow(neg_a_to_minus4(), static_cast<unsigned long long>(a - 3)),
                                  mul(f_poly(6), f_poly(a)));
      return lhs == rhs;
    }
    case Identity::Lemma32: {
      // (d2 - 1)(F_{a+2} F_{a+1} - (-A^-4)^6 F_{a-1} F_{a-2}) = -F_6 (F_a + d2)
      if (!params.a || *params.a < 3)
        throw Error(ErrorCode::BadParams, "lemma32 needs a >= 3 so every index is positive");
      const long long a = *params.a;
      const LaurentPoly lhs =
          mul(sub(d2, one), sub(mul(f_poly(a + 2), f_poly(a + 1)),
                                mul(pow(neg_a_to_minus4(), 6),
                                    mul(f_poly(a - 1), f_poly(a - 2)))));
      const LaurentPoly rhs = -mul(f_poly(6), add(f_poly(a), d2));
      return lhs == rhs;
    }
    case Identity::Thm12Bracket: {
      // A^12 <D(k; k+4, k+3, k+5)> = <D(k+6; k+2, k+1, k+3)>
      if (!params.k || *params.k < 0 || *params.k % 2 != 0)
        throw Error(ErrorCode::BadParams, "thm12_bracket needs an even k >= 0");
      const long long k = *params.k;
      const LaurentPoly lhs =
          mul(LaurentPoly::monomial(1, 12), bracket_closed_form_mabc(k, k + 4, k + 3, k + 5));
      const LaurentPoly rhs = bracket_closed_form_mabc(k + 6, k + 2, k + 1, k + 3);
      return lhs == rhs;
    }
  }
  throw Error(ErrorCode::BadParams, "unhandled identity");
}

LaurentPoly jones(const PretzelSpec& spec) {
  const Diagram d = pretzel_pd(spec);
  if (count_components(d) != 1)
    throw Error(ErrorCode::NotAKnot, "Jones normalization needs a one-component link");
  const int w = writhe(d);
  // (-A)^(-3w) = (-1)^w A^(-3w)
  const LaurentPoly normalizer = LaurentPoly::monomial(w % 2 ? -1 : 1, -3LL * w);
  return to_t_variable(mul(normalizer, bracket_fast(spec)));
}

std::pair<PretzelSpec, PretzelSpec> theorem12_pair(long long k) {
  if (k < 0 || k % 2 != 0)
    throw Error(ErrorCode::OddK, "the pair family is stated for even k >= 0");
  const int ki = static_cast<int>(k);
  return {PretzelSpec::shorthand(ki, {ki + 4, ki + 3, ki + 5}),
          PretzelSpec::shorthand(ki + 6, {ki + 2, ki + 1, ki + 3})};
}

std::uint64_t oracle_check(int max_crossings, int jobs) {
  if (max_crossings < 1 || max_crossings > kOracleLimitDefault)
    throw Error(ErrorCode::BadParams, "oracle sweep bound must be within the oracle limit");
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  std::vector<std::vector<int>> specs;
  std::vector<int> parts;
  // all compositions (ordered tuples) with sum <= max_crossings
  auto gen = [&](auto&& self, int remaining) -> void {
    if (!parts.empty()) specs.push_back(parts);
    for (int q = 1; q <= remaining; ++q) {
      parts.push_back(q);
      self(self, remaining - q);
      parts.pop_back();
    }
  };
  gen(gen, max_crossings);

  std::atomic<std::size_t> next{0};
  std::mutex fail_mutex;
  std::string first_failure;
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      const PretzelSpec spec(specs[i]);
      const LaurentPoly fast = bracket_fast(spec);
      const LaurentPoly brute = bracket_brute(pretzel_pd(spec));
      if (fast != brute) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (first_failure.empty()) first_failure = spec.to_string();
      }
    }
  };
  std::vector<std::thread> workers;
  for (int t = 1; t < jobs; ++t) workers.emplace_back(work);
  work();
  for (auto& t : workers) t.join();
  if (!first_failure.empty())
    throw std::logic_error("bracket_fast disagrees with the state sum on (" + first_failure + ")");
  return specs.size();
}

}  // namespace pretzel
