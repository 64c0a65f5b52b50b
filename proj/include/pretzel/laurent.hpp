#pragma once

// Exact Laurent polynomials over the integers in one indeterminate.
//
// The polynomial variable is written "A" by default (the bracket variable);
// the same type also holds Jones polynomials in t after substitution.
// Coefficients are arbitrary-precision integers: intermediate products of
// delta powers carry binomial-scale coefficients even when final bracket
// values are small, so fixed-width coefficients are not an option here.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pretzel/error.hpp"

namespace pretzel {

using Coeff = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  // exponent/coefficient pairs, kept sorted by strictly descending exponent,
  // never storing a zero coefficient
  using Term = std::pair<std::int64_t, Coeff>;

  LaurentPoly() = default;  // zero polynomial
  LaurentPoly(long long constant);
  static LaurentPoly monomial(Coeff c, std::int64_t exp);
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  std::int64_t max_exp() const;  // ZeroPolynomial on zero
  std::int64_t min_exp() const;  // ZeroPolynomial on zero
  Coeff coeff(std::int64_t exp) const;

  // exact evaluation at an integer point (A = x); used for V(1) checks
  Coeff evaluate(long long x) const;

  LaurentPoly operator-() const;
  // every exponent negated (the bracket of the mirrored diagram)
  LaurentPoly mirrored() const;

  bool operator==(const LaurentPoly& other) const = default;

  // canonical rendering: descending exponents, "c*A^e" with signed c,
  // exponent 0 as a bare integer, terms joined by " + "
  std::string to_string(std::string_view var = "A") const;
  // JSON array of [exponent, coefficient-as-decimal-string] pairs
  std::string to_json() const;

 private:
  friend LaurentPoly add(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly mul(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly divide_exact(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly to_t_variable(const LaurentPoly&);
  void normalize();

  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly pow(const LaurentPoly& p, unsigned long long n);

// Returns r with r*q == p exactly; throws NotDivisible when no Laurent
// polynomial quotient exists. Long division from the top exponent with a
// remainder-is-zero check, so a formula bug upstream fails loudly.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

// the loop value  delta = -A^2 - A^-2
LaurentPoly delta();

// the column polynomial  F_i = (-A^-4)^i - 1,  i >= 1
LaurentPoly f_poly(long long i);

// substitute t = A^-4: a term c*A^(4u) becomes c*t^(-u);
// throws NotMultipleOfFour when some exponent is not a multiple of 4
LaurentPoly to_t_variable(const LaurentPoly& p);

// max exponent minus min exponent; throws ZeroPolynomial on zero
std::int64_t span(const LaurentPoly& p);

}  // namespace pretzel
