#include "pretzel/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pretzel {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotMultipleOfFour: return "NotMultipleOfFour";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::OddM: return "OddM";
    case ErrorCode::OddK: return "OddK";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, Coeff(constant)});
}

LaurentPoly LaurentPoly::monomial(Coeff c, std::int64_t exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, std::move(c)});
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::int64_t e = terms_[i].first;
    Coeff c = std::move(terms_[i].second);
    for (++i; i < terms_.size() && terms_[i].first == e; ++i) c += terms_[i].second;
    if (c != 0) terms_[out++] = {e, std::move(c)};
  }
  terms_.resize(out);
}

std::int64_t LaurentPoly::max_exp() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "max_exp of zero polynomial");
  return terms_.front().first;
}

std::int64_t LaurentPoly::min_exp() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "min_exp of zero polynomial");
  return terms_.back().first;
}

Coeff LaurentPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.first > e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

Coeff LaurentPoly::evaluate(long long x) const {
  if (x == 0) throw Error(ErrorCode::BadParams, "evaluate at 0 undefined for Laurent polynomials");
  Coeff acc = 0;
  Coeff xc(x);
  for (const auto& [e, c] : terms_) {
    // negative powers of an integer are only integers at the units, where
    // x^e == x^|e| holds, so evaluating |e| factors is exact
    if (e < 0 && x != 1 && x != -1)
      throw Error(ErrorCode::BadParams, "negative exponent at non-unit point");
    Coeff p = 1;
    std::int64_t n = e < 0 ? -e : e;
    for (std::int64_t i = 0; i < n; ++i) p *= xc;
    acc += c * p;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.push_back({-it->first, it->second});
  return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  out.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin(), b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->first > b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == p.terms_.end() || b->first > a->first) {
      out.terms_.push_back(*b++);
    } else {
      Coeff c = a->second + b->second;
      if (c != 0) out.terms_.push_back({a->first, std::move(c)});
      ++a, ++b;
    }
  }
  return out;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return add(p, -q); }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::map<std::int64_t, Coeff, std::greater<>> acc;
  for (const auto& [ea, ca] : p.terms_)
    for (const auto& [eb, cb] : q.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.push_back({e, std::move(c)});
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned long long n) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::BadParams, "division by zero polynomial");
  if (p.is_zero()) return {};
  // any valid quotient r satisfies min_exp(r) = min_exp(p) - min_exp(q)
  const std::int64_t quot_min = p.min_exp() - q.min_exp();
  const std::int64_t q_top = q.max_exp();
  const Coeff& q_lead = q.terms().front().second;
  LaurentPoly rem = p;
  std::vector<LaurentPoly::Term> quot;
  while (!rem.is_zero()) {
    const std::int64_t e = rem.max_exp() - q_top;
    if (e < quot_min)
      throw Error(ErrorCode::NotDivisible, "nonzero remainder");
    const Coeff& lead = rem.terms().front().second;
    if (lead % q_lead != 0)
      throw Error(ErrorCode::NotDivisible, "leading coefficient not divisible");
    Coeff c = lead / q_lead;
    rem = sub(rem, mul(LaurentPoly::monomial(c, e), q));
    quot.push_back({e, std::move(c)});
  }
  // quotient exponents were produced in strictly descending order
  LaurentPoly out;
  out.terms_ = std::move(quot);
  return out;
}

LaurentPoly delta() {
  return add(LaurentPoly::monomial(-1, 2), LaurentPoly::monomial(-1, -2));
}

LaurentPoly f_poly(long long i) {
  if (i < 1) throw Error(ErrorCode::BadParams, "f_poly needs i >= 1");
  return sub(pow(LaurentPoly::monomial(-1, -4), static_cast<unsigned long long>(i)),
             LaurentPoly(1));
}

LaurentPoly to_t_variable(const LaurentPoly& p) {
  LaurentPoly out;
  out.terms_.reserve(p.terms_.size());
  // descending in A-exponent means ascending in t-exponent; reverse at the end
  for (const auto& [e, c] : p.terms_) {
    if (e % 4 != 0)
      throw Error(ErrorCode::NotMultipleOfFour,
                  "exponent " + std::to_string(e) + " is not a multiple of 4");
    out.terms_.push_back({-(e / 4), c});
  }
  std::reverse(out.terms_.begin(), out.terms_.end());
  return out;
}

std::int64_t span(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "span of zero polynomial");
  return p.max_exp() - p.min_exp();
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    if (e != 0) {
      out += '*';
      out += var;
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string LaurentPoly::to_json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(e) + ",\"" + c.str() + "\"]";
  }
  out += "]";
  return out;
}

}  // namespace pretzel
