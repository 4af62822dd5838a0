#pragma once

// Exact Laurent polynomials over Z in the ordered variables (G, s, t).
//
// Terms are kept sorted ascending in lexicographic order on (e_G, e_s, e_t)
// with no zero coefficients, so structural equality is polynomial equality.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vknot/errors.hpp"

namespace vknot {

using Integer = boost::multiprecision::cpp_int;

enum class Var { G, s, t };

inline char var_name(Var v) {
  switch (v) {
    case Var::G: return 'G';
    case Var::s: return 's';
    case Var::t: return 't';
  }
  return '?';
}

struct Monomial {
  int g = 0;
  int s = 0;
  int t = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const { return {g + o.g, s + o.s, t + o.t}; }
  Monomial inverse() const { return {-g, -s, -t}; }

  int exponent(Var v) const {
    switch (v) {
      case Var::G: return g;
      case Var::s: return s;
      case Var::t: return t;
    }
    return 0;
  }
  int& exponent(Var v) {
    switch (v) {
      case Var::G: return g;
      case Var::s: return s;
      default: return t;
    }
  }
};

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.push_back({Monomial{}, Integer(constant)});
  }

  static LaurentPoly term(Integer coeff, Monomial mono) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({mono, std::move(coeff)});
    return p;
  }
  static LaurentPoly monomial(Monomial mono) { return term(Integer(1), mono); }
  static LaurentPoly variable(Var v, int power = 1) {
    Monomial m;
    m.exponent(v) = power;
    return monomial(m);
  }

  /// Builds a polynomial from arbitrary terms; sorts, merges equal monomials, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    LaurentPoly p;
    for (auto& tm : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == tm.mono) {
        p.terms_.back().coeff += tm.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(tm));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest term under the monomial order. Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const { return is_monomial() && terms_[0].mono.g == 0 && abs(terms_[0].coeff) == 1; }

  std::optional<int> min_exponent(Var v) const {
    if (terms_.empty()) return std::nullopt;
    int lo = terms_[0].mono.exponent(v);
    for (const auto& tm : terms_) lo = std::min(lo, tm.mono.exponent(v));
    return lo;
  }
  std::optional<int> max_exponent(Var v) const {
    if (terms_.empty()) return std::nullopt;
    int hi = terms_[0].mono.exponent(v);
    for (const auto& tm : terms_) hi = std::max(hi, tm.mono.exponent(v));
    return hi;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& tm : r.terms_) tm.coeff = -tm.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) return large.scaled(small.terms_[0].coeff, small.terms_[0].mono);
    std::vector<Term> out;
    out.reserve(small.size() * large.size());
    for (const auto& x : small.terms_) {
      for (const auto& y : large.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
    }
    return from_terms(std::move(out));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiplies by coeff * mono; shifting by a monomial preserves term order.
  LaurentPoly scaled(const Integer& coeff, const Monomial& mono) const {
    if (coeff == 0) return {};
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& tm : terms_) r.terms_.push_back({tm.mono * mono, tm.coeff * coeff});
    return r;
  }

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono < j->mono)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->mono < i->mono) {
        r.terms_.push_back({j->mono, negate_b ? Integer(-j->coeff) : j->coeff});
        ++j;
      } else {
        Integer c = negate_b ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
        if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline LaurentPoly pow(const LaurentPoly& base, int exponent) {
  if (exponent < 0) {
    if (!base.is_monomial() || abs(base.leading().coeff) != 1)
      throw NegativePowerOfNonUnit("negative power of a non-unit polynomial");
    const Term& tm = base.leading();
    Monomial m;
    m.g = tm.mono.g * exponent;
    m.s = tm.mono.s * exponent;
    m.t = tm.mono.t * exponent;
    Integer c = (tm.coeff < 0 && (exponent % 2 != 0)) ? Integer(-1) : Integer(1);
    return LaurentPoly::term(c, m);
  }
  LaurentPoly result(1);
  LaurentPoly square = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

/// Replaces `var` by `value`. Negative powers of `var` are only allowed when
/// `value` is a single term with coefficient +-1.
inline LaurentPoly substitute(const LaurentPoly& p, Var var, const LaurentPoly& value) {
  std::map<int, std::vector<Term>> by_power;
  for (const auto& tm : p.terms()) {
    Monomial rest = tm.mono;
    int e = rest.exponent(var);
    rest.exponent(var) = 0;
    by_power[e].push_back({rest, tm.coeff});
  }
  const bool unit_like = value.is_monomial() && abs(value.leading().coeff) == 1;
  if (!by_power.empty() && by_power.begin()->first < 0 && !unit_like)
    throw NegativePowerOfNonUnit(std::string("negative power of ") + var_name(var) +
                                 " substituted by a non-unit");
  std::vector<Term> out;
  for (auto& [e, rest_terms] : by_power) {
    LaurentPoly factor = pow(value, e);
    for (const auto& r : rest_terms) {
      for (const auto& f : factor.terms()) out.push_back({r.mono * f.mono, r.coeff * f.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

/// Coefficient of var^k, as a polynomial in the remaining variables.
inline LaurentPoly coeff_of_power(const LaurentPoly& p, Var var, int k) {
  std::vector<Term> out;
  for (const auto& tm : p.terms()) {
    if (tm.mono.exponent(var) != k) continue;
    Monomial rest = tm.mono;
    rest.exponent(var) = 0;
    out.push_back({rest, tm.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

namespace detail {

// Monomial that shifts every exponent of p to a minimum of zero.
inline Monomial denominator_shift(const LaurentPoly& p) {
  return {-*p.min_exponent(Var::G), -*p.min_exponent(Var::s), -*p.min_exponent(Var::t)};
}

// Division in Z[G,s,t] by repeated leading-term elimination. Both inputs have
// nonnegative exponents; returns nullopt when the remainder is nonzero.
inline std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& p, const LaurentPoly& q) {
  std::map<Monomial, Integer> rem;
  for (const auto& tm : p.terms()) rem.emplace(tm.mono, tm.coeff);
  const Term& lead = q.leading();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial shift{top->first.g - lead.mono.g, top->first.s - lead.mono.s, top->first.t - lead.mono.t};
    if (shift.g < 0 || shift.s < 0 || shift.t < 0) return std::nullopt;
    Integer c;
    Integer r;
    boost::multiprecision::divide_qr(top->second, lead.coeff, c, r);
    if (r != 0) return std::nullopt;
    for (const auto& tm : q.terms()) {
      Monomial m = tm.mono * shift;
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, -(tm.coeff * c));
      } else {
        it->second -= tm.coeff * c;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({shift, std::move(c)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly::from_terms(std::move(quotient));
}


inline std::optional<LaurentPoly> laurent_quotient(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly{};
  if (q.is_monomial()) {
    const Term& d = q.leading();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& tm : p.terms()) {
      Integer c;
      Integer r;
      boost::multiprecision::divide_qr(tm.coeff, d.coeff, c, r);
      if (r != 0) return std::nullopt;
      out.push_back({tm.mono * d.mono.inverse(), std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  // After shifting both to nonnegative exponents neither is divisible by a
  // variable, so any Laurent quotient is an honest polynomial.
  const Monomial ps = detail::denominator_shift(p);
  const Monomial qs = detail::denominator_shift(q);
  auto quotient = detail::divide_polynomial(p.scaled(1, ps), q.scaled(1, qs));
  if (!quotient) return std::nullopt;
  return quotient->scaled(1, qs * ps.inverse());
}

}  // namespace detail

/// Exact quotient p / q, or nullopt when q does not divide p. Powers of s and t
/// are units; G is not, so a quotient needing G^-1 does not exist.
inline std::optional<LaurentPoly> try_div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = detail::laurent_quotient(p, q);
  if (r && !r->is_zero() && *r->min_exponent(Var::G) < 0) return std::nullopt;
  return r;
}

inline LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_div_exact(p, q);
  if (!r) throw NotDivisible("polynomial division leaves a nonzero remainder");
  return *std::move(r);
}

/// Canonical representative of p up to units +-s^a t^b: minimum s and t
/// exponents are zero and the smallest monomial has a positive coefficient.
inline LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Monomial shift{0, -*p.min_exponent(Var::s), -*p.min_exponent(Var::t)};
  LaurentPoly r = p.scaled(1, shift);
  if (r.terms().front().coeff < 0) r = -r;
  return r;
}

inline bool eq_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  return normalize_unit(p) == normalize_unit(q);
}

// --- text form -------------------------------------------------------------

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& tm : p.terms()) {
    const bool negative = tm.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    for (Var v : {Var::G, Var::s, Var::t}) {
      int e = tm.mono.exponent(v);
      if (e == 0) continue;
      std::string f(1, var_name(v));
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    Integer mag = abs(tm.coeff);
    std::string body;
    if (factors.empty() || mag != 1) body = mag.str();
    for (const auto& f : factors) {
      if (!body.empty()) body += '*';
      body += f;
    }
    out += body;
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term tm = parse_term();
      if (sign < 0) tm.coeff = -tm.coeff;
      terms.push_back(std::move(tm));
      skip_space();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Term tm{Monomial{}, Integer(1)};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      tm.coeff = Integer(digits());
      any = true;
      skip_space();
    }
    while (!at_end()) {
      std::size_t star = pos_;
      bool had_star = false;
      if (peek() == '*') {
        if (!any) fail("'*' without a preceding factor");
        ++pos_;
        skip_space();
        had_star = true;
      }
      char c = peek();
      if (c != 'G' && c != 's' && c != 't') {
        if (had_star) {
          pos_ = star + 1;
          fail("expected a variable after '*'");
        }
        break;
      }
      ++pos_;
      skip_space();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_space();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
          sign = next() == '-' ? -1 : 1;
          skip_space();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        e = sign * std::stoi(digits());
        skip_space();
      }
      Var v = c == 'G' ? Var::G : (c == 's' ? Var::s : Var::t);
      tm.mono.exponent(v) += e;
      any = true;
    }
    if (!any) fail("expected a term");
    return tm;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char next() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `[int][*][G^a][*][s^b][*][t^c]` terms joined by '+'/'-'.
inline LaurentPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// Frequently used constants.
inline LaurentPoly var_G() { return LaurentPoly::variable(Var::G); }
inline LaurentPoly var_s(int power = 1) { return LaurentPoly::variable(Var::s, power); }
inline LaurentPoly var_t(int power = 1) { return LaurentPoly::variable(Var::t, power); }
/// 1 - st, the value G stands for.
inline LaurentPoly one_minus_st() { return LaurentPoly(1) - LaurentPoly::monomial({0, 1, 1}); }

}  // namespace vknot
