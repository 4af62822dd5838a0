#pragma once

// Test-only reference computations, deliberately independent of the library
// algorithms they check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vknot/biquandle.hpp"
#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot::oracle {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  const Rational base = e < 0 ? Rational(1) / x : x;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

/// Evaluates p at a point with s, t nonzero.
inline Rational eval(const LaurentPoly& p, const Rational& g, const Rational& s, const Rational& t) {
  Rational sum = 0;
  for (const auto& tm : p.terms())
    sum += Rational(tm.coeff) * rpow(g, tm.mono.g) * rpow(s, tm.mono.s) * rpow(t, tm.mono.t);
  return sum;
}

/// Sum over all permutations with explicit inversion-count signs.
inline LaurentPoly det_leibniz(const PolyMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly prod(1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m(i, perm[i]);
    total = inversions % 2 ? total - prod : total + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Cheng labels by repeated relaxation over the crossing rules, without
/// walking the knot. nullopt if the constraints are inconsistent.
inline std::optional<std::map<EdgeId, long>> cheng_by_relaxation(const std::vector<Crossing>& cs, const EdgeId& base,
                                                                 long base_label) {
  std::map<EdgeId, long> lab{{base, base_label}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : cs) {
      // r_out = l_in - 1, l_out = r_in + 1, in both directions.
      const std::pair<const EdgeId*, const EdgeId*> links[] = {{&c.l_in, &c.r_out}, {&c.r_in, &c.l_out}};
      const long deltas[] = {-1, +1};
      for (int k = 0; k < 2; ++k) {
        const EdgeId& from = *links[k].first;
        const EdgeId& to = *links[k].second;
        const bool hf = lab.count(from) > 0;
        const bool ht = lab.count(to) > 0;
        if (hf && !ht) {
          lab[to] = lab[from] + deltas[k];
          changed = true;
        } else if (!hf && ht) {
          lab[from] = lab[to] - deltas[k];
          changed = true;
        } else if (hf && ht && lab[to] != lab[from] + deltas[k]) {
          return std::nullopt;
        }
      }
    }
  }
  return lab;
}

/// Small random Laurent polynomial in (G, s, t) with G-degree in [0, 2].
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int spread = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-spread, spread);
  std::uniform_int_distribution<int> gexp(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({Monomial{gexp(rng), exp(rng), exp(rng)}, Integer(coeff(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

/// Random unit +-s^a t^b.
inline LaurentPoly random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-3, 3);
  const int sign = (rng() & 1) ? 1 : -1;
  return LaurentPoly::term(Integer(sign), Monomial{0, exp(rng), exp(rng)});
}

}  // namespace vknot::oracle
