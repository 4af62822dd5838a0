#pragma once

// Alexander biquandle relation matrices and the polynomials read off their
// determinants: ASawollek (G kept formal), Sawollek (G = 1 - st), and the
// pieces Delta and Gamma of the expansion in powers of G.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vknot/affine.hpp"
#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  std::size_t order() const { return order_; }
  LaurentPoly& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const LaurentPoly& operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<LaurentPoly> entries_;
};

inline PolyMatrix substitute(const PolyMatrix& m, Var var, const LaurentPoly& value) {
  PolyMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = substitute(m(i, j), var, value);
  return out;
}

/// Rows and columns follow the traversal order of the edges. Row e holds the
/// relation at the crossing e runs into.
struct RelationMatrix {
  std::vector<EdgeId> edges;
  PolyMatrix entries;

  std::size_t index(const EdgeId& e) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e) return i;
    throw UnknownEdge("no edge named '" + e + "'");
  }
};

/// -s^-1 t^-1 G, which equals 1 - s^-1 t^-1 when G = 1 - st.
inline LaurentPoly g_bar() { return LaurentPoly::term(Integer(-1), {1, -1, -1}); }

inline RelationMatrix relation_matrix(const Diagram& d) {
  if (d.empty()) throw EmptyDiagram("relation matrix of a 0-crossing diagram");
  RelationMatrix rm{d.traversal_order(), PolyMatrix(d.edge_count())};
  std::map<EdgeId, std::size_t> at;
  for (std::size_t i = 0; i < rm.edges.size(); ++i) at[rm.edges[i]] = i;
  auto& m = rm.entries;
  for (const auto& c : d.crossings()) {
    const std::size_t li = at.at(c.l_in), ri = at.at(c.r_in), ro = at.at(c.r_out), lo = at.at(c.l_out);
    if (c.sign > 0) {
      // r_out = t l_in + G r_in,  l_out = s r_in
      m(li, li) += var_t();
      m(li, ro) -= 1;
      m(li, ri) += var_G();
      m(ri, ri) += var_s();
      m(ri, lo) -= 1;
    } else {
      // l_out = t^-1 r_in + Gbar l_in,  r_out = s^-1 l_in
      m(ri, ri) += var_t(-1);
      m(ri, lo) -= 1;
      m(ri, li) += g_bar();
      m(li, li) += var_s(-1);
      m(li, ro) -= 1;
    }
  }
  return rm;
}

/// Laplace expansion along rows. Exponential; kept as an independent check
/// on det() for small orders.
inline LaurentPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return LaurentPoly(1);
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to order 20");
  auto expand = [&](auto&& self, std::size_t row, std::uint32_t used) -> LaurentPoly {
    if (row == n) return LaurentPoly(1);
    LaurentPoly sum;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      if (!m(row, col).is_zero()) {
        LaurentPoly minor = self(self, row + 1, used | (1u << col));
        if (!minor.is_zero()) {
          LaurentPoly term = m(row, col) * minor;
          sum = sign > 0 ? sum + term : sum - term;
        }
      }
      sign = -sign;
    }
    return sum;
  };
  return expand(expand, 0, 0);
}

/// Exact determinant over the Laurent ring: each row is first multiplied by a
/// monomial in s, t that clears negative exponents, then fraction-free Bareiss
/// elimination runs in Z[G,s,t], and the row units are divided back out.
inline LaurentPoly det(PolyMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return LaurentPoly(1);
  Monomial cleared{};
  for (std::size_t i = 0; i < n; ++i) {
    int min_s = 0;
    int min_t = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      min_s = std::min(min_s, *m(i, j).min_exponent(Var::s));
      min_t = std::min(min_t, *m(i, j).min_exponent(Var::t));
    }
    if (min_s == 0 && min_t == 0) continue;
    const Monomial shift{0, -min_s, -min_t};
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).scaled(1, shift);
    cleared = cleared * shift;
  }

  int sign = 1;
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot in column k keeps intermediate entries short.
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      if (pivot == n || m(r, k).size() < m(pivot, k).size()) pivot = r;
    }
    if (pivot == n) return LaurentPoly{};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    const LaurentPoly& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const LaurentPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly value;
        if (lead.is_zero() || m(k, j).is_zero()) {
          if (m(i, j).is_zero()) continue;
          value = p * m(i, j);
        } else {
          value = p * m(i, j) - lead * m(k, j);
        }
        m(i, j) = div_exact(value, previous);
      }
      m(i, k) = LaurentPoly{};
    }
    previous = m(k, k);
  }
  LaurentPoly result = m(n - 1, n - 1).scaled(sign, cleared.inverse());
  return result;
}

inline LaurentPoly det(const RelationMatrix& rm) { return det(rm.entries); }

/// Det M(K) with G formal. The 0-crossing unknot is assigned 0.
inline LaurentPoly asawollek(const Diagram& d) {
  if (d.empty()) return LaurentPoly{};
  return det(relation_matrix(d));
}

/// ASawollek with G = 1 - st, before unit normalization.
inline LaurentPoly sawollek_raw(const Diagram& d) { return substitute(asawollek(d), Var::G, one_minus_st()); }

inline LaurentPoly sawollek(const Diagram& d) { return normalize_unit(sawollek_raw(d)); }

/// (st)^w - 1
inline LaurentPoly st_power_minus_one(int w) { return LaurentPoly::monomial({0, w, w}) - LaurentPoly(1); }

struct GExpansion {
  std::vector<LaurentPoly> coefficients;  // c_k multiplies G^k
  int writhe = 0;

  LaurentPoly operator[](std::size_t k) const { return k < coefficients.size() ? coefficients[k] : LaurentPoly{}; }
};

inline GExpansion g_expansion(const LaurentPoly& asawollek_poly, int wr) {
  GExpansion ex;
  ex.writhe = wr;
  const int top = asawollek_poly.is_zero() ? 0 : *asawollek_poly.max_exponent(Var::G);
  for (int k = 0; k <= top; ++k) ex.coefficients.push_back(coeff_of_power(asawollek_poly, Var::G, k));
  if (ex[0] != st_power_minus_one(wr))
    throw InternalInvariantViolation("G^0 coefficient " + to_string(ex[0]) + " differs from (st)^" +
                                     std::to_string(wr) + " - 1");
  return ex;
}

inline GExpansion g_expansion(const Diagram& d) { return g_expansion(asawollek(d), writhe(d)); }

/// Delta = c_0 / (1 - st) + c_1, so that S = G*Delta + G^2*(c_2 + c_3 G + ...).
inline LaurentPoly delta(const GExpansion& ex) {
  auto q = try_div_exact(ex[0], one_minus_st());
  if (!q) throw InternalInvariantViolation("1 - st does not divide " + to_string(ex[0]));
  return *q + ex[1];
}

inline LaurentPoly delta(const Diagram& d) { return delta(g_expansion(d)); }

/// p(t^-1, t)
inline LaurentPoly at_st_one(const LaurentPoly& p) { return substitute(p, Var::s, var_t(-1)); }

struct MellorReport {
  LaurentPoly delta_at_unity;
  LaurentPoly affine;
  bool equal_exact = false;
  bool equal_up_to_unit = false;
};

inline MellorReport mellor_check(const Diagram& d) {
  MellorReport r;
  r.delta_at_unity = at_st_one(delta(d));
  r.affine = affine_index_polynomial(d);
  r.equal_exact = r.delta_at_unity == r.affine;
  r.equal_up_to_unit = eq_up_to_unit(r.delta_at_unity, r.affine);
  return r;
}

/// normalize(c_k(t^-1, t)). For k = 2 this is Gamma at st = 1; larger k are exploratory.
inline LaurentPoly higher_coefficient_at_unity(const GExpansion& ex, int k) {
  if (k < 2) throw std::invalid_argument("higher coefficients start at k = 2");
  return normalize_unit(at_st_one(ex[static_cast<std::size_t>(k)]));
}

inline LaurentPoly higher_coefficient_at_unity(const Diagram& d, int k) {
  return higher_coefficient_at_unity(g_expansion(d), k);
}

inline LaurentPoly gamma_at_unity(const GExpansion& ex) { return higher_coefficient_at_unity(ex, 2); }
inline LaurentPoly gamma_at_unity(const Diagram& d) { return gamma_at_unity(g_expansion(d)); }

/// Exponent of t, once st = 1, of a row's diagonal symbol: t and s^-1 give +1,
/// s and t^-1 give -1. Either way it is +1 for a left input and -1 for a right one.
inline int diagonal_exponent_at_unity(const Diagram& d, const EdgeId& e) {
  const auto& en = d.ends(e);
  const int sign = d.crossings()[en.head_crossing].sign;
  if (sign > 0) return en.head_side == Side::Left ? 1 : -1;  // t : s
  return en.head_side == Side::Right ? -1 : 1;               // t^-1 : s^-1
}

/// Weight of a crossing read from the relation matrix: walk from the row that
/// holds the crossing's G entry to that entry's column, summing the st = 1
/// exponents of the diagonal symbols strictly in between.
inline long circuit_weight(const Diagram& d, std::size_t crossing) {
  if (crossing >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
  const Crossing& c = d.crossings()[crossing];
  const EdgeId& row = c.sign > 0 ? c.l_in : c.r_in;
  const EdgeId& column = c.sign > 0 ? c.r_in : c.l_in;
  long sum = 0;
  for (EdgeId e = d.successor(row); e != column; e = d.successor(e)) sum += diagonal_exponent_at_unity(d, e);
  return sum;
}

}  // namespace vknot
