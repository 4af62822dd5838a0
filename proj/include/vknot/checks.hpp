#pragma once

// Machine checks of the structural identities relating the Affine Index
// Polynomial to the biquandle determinant. Each returns human-readable
// violation messages; an empty list means the diagram passed.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vknot/affine.hpp"
#include "vknot/biquandle.hpp"
#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// The polynomial invariants of one diagram, computed from a single determinant.
struct Invariants {
  LaurentPoly affine;
  LaurentPoly asawollek;
  LaurentPoly sawollek_raw;
  LaurentPoly sawollek;  // unit-normalized
  GExpansion expansion;
  LaurentPoly delta;
  LaurentPoly delta_at_unity;
  LaurentPoly gamma_at_unity;
};

inline Invariants compute_invariants(const Diagram& d) {
  Invariants inv;
  inv.affine = affine_index_polynomial(d);
  inv.asawollek = asawollek(d);
  inv.sawollek_raw = substitute(inv.asawollek, Var::G, one_minus_st());
  inv.sawollek = normalize_unit(inv.sawollek_raw);
  inv.expansion = g_expansion(inv.asawollek, writhe(d));
  inv.delta = delta(inv.expansion);
  inv.delta_at_unity = at_st_one(inv.delta);
  inv.gamma_at_unity = gamma_at_unity(inv.expansion);
  return inv;
}

/// Divisibility by 1 - st, S(1, t) = 0, c_0 = (st)^wr - 1, Delta(1/t, t) = P
/// up to units, and circuit weights equal to Cheng weights.
inline std::vector<std::string> structural_violations(const Diagram& d, const Invariants& inv) {
  std::vector<std::string> out;
  if (inv.expansion[0] != st_power_minus_one(writhe(d))) out.push_back("c_0 != (st)^wr - 1");
  if (!try_div_exact(inv.sawollek_raw, one_minus_st())) out.push_back("1 - st does not divide Sawollek");
  if (!substitute(inv.sawollek_raw, Var::s, LaurentPoly(1)).is_zero()) out.push_back("Sawollek(1, t) != 0");
  if (!eq_up_to_unit(inv.delta_at_unity, inv.affine))
    out.push_back("Delta(1/t, t) = " + to_string(inv.delta_at_unity) + " but P = " + to_string(inv.affine));
  const auto weights = crossing_weights(d);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const long cw = circuit_weight(d, i);
    if (cw != weights[i].w)
      out.push_back("crossing " + std::to_string(i + 1) + ": circuit weight " + std::to_string(cw) +
                    " != W " + std::to_string(weights[i].w));
  }
  return out;
}

inline std::vector<std::string> structural_violations(const Diagram& d) {
  try {
    return structural_violations(d, compute_invariants(d));
  } catch (const Error& e) {
    return {std::string("invariant computation failed: ") + e.what()};
  }
}

/// Random knot whose crossing count is drawn from [1, max_crossings].
inline Diagram random_knot_upto(int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int m = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  return random_knot(m, seed);
}

}  // namespace vknot
