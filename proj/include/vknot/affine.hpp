#pragma once

// Cheng colorings, crossing weights and the Affine Index Polynomial.

#include <cstddef>
#include <map>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// Integer edge labels with r_out = l_in - 1 and l_out = r_in + 1 at every crossing.
struct ChengColoring {
  std::map<EdgeId, long> labels;
  EdgeId base_edge;
  long base_label = 0;

  long operator[](const EdgeId& e) const { return labels.at(e); }
};

struct CrossingWeight {
  int sign = 1;
  long w_plus = 0;
  long w_minus = 0;
  long w = 0;  // w_plus or w_minus according to sign
};

/// Propagates the crossing rule around the knot from base_edge.
inline ChengColoring cheng_coloring(const Diagram& d, const EdgeId& base_edge, long base_label = 0) {
  if (d.empty()) throw EmptyDiagram("Cheng coloring needs at least one crossing");
  ChengColoring col{{}, base_edge, base_label};
  EdgeId e = base_edge;
  long label = base_label;
  for (std::size_t i = 0; i < d.edge_count(); ++i) {
    col.labels[e] = label;
    // Leaving through the right output lowers the label, through the left raises it.
    label += d.ends(e).head_side == Side::Left ? -1 : 1;
    e = d.successor(e);
  }
  if (e != base_edge || label != base_label)
    throw InconsistentColoring("coloring does not close around the knot at '" + base_edge + "'");
  return col;
}

inline ChengColoring cheng_coloring(const Diagram& d) {
  if (d.empty()) throw EmptyDiagram("Cheng coloring needs at least one crossing");
  return cheng_coloring(d, d.traversal_order().front(), 0);
}

/// W+ = l_in - (r_in + 1) and W- = -W+, from any coloring.
inline std::vector<CrossingWeight> crossing_weights(const Diagram& d) {
  std::vector<CrossingWeight> out;
  if (d.empty()) return out;
  const ChengColoring col = cheng_coloring(d);
  out.reserve(d.crossing_count());
  for (const auto& c : d.crossings()) {
    CrossingWeight cw;
    cw.sign = c.sign;
    cw.w_plus = col[c.l_in] - (col[c.r_in] + 1);
    cw.w_minus = col[c.r_in] - (col[c.l_in] - 1);
    cw.w = c.sign > 0 ? cw.w_plus : cw.w_minus;
    out.push_back(cw);
  }
  return out;
}

/// P_K(t) = sum over crossings of sign * (t^W - 1).
inline LaurentPoly affine_index_polynomial(const Diagram& d) {
  std::vector<Term> terms;
  for (const auto& cw : crossing_weights(d)) {
    terms.push_back({Monomial{0, 0, static_cast<int>(cw.w)}, Integer(cw.sign)});
    terms.push_back({Monomial{}, Integer(-cw.sign)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace vknot
