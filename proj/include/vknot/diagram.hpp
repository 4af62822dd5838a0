#pragma once

// Oriented virtual knot diagrams encoded by their classical crossings only.
// Virtual crossings are never represented; two planar drawings of the same
// crossing list differ by detour moves.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

using EdgeId = std::string;

enum class Side { Left, Right };

/// A classical crossing. The strand entering on l_in leaves on r_out and the
/// strand entering on r_in leaves on l_out.
struct Crossing {
  int sign = 1;
  EdgeId l_in;
  EdgeId r_in;
  EdgeId r_out;
  EdgeId l_out;

  friend auto operator<=>(const Crossing&, const Crossing&) = default;

  const EdgeId& input(Side side) const { return side == Side::Left ? l_in : r_in; }
  /// Continuation of the strand entering on `side`.
  const EdgeId& continuation(Side side) const { return side == Side::Left ? r_out : l_out; }
};

/// Where an edge ends (as an input) and where it starts (as an output).
struct EdgeEnds {
  std::size_t head_crossing = 0;  // crossing the edge runs into
  Side head_side = Side::Left;
  std::size_t tail_crossing = 0;  // crossing the edge leaves
};

inline bool is_edge_token(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Checks the knot invariants of a crossing list; nullopt when valid.
inline std::optional<ValidationError> check_crossings(const std::vector<Crossing>& crossings) {
  std::map<EdgeId, int> as_input;
  std::map<EdgeId, int> as_output;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    const std::string where = "crossing " + std::to_string(i + 1);
    if (c.sign != 1 && c.sign != -1)
      return ValidationError(ValidationKind::DegenerateCrossing, where + " has sign other than +-1");
    for (const auto* e : {&c.l_in, &c.r_in, &c.r_out, &c.l_out}) {
      if (!is_edge_token(*e))
        return ValidationError(ValidationKind::DegenerateCrossing, where + " has bad edge name '" + *e + "'");
    }
    if (c.l_in == c.r_in)
      return ValidationError(ValidationKind::DegenerateCrossing, where + " uses '" + c.l_in + "' for both inputs");
    if (c.r_out == c.l_out)
      return ValidationError(ValidationKind::DegenerateCrossing, where + " uses '" + c.r_out + "' for both outputs");
    if (++as_input[c.l_in] > 1)
      return ValidationError(ValidationKind::EdgeUsedTwiceAsInput, "'" + c.l_in + "' at " + where);
    if (++as_input[c.r_in] > 1)
      return ValidationError(ValidationKind::EdgeUsedTwiceAsInput, "'" + c.r_in + "' at " + where);
    if (++as_output[c.r_out] > 1)
      return ValidationError(ValidationKind::DuplicateEdge, "'" + c.r_out + "' leaves two crossings (" + where + ")");
    if (++as_output[c.l_out] > 1)
      return ValidationError(ValidationKind::DuplicateEdge, "'" + c.l_out + "' leaves two crossings (" + where + ")");
  }
  for (const auto& [e, n] : as_input) {
    if (!as_output.count(e))
      return ValidationError(ValidationKind::EdgeUnused, "'" + e + "' enters a crossing but never leaves one");
  }
  for (const auto& [e, n] : as_output) {
    if (!as_input.count(e))
      return ValidationError(ValidationKind::EdgeUnused, "'" + e + "' leaves a crossing but never enters one");
  }
  if (crossings.empty()) return std::nullopt;

  // Follow continuations from any edge; a knot visits all 2m edges.
  std::map<EdgeId, EdgeId> successor;
  for (const auto& c : crossings) {
    successor[c.l_in] = c.r_out;
    successor[c.r_in] = c.l_out;
  }
  const EdgeId start = successor.begin()->first;
  std::size_t length = 0;
  EdgeId e = start;
  do {
    e = successor.at(e);
    ++length;
  } while (e != start && length <= successor.size());
  if (length != successor.size())
    return ValidationError(ValidationKind::NotSingleComponent,
                           "walk from '" + start + "' closes after " + std::to_string(length) + " of " +
                               std::to_string(successor.size()) + " edges");
  return std::nullopt;
}

/// Throws ValidationError on the first violated invariant.
inline void validate(const std::vector<Crossing>& crossings) {
  if (auto err = check_crossings(crossings)) throw *err;
}

class Diagram {
 public:
  /// The 0-crossing unknot.
  Diagram() = default;

  explicit Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    validate(crossings_);
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& c = crossings_[i];
      ends_[c.l_in].head_crossing = i;
      ends_[c.l_in].head_side = Side::Left;
      ends_[c.r_in].head_crossing = i;
      ends_[c.r_in].head_side = Side::Right;
      ends_[c.r_out].tail_crossing = i;
      ends_[c.l_out].tail_crossing = i;
    }
    if (!ends_.empty()) {
      const EdgeId start = ends_.begin()->first;
      EdgeId e = start;
      do {
        order_.push_back(e);
        e = successor(e);
      } while (e != start);
    }
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  bool empty() const { return crossings_.empty(); }

  bool has_edge(const EdgeId& e) const { return ends_.count(e) > 0; }
  const EdgeEnds& ends(const EdgeId& e) const {
    auto it = ends_.find(e);
    if (it == ends_.end()) throw UnknownEdge("no edge named '" + e + "'");
    return it->second;
  }

  /// Edge following e along the orientation.
  const EdgeId& successor(const EdgeId& e) const {
    const auto& en = ends(e);
    return crossings_[en.head_crossing].continuation(en.head_side);
  }

  /// Edges in orientation order, starting at the lexicographically smallest name.
  const std::vector<EdgeId>& traversal_order() const { return order_; }

  /// Sorted edge names.
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(ends_.size());
    for (const auto& [e, _] : ends_) out.push_back(e);
    return out;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::map<EdgeId, EdgeEnds> ends_;
  std::vector<EdgeId> order_;
};

inline int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

/// Switches every crossing; the flat diagram is unchanged.
inline Diagram mirror(const Diagram& d) {
  auto cs = d.crossings();
  for (auto& c : cs) c.sign = -c.sign;
  return Diagram(std::move(cs));
}

/// Reverses the orientation. Reversing both strands keeps the crossing sign.
inline Diagram reverse(const Diagram& d) {
  std::vector<Crossing> cs;
  cs.reserve(d.crossing_count());
  for (const auto& c : d.crossings()) cs.push_back({c.sign, c.r_out, c.l_out, c.l_in, c.r_in});
  return Diagram(std::move(cs));
}

/// Random knot with m crossings, a deterministic function of (m, seed).
/// Edges e1..e{2m} form the cycle; passages through crossings are paired at
/// random, so every result is a valid virtual knot.
inline Diagram random_knot(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_knot needs at least one crossing");
  std::mt19937_64 rng(seed);
  const int n = 2 * m;
  auto name = [n](int i) { return "e" + std::to_string(((i % n) + n) % n + 1); };
  std::vector<int> passages(n);
  for (int i = 0; i < n; ++i) passages[i] = i;
  std::shuffle(passages.begin(), passages.end(), rng);
  std::vector<Crossing> cs;
  cs.reserve(m);
  for (int k = 0; k < m; ++k) {
    int p = passages[2 * k];
    int q = passages[2 * k + 1];
    if (rng() & 1) std::swap(p, q);
    const int sign = (rng() & 1) ? 1 : -1;
    // Passage p runs from edge p into edge p+1.
    cs.push_back({sign, name(p), name(q), name(p + 1), name(q + 1)});
  }
  std::sort(cs.begin(), cs.end(), [](const Crossing& a, const Crossing& b) {
    auto key = [](const Crossing& c) { return std::stoi(c.l_in.substr(1)); };
    return key(a) < key(b);
  });
  return Diagram(std::move(cs));
}

/// Relabels edges in traversal order from `start` and sorts crossings; used to
/// compare diagrams up to renaming.
inline std::vector<std::array<int, 5>> relabeled_form(const Diagram& d, const EdgeId& start) {
  std::map<EdgeId, int> index;
  EdgeId e = start;
  for (std::size_t i = 0; i < d.edge_count(); ++i) {
    index[e] = static_cast<int>(i);
    e = d.successor(e);
  }
  std::vector<std::array<int, 5>> form;
  for (const auto& c : d.crossings())
    form.push_back({c.sign, index.at(c.l_in), index.at(c.r_in), index.at(c.r_out), index.at(c.l_out)});
  std::sort(form.begin(), form.end());
  return form;
}

/// True when the diagrams agree after renaming edges.
inline bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count()) return false;
  if (a.empty()) return true;
  const auto target = relabeled_form(b, b.traversal_order().front());
  for (const auto& start : a.traversal_order()) {
    if (relabeled_form(a, start) == target) return true;
  }
  return false;
}

// --- knot file format -------------------------------------------------------

/// One crossing per line: `<+|-> <l_in> <r_in> <r_out> <l_out>`; `#` comments.
inline Diagram parse_knot(std::string_view text) {
  std::vector<Crossing> cs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> fields;
    for (std::string f; in >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != 5)
      throw ParseError(line_no, "expected '<sign> <l_in> <r_in> <r_out> <l_out>', got " +
                                    std::to_string(fields.size()) + " fields");
    if (fields[0] != "+" && fields[0] != "-") throw ParseError(line_no, "sign must be '+' or '-'");
    for (std::size_t i = 1; i < 5; ++i) {
      if (!is_edge_token(fields[i])) throw ParseError(line_no, "bad edge name '" + fields[i] + "'");
    }
    cs.push_back({fields[0] == "+" ? 1 : -1, fields[1], fields[2], fields[3], fields[4]});
  }
  return Diagram(std::move(cs));
}

inline std::string to_knot_text(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    out += c.sign > 0 ? '+' : '-';
    for (const auto* e : {&c.l_in, &c.r_in, &c.r_out, &c.l_out}) out += ' ' + *e;
    out += '\n';
  }
  return out;
}

}  // namespace vknot
