#pragma once

// Reidemeister I and II rewrites on abstract diagrams. Virtual moves are
// vacuous here because virtual crossings are not encoded.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"

namespace vknot {

enum class Chirality { A, B };
enum class R2Form { Parallel, Antiparallel };

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1_INSERT";
    case MoveKind::R1Remove: return "R1_REMOVE";
    case MoveKind::R2Insert: return "R2_INSERT";
    case MoveKind::R2Remove: return "R2_REMOVE";
  }
  return "?";
}

struct MoveRecord {
  MoveKind kind = MoveKind::R1Insert;
  std::vector<EdgeId> edges;           // target edges of an insert
  std::vector<std::size_t> crossings;  // removed crossing indices
  int sign = 1;
  std::string variant;                 // "A"/"B" or "parallel"/"antiparallel"
  std::vector<EdgeId> fresh;           // names introduced by an insert

  std::string describe() const {
    std::string s = to_string(kind);
    for (const auto& e : edges) s += " " + e;
    for (auto c : crossings) s += " c" + std::to_string(c + 1);
    if (kind == MoveKind::R1Insert || kind == MoveKind::R2Insert) s += sign > 0 ? " +" : " -";
    if (!variant.empty()) s += " " + variant;
    return s;
  }
};

namespace detail {

/// Allocates edge names x1, x2, ... not already used in the diagram.
class FreshNames {
 public:
  explicit FreshNames(const Diagram& d) {
    for (const auto& e : d.edges()) used_.insert(e);
  }
  EdgeId next() {
    for (;;) {
      EdgeId name = "x" + std::to_string(++counter_);
      if (used_.insert(name).second) return name;
    }
  }

 private:
  std::set<EdgeId> used_;
  int counter_ = 0;
};

/// Splits edge e into e -> mid -> last: the crossing e runs into now receives
/// `last` instead. Returns {mid, last}.
inline std::pair<EdgeId, EdgeId> split_edge(std::vector<Crossing>& cs, const Diagram& d, const EdgeId& e,
                                            FreshNames& names) {
  EdgeId mid = names.next();
  EdgeId last = names.next();
  const auto& en = d.ends(e);
  Crossing& head = cs[en.head_crossing];
  (en.head_side == Side::Left ? head.l_in : head.r_in) = last;
  return {mid, last};
}

/// Removes the given crossings and identifies each group of edge names.
inline Diagram remove_and_merge(const Diagram& d, const std::set<std::size_t>& removed,
                                const std::vector<std::pair<EdgeId, EdgeId>>& same) {
  std::map<EdgeId, EdgeId> parent;
  auto find = [&](EdgeId e) {
    while (parent.count(e) && parent[e] != e) e = parent[e];
    return e;
  };
  for (const auto& [keep, drop] : same) {
    EdgeId a = find(keep);
    EdgeId b = find(drop);
    if (a != b) parent[b] = a;
  }
  std::vector<Crossing> cs;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (removed.count(i)) continue;
    Crossing c = d.crossings()[i];
    for (auto* e : {&c.l_in, &c.r_in, &c.r_out, &c.l_out}) *e = find(*e);
    cs.push_back(std::move(c));
  }
  return Diagram(std::move(cs));
}

}  // namespace detail

/// Adds a kink on edge e. The original name stays on the first segment.
/// On the 0-crossing unknot `e` names the new loop.
inline Diagram r1_insert(const Diagram& d, const EdgeId& e, int sign, Chirality chirality,
                         MoveRecord* record = nullptr) {
  detail::FreshNames names(d);
  std::vector<Crossing> cs = d.crossings();
  EdgeId e1 = e;
  EdgeId e2;
  EdgeId e3;
  if (d.empty()) {
    if (!is_edge_token(e)) throw UnknownEdge("bad edge name '" + e + "'");
    e2 = names.next();
    e3 = e1;
  } else {
    if (!d.has_edge(e)) throw UnknownEdge("no edge named '" + e + "'");
    std::tie(e2, e3) = detail::split_edge(cs, d, e, names);
  }
  if (chirality == Chirality::A) {
    cs.push_back({sign, e1, e2, e2, e3});
  } else {
    cs.push_back({sign, e2, e1, e3, e2});
  }
  if (record) {
    *record = {MoveKind::R1Insert, {e}, {}, sign, chirality == Chirality::A ? "A" : "B", {e2}};
    if (e3 != e1) record->fresh.push_back(e3);
  }
  return Diagram(std::move(cs));
}

inline bool is_kink(const Crossing& c) { return c.r_in == c.r_out || c.l_in == c.l_out; }

inline Diagram r1_remove(const Diagram& d, std::size_t crossing, MoveRecord* record = nullptr) {
  if (crossing >= d.crossing_count()) throw NotAKink("crossing index out of range");
  const Crossing& c = d.crossings()[crossing];
  EdgeId outer_in;
  EdgeId outer_out;
  if (c.r_in == c.r_out) {
    outer_in = c.l_in;
    outer_out = c.l_out;
  } else if (c.l_in == c.l_out) {
    outer_in = c.r_in;
    outer_out = c.r_out;
  } else {
    throw NotAKink("crossing " + std::to_string(crossing + 1) + " is not a kink");
  }
  if (record) *record = {MoveKind::R1Remove, {}, {crossing}, c.sign, {}, {}};
  return detail::remove_and_merge(d, {crossing}, {{outer_in, outer_out}});
}

/// Adds a cancelling pair of crossings between edges e and f.
inline Diagram r2_insert(const Diagram& d, const EdgeId& e, const EdgeId& f, int sign, R2Form form,
                         MoveRecord* record = nullptr) {
  if (!d.has_edge(e)) throw UnknownEdge("no edge named '" + e + "'");
  if (!d.has_edge(f)) throw UnknownEdge("no edge named '" + f + "'");
  if (e == f) throw SameEdge("R2 needs two distinct edges");
  detail::FreshNames names(d);
  std::vector<Crossing> cs = d.crossings();
  auto [e2, e3] = detail::split_edge(cs, d, e, names);
  auto [f2, f3] = detail::split_edge(cs, d, f, names);
  const EdgeId& e1 = e;
  const EdgeId& f1 = f;
  if (form == R2Form::Parallel) {
    cs.push_back({sign, e1, f1, e2, f2});
    cs.push_back({-sign, f2, e2, f3, e3});
  } else {
    cs.push_back({sign, e1, f2, e2, f3});
    cs.push_back({-sign, f1, e2, f2, e3});
  }
  if (record)
    *record = {MoveKind::R2Insert, {e, f}, {}, sign, form == R2Form::Parallel ? "parallel" : "antiparallel",
               {e2, e3, f2, f3}};
  return Diagram(std::move(cs));
}

/// Form of an R2 pair (first, second) if they match an insertion pattern.
inline std::optional<R2Form> r2_pattern(const Crossing& c1, const Crossing& c2) {
  if (c1.sign != -c2.sign) return std::nullopt;
  if (c1.r_out == c2.r_in && c1.l_out == c2.l_in) return R2Form::Parallel;
  if (c1.r_out == c2.r_in && c2.r_out == c1.r_in) return R2Form::Antiparallel;
  return std::nullopt;
}

inline Diagram r2_remove(const Diagram& d, std::size_t first, std::size_t second, MoveRecord* record = nullptr) {
  if (first >= d.crossing_count() || second >= d.crossing_count() || first == second)
    throw NotAnR2Pair("crossing indices do not name two crossings");
  const Crossing& c1 = d.crossings()[first];
  const Crossing& c2 = d.crossings()[second];
  auto form = r2_pattern(c1, c2);
  if (!form) throw NotAnR2Pair("crossings do not form a Reidemeister II pair");
  std::vector<std::pair<EdgeId, EdgeId>> same;
  if (*form == R2Form::Parallel) {
    same = {{c1.l_in, c2.l_out}, {c1.r_in, c2.r_out}};
  } else {
    same = {{c1.l_in, c2.l_out}, {c2.l_in, c1.l_out}};
  }
  if (record)
    *record = {MoveKind::R2Remove, {}, {first, second}, c1.sign,
               *form == R2Form::Parallel ? "parallel" : "antiparallel", {}};
  return detail::remove_and_merge(d, {first, second}, same);
}

/// Applies one random applicable move. Inserts are favoured; removes are only
/// drawn when a kink or R2 pair exists.
template <class Rng>
Diagram random_move(const Diagram& d, Rng& rng, MoveRecord& record) {
  std::vector<std::size_t> kinks;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    if (is_kink(d.crossings()[i])) kinks.push_back(i);
    for (std::size_t j = 0; j < d.crossing_count(); ++j) {
      if (i != j && r2_pattern(d.crossings()[i], d.crossings()[j])) pairs.emplace_back(i, j);
    }
  }
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto coin = [&rng]() { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };

  const bool can_remove = !kinks.empty() || !pairs.empty();
  if (can_remove && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    const bool use_r1 = !kinks.empty() && (pairs.empty() || coin());
    if (use_r1) return r1_remove(d, kinks[pick(kinks.size())], &record);
    auto [a, b] = pairs[pick(pairs.size())];
    return r2_remove(d, a, b, &record);
  }
  const int sign = coin() ? 1 : -1;
  const auto edges = d.edges();
  if (edges.size() >= 2 && coin()) {
    const std::size_t i = pick(edges.size());
    std::size_t j = pick(edges.size() - 1);
    if (j >= i) ++j;
    return r2_insert(d, edges[i], edges[j], sign, coin() ? R2Form::Parallel : R2Form::Antiparallel, &record);
  }
  const EdgeId target = edges.empty() ? EdgeId("x0") : edges[pick(edges.size())];
  return r1_insert(d, target, sign, coin() ? Chirality::A : Chirality::B, &record);
}

struct MoveSequence {
  Diagram result;
  std::vector<MoveRecord> moves;
};

/// n random moves, deterministic in (d, n, seed).
inline MoveSequence random_move_sequence(const Diagram& d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MoveSequence seq{d, {}};
  for (int i = 0; i < n; ++i) {
    MoveRecord rec;
    seq.result = random_move(seq.result, rng, rec);
    seq.moves.push_back(std::move(rec));
  }
  return seq;
}

}  // namespace vknot
