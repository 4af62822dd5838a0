#include <gtest/gtest.h>

#include <set>

#include "vknot/diagram.hpp"

namespace vknot {
namespace {

const char* kVirtualTrefoil = "+ a c b d\n+ b d c a\n";
const char* kClassicalTrefoil = "+ e6 e3 e1 e4\n+ e4 e1 e5 e2\n+ e2 e5 e3 e6\n";

ValidationKind kind_of(const std::vector<Crossing>& cs) {
  auto err = check_crossings(cs);
  EXPECT_TRUE(err.has_value());
  return err ? err->kind() : ValidationKind::DegenerateCrossing;
}

TEST(DiagramParse, VirtualTrefoil) {
  const Diagram d = parse_knot(kVirtualTrefoil);
  ASSERT_EQ(d.crossing_count(), 2u);
  EXPECT_EQ(d.edge_count(), 4u);
  EXPECT_EQ(d.crossings()[0], (Crossing{1, "a", "c", "b", "d"}));
  EXPECT_EQ(d.crossings()[1], (Crossing{1, "b", "d", "c", "a"}));
  EXPECT_EQ(d.traversal_order(), (std::vector<EdgeId>{"a", "b", "c", "d"}));
}

TEST(DiagramParse, ClassicalTraversal) {
  const Diagram d = parse_knot(kClassicalTrefoil);
  EXPECT_EQ(d.traversal_order(), (std::vector<EdgeId>{"e1", "e2", "e3", "e4", "e5", "e6"}));
  EXPECT_EQ(d.successor("e6"), "e1");
  EXPECT_EQ(d.ends("e3").head_crossing, 0u);
  EXPECT_EQ(d.ends("e3").head_side, Side::Right);
  EXPECT_EQ(d.ends("e3").tail_crossing, 2u);
}

TEST(DiagramParse, CommentsBlankLinesAndUnknot) {
  const Diagram d = parse_knot("# trefoil\n\n  + a c b d   # first\n+ b d c a");
  EXPECT_EQ(d.crossing_count(), 2u);
  const Diagram u = parse_knot("# nothing here\n\n");
  EXPECT_TRUE(u.empty());
  EXPECT_EQ(u, Diagram{});
  EXPECT_EQ(u.edge_count(), 0u);
}

TEST(DiagramParse, MalformedLinesReportLineNumber) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  for (const Case& c : {Case{"+ a c b", 1}, Case{"+ a c b d\n* b d c a", 2}, Case{"+ a c b d e", 1},
                        Case{"\n\n+ a c b d-x", 3}, Case{"1 a c b d", 1}}) {
    try {
      parse_knot(c.text);
      ADD_FAILURE() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.line) << c.text;
    }
  }
}

TEST(DiagramValidation, ErrorKinds) {
  EXPECT_EQ(kind_of({{1, "a", "a", "b", "c"}}), ValidationKind::DegenerateCrossing);
  EXPECT_EQ(kind_of({{1, "a", "b", "c", "c"}}), ValidationKind::DegenerateCrossing);
  EXPECT_EQ(kind_of({{0, "a", "b", "b", "a"}}), ValidationKind::DegenerateCrossing);
  EXPECT_EQ(kind_of({{1, "a", "c", "b", "d"}, {1, "a", "d", "c", "e"}}), ValidationKind::EdgeUsedTwiceAsInput);
  EXPECT_EQ(kind_of({{1, "a", "c", "b", "d"}, {1, "b", "e", "d", "a"}}), ValidationKind::DuplicateEdge);
  EXPECT_EQ(kind_of({{1, "a", "c", "b", "d"}, {1, "b", "d", "c", "z"}}), ValidationKind::EdgeUnused);
  // Two separate kinks form two components.
  EXPECT_EQ(kind_of({{1, "a", "b", "b", "a"}, {1, "c", "d", "d", "c"}}), ValidationKind::NotSingleComponent);
  EXPECT_THROW(parse_knot("+ a b b a\n- c d d c\n"), ValidationError);
}

TEST(DiagramValidation, ValidExamplesPass) {
  EXPECT_FALSE(check_crossings(parse_knot(kVirtualTrefoil).crossings()));
  EXPECT_FALSE(check_crossings({}));
  EXPECT_THROW(Diagram(std::vector<Crossing>{}).ends("a"), UnknownEdge);
}

TEST(DiagramOps, Writhe) {
  EXPECT_EQ(writhe(parse_knot(kVirtualTrefoil)), 2);
  EXPECT_EQ(writhe(parse_knot(kClassicalTrefoil)), 3);
  EXPECT_EQ(writhe(parse_knot("- e1 e2 e2 e1")), -1);
  EXPECT_EQ(writhe(Diagram{}), 0);
}

TEST(DiagramOps, MirrorAndReverse) {
  const Diagram d = parse_knot(kVirtualTrefoil);
  const Diagram m = mirror(d);
  EXPECT_EQ(m.crossings()[0], (Crossing{-1, "a", "c", "b", "d"}));
  const Diagram r = reverse(d);
  EXPECT_EQ(r.crossings()[0], (Crossing{1, "b", "d", "a", "c"}));
  EXPECT_EQ(writhe(r), writhe(d));
  EXPECT_EQ(r.traversal_order(), (std::vector<EdgeId>{"a", "d", "c", "b"}));
}

TEST(DiagramOps, TextRoundTrip) {
  const Diagram d = parse_knot(kClassicalTrefoil);
  EXPECT_EQ(parse_knot(to_knot_text(d)), d);
  EXPECT_EQ(to_knot_text(Diagram{}), "");
}

TEST(DiagramOps, IsomorphismUpToRenaming) {
  const Diagram d = parse_knot(kVirtualTrefoil);
  const Diagram renamed = parse_knot("+ q1 q3 q2 q4\n+ q2 q4 q3 q1\n");
  const Diagram rotated = parse_knot("+ b d c a\n+ c a d b\n");
  EXPECT_TRUE(isomorphic(d, renamed));
  EXPECT_TRUE(isomorphic(d, rotated));
  EXPECT_FALSE(isomorphic(d, mirror(d)));
  EXPECT_FALSE(isomorphic(d, parse_knot(kClassicalTrefoil)));
  EXPECT_TRUE(isomorphic(Diagram{}, Diagram{}));
}

TEST(RandomKnot, SingleCrossingIsAKink) {
  const std::set<std::vector<Crossing>> kinks = {
      {{1, "e1", "e2", "e2", "e1"}}, {{-1, "e1", "e2", "e2", "e1"}},
      {{1, "e2", "e1", "e1", "e2"}}, {{-1, "e2", "e1", "e1", "e2"}}};
  std::set<std::vector<Crossing>> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto cs = random_knot(1, seed).crossings();
    EXPECT_TRUE(kinks.count(cs));
    seen.insert(cs);
  }
  EXPECT_EQ(seen, kinks);
}

TEST(RandomKnot, DeterministicAndValid) {
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int m = 1 + static_cast<int>(seed % 8);
    const Diagram d = random_knot(m, seed);
    ASSERT_EQ(d, random_knot(m, seed));
    ASSERT_EQ(d.crossing_count(), static_cast<std::size_t>(m));
    ASSERT_EQ(d.edge_count(), static_cast<std::size_t>(2 * m));
    ASSERT_FALSE(check_crossings(d.crossings()));
    ASSERT_EQ(mirror(mirror(d)), d);
    ASSERT_EQ(reverse(reverse(d)), d);
    ASSERT_EQ(mirror(reverse(d)), reverse(mirror(d)));
    ASSERT_EQ(parse_knot(to_knot_text(d)), d);
    if (m == 8) distinct.insert(to_knot_text(d));
  }
  EXPECT_EQ(distinct.size(), 125u);
  EXPECT_THROW(random_knot(0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace vknot
