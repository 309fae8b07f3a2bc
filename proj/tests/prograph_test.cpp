#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "pcp/error.hpp"
#include "pcp/prograph.hpp"
#include "pcp/tableau.hpp"

namespace pcp {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pcp::Error thrown";
  return ErrorCode::ParseError;
}

// Raw sequences: from width w there are w coproduct moves and w-1 product
// moves. Counted by dynamic programming over (moves left, width).
std::uint64_t raw_sequence_count(int n) {
  std::vector<std::uint64_t> ways(2 * n + 3, 0);
  ways[1] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int w = 1; w + 1 < static_cast<int>(ways.size()); ++w) {
      if (ways[w] == 0) continue;
      next[w + 1] += ways[w] * w;
      if (w > 1) next[w - 1] += ways[w] * (w - 1);
    }
    ways = std::move(next);
  }
  return ways[1];
}

TEST(MoveText, RoundTrip) {
  const MoveSequence moves{coproduct_at(0), coproduct_at(1), product_at(0), product_at(0)};
  EXPECT_EQ(to_string(moves), "c@0 c@1 p@0 p@0");
  EXPECT_EQ(parse_moves("c@0 c@1 p@0 p@0"), moves);
  EXPECT_TRUE(parse_moves("").empty());
}

TEST(MoveText, RejectsGarbage) {
  EXPECT_EQ(code_of([] { parse_moves("c@"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_moves("q@0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_moves("c@0p@0"); }), ErrorCode::ParseError);
}

TEST(ApplyMoves, Empty) {
  const Prograph p = apply_moves({});
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p, Prograph());
  EXPECT_EQ(p.wires().size(), 1u);
}

TEST(ApplyMoves, Errors) {
  EXPECT_EQ(code_of([] { apply_moves(parse_moves("c@1 p@0")); }), ErrorCode::SlotOutOfRange);
  EXPECT_EQ(code_of([] { apply_moves(parse_moves("p@0")); }), ErrorCode::ProductOnWidthOne);
  EXPECT_EQ(code_of([] { apply_moves(parse_moves("c@0")); }), ErrorCode::UnbalancedSequence);
  EXPECT_EQ(code_of([] { apply_moves(parse_moves("c@0 c@0 p@0")); }),
            ErrorCode::UnbalancedSequence);
}

TEST(ApplyMoves, ErrorPositionIsMoveIndex) {
  try {
    apply_moves(parse_moves("c@0 c@0 p@2 p@0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SlotOutOfRange);
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ApplyMoves, CommutingGraftsGiveOnePrograph) {
  // Splitting two independent wires in either order yields the same graph.
  const Prograph a = apply_moves(parse_moves("c@0 c@0 c@2 p@2 p@1 p@0"));
  const Prograph b = apply_moves(parse_moves("c@0 c@1 c@0 p@2 p@1 p@0"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<Prograph>{}(a), std::hash<Prograph>{}(b));
}

TEST(Traversal, LabelledExample) {
  const Prograph p = fixtures::labelled_prograph();
  const TraversalLabels labels = depth_left_traversal(p);
  for (int node = 0; node < 8; ++node) EXPECT_EQ(labels.op_label[node], node + 1);
  EXPECT_EQ(to_string(p.canonical_moves()), "c@0 c@0 p@1 c@1 p@0 c@1 p@0 p@0");
}

TEST(Traversal, WireLabelsCoverOneToThreeN) {
  for (int n = 0; n <= 4; ++n) {
    for (const Prograph& p : enumerate_prographs_oracle(n)) {
      const TraversalLabels labels = depth_left_traversal(p);
      std::vector<int> sorted = labels.wire_label;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expected(3 * n + 1);
      std::iota(expected.begin(), expected.end(), 0);
      EXPECT_EQ(sorted, expected);
      EXPECT_EQ(labels.wire_label[p.output_wire()], 0);
      EXPECT_EQ(labels.wire_label[p.input_wire()], n == 0 ? 0 : 1);
    }
  }
}

// Rebuilds p with node ids and wire order shuffled; the canonical form must
// not move.
Prograph relabel(const Prograph& p, std::mt19937& rng) {
  const int nodes = static_cast<int>(p.kinds().size());
  std::vector<int> perm(nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<OperatorKind> kinds(nodes);
  for (int v = 0; v < nodes; ++v) kinds[perm[v]] = p.kinds()[v];
  std::vector<Wire> wires(p.wires().begin(), p.wires().end());
  for (Wire& w : wires) {
    if (!w.source.is_boundary()) w.source.node = perm[w.source.node];
    if (!w.target.is_boundary()) w.target.node = perm[w.target.node];
  }
  std::shuffle(wires.begin(), wires.end(), rng);
  return Prograph::from_graph(kinds, wires);
}

TEST(Traversal, CanonicalFormIgnoresIds) {
  std::mt19937 rng(7);
  for (const Prograph& p : enumerate_prographs_oracle(4)) {
    const Prograph q = relabel(p, rng);
    EXPECT_EQ(q.canonical_moves(), p.canonical_moves());
    EXPECT_EQ(le(q), le(p));
  }
}

TEST(FromGraph, RejectsMalformed) {
  using K = OperatorKind;
  // Wrong wire count.
  EXPECT_EQ(code_of([] { Prograph::from_graph({}, {}); }), ErrorCode::MalformedPrograph);
  // Product right input arrives before the left one can: a crossing.
  const std::vector<K> kinds{K::Coproduct, K::Product};
  EXPECT_EQ(code_of([&] {
              Prograph::from_graph(kinds, {{{kBoundary, 0}, {0, 0}},
                                           {{0, 0}, {1, 0}},
                                           {{0, 0}, {1, 1}},
                                           {{1, 0}, {kBoundary, 0}}});
            }),
            ErrorCode::MalformedPrograph);
  // Port used twice.
  EXPECT_EQ(code_of([&] {
              Prograph::from_graph(kinds, {{{kBoundary, 0}, {0, 0}},
                                           {{0, 0}, {1, 0}},
                                           {{0, 1}, {1, 0}},
                                           {{1, 0}, {kBoundary, 0}}});
            }),
            ErrorCode::MalformedPrograph);
  // Crossed wires: the coproduct's left output feeds the product's right input.
  EXPECT_EQ(code_of([&] {
              Prograph::from_graph(kinds, {{{kBoundary, 0}, {0, 0}},
                                           {{0, 0}, {1, 1}},
                                           {{0, 1}, {1, 0}},
                                           {{1, 0}, {kBoundary, 0}}});
            }),
            ErrorCode::MalformedPrograph);
}

TEST(Schutzenberger, LabelledLabelledPair) {
  const Prograph p = fixtures::labelled_prograph();
  const Prograph r = fixtures::labelled_rotation();
  EXPECT_EQ(schutzenberger(p), r);
  EXPECT_EQ(schutzenberger(r), p);
  const TraversalLabels labels = depth_left_traversal(r);
  for (int node = 0; node < 8; ++node) EXPECT_EQ(labels.op_label[node], node + 1);
}

TEST(Schutzenberger, Involution) {
  for (int n = 0; n <= 4; ++n) {
    for (const Prograph& p : enumerate_prographs_oracle(n)) {
      EXPECT_EQ(schutzenberger(schutzenberger(p)), p);
    }
  }
}

TEST(Schutzenberger, FixedPointsOfSizeTwo) {
  // Of the five size-2 prographs, the two "mirror" ones swap and the rest are fixed.
  int fixed = 0;
  for (const Prograph& p : enumerate_prographs_oracle(2)) fixed += schutzenberger(p) == p;
  EXPECT_EQ(fixed, 3);
}

TEST(Stack, UnitAndSize) {
  const Prograph e;
  const Prograph p = fixtures::labelled_prograph();
  EXPECT_EQ(stack(e, p), p);
  EXPECT_EQ(stack(p, e), p);
  EXPECT_EQ(stack(p, p).size(), 8);
}

TEST(Stack, Associative) {
  const auto two = enumerate_prographs_oracle(2);
  for (const Prograph& a : two) {
    for (const Prograph& b : two) {
      for (const Prograph& c : enumerate_prographs_oracle(1)) {
        EXPECT_EQ(stack(stack(a, b), c), stack(a, stack(b, c)));
      }
    }
  }
}

TEST(Oracle, RawSequenceCounts) {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t count = 0;
    for_each_move_sequence(n, [&](const MoveSequence&) { ++count; });
    EXPECT_EQ(count, raw_sequence_count(n)) << "n=" << n;
  }
  EXPECT_EQ(raw_sequence_count(3), 61u);
}

TEST(Oracle, Counts) {
  const std::array<std::size_t, 6> expected{1, 1, 5, 42, 462, 6006};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_prographs_oracle(n).size(), expected[n]);
}

TEST(Oracle, ThreadCountDoesNotChangeOutput) {
  const auto one = enumerate_prographs_oracle(4, 1);
  EXPECT_EQ(enumerate_prographs_oracle(4, 3), one);
  EXPECT_EQ(enumerate_prographs_oracle(4, 8), one);
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
}

TEST(Oracle, CanonicalSequencesReplayToThemselves) {
  for (const Prograph& p : enumerate_prographs_oracle(4)) {
    EXPECT_EQ(apply_moves(p.canonical_moves()).canonical_moves(), p.canonical_moves());
  }
}

}  // namespace
}  // namespace pcp
