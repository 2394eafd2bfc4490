#include <gtest/gtest.h>

#include "oracles.h"
#include "rnashape/diagram.h"
#include "rnashape/errors.h"

namespace rnashape {
namespace {

TEST(ParseDiagram, TwoLineFormat) {
  Diagram d = ParseDiagram("2 2\n1-4 2-3\n");
  EXPECT_EQ(d.backbones(), 2);
  EXPECT_EQ(d.size(), 4);
  EXPECT_EQ(d.arc_count(), 2);
  EXPECT_EQ(d.partner(1), 4);
  EXPECT_EQ(d.partner(2), 3);
  EXPECT_FALSE(d.planted());
}

TEST(ParseDiagram, CrossingPair) {
  Diagram d = ParseDiagram("4\n1-3 2-4");
  EXPECT_EQ(d, Diagram({4}, {{1, 3}, {2, 4}}));
}

TEST(ParseDiagram, OneLineFormAndComments) {
  Diagram d = ParseDiagram("# header\n3 3 | 1-3 2-5 4-6  # trailing\n");
  EXPECT_EQ(d, Diagram({3, 3}, {{1, 3}, {2, 5}, {4, 6}}));
}

TEST(ParseDiagram, MissingArcLineMeansNoArcs) {
  Diagram d = ParseDiagram("5\n");
  EXPECT_EQ(d.arc_count(), 0);
  EXPECT_EQ(d.size(), 5);
}

TEST(ParseDiagram, RejectsSelfPairing) {
  try {
    ParseDiagram("2 2\n1-1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("self"), std::string::npos);
  }
}

TEST(ParseDiagram, RejectsMalformedInput) {
  EXPECT_THROW(ParseDiagram(""), ParseError);
  EXPECT_THROW(ParseDiagram("0\n"), ParseError);
  EXPECT_THROW(ParseDiagram("3\n1-4"), ParseError);
  EXPECT_THROW(ParseDiagram("4\n1-2 2-3"), ParseError);
  EXPECT_THROW(ParseDiagram("4\n1_2"), ParseError);
  EXPECT_THROW(ParseDiagram("x\n"), ParseError);
}

TEST(ParseDiagram, ErrorCarriesColumn) {
  try {
    ParseDiagram("4\n1-2 3-9");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(ParseDiagramBatch, Paragraphs) {
  auto ds = ParseDiagramBatch("4\n1-3 2-4\n\n2 2\n1-4 2-3\n\n\n6\n");
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds[0].backbones(), 1);
  EXPECT_EQ(ds[1].backbones(), 2);
  EXPECT_EQ(ds[2].arc_count(), 0);
}

TEST(Diagram, RejectsInvalidConstruction) {
  EXPECT_THROW(Diagram({}, {}), PreconditionError);
  EXPECT_THROW(Diagram({0}, {}), PreconditionError);
  EXPECT_THROW(Diagram({4}, {{3, 2}}), PreconditionError);
  EXPECT_THROW(Diagram({4}, {{1, 2}, {2, 3}}), PreconditionError);
  EXPECT_THROW(Diagram::FromPartners({2}, {0, 2, 0}), PreconditionError);
}

TEST(Plant, OneBackbone) {
  Diagram p = Plant(Diagram({4}, {{1, 3}, {2, 4}}));
  EXPECT_EQ(p, Diagram({6}, {{1, 6}, {2, 4}, {3, 5}}));
  EXPECT_TRUE(p.planted());
}

TEST(Plant, TwoBackbones) {
  Diagram p = Plant(Diagram({1, 1}, {{1, 2}}));
  EXPECT_EQ(p, Diagram({3, 3}, {{1, 3}, {4, 6}, {2, 5}}));
}

TEST(Plant, RejectsPlantedInputAndStripRejectsUnplanted) {
  Diagram p = Plant(Diagram({2}, {}));
  EXPECT_THROW(Plant(p), PreconditionError);
  EXPECT_THROW(StripPlants(Diagram({2}, {})), PreconditionError);
}

TEST(Diagram, AssumePlantedChecksRainbows) {
  EXPECT_TRUE(Diagram({4}, {{1, 4}, {2, 3}}).AssumePlanted().planted());
  EXPECT_THROW(Diagram({4}, {{1, 3}, {2, 4}}).AssumePlanted(),
               PreconditionError);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(IsConnected(Diagram({2, 2}, {{1, 4}, {2, 3}})));
  EXPECT_FALSE(IsConnected(Diagram({2, 2}, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(IsConnected(Diagram({5}, {})));
  EXPECT_TRUE(IsConnected(Diagram({4}, {{1, 3}, {2, 4}})));
}

TEST(Components, SplitsDisconnectedDiagram) {
  auto parts = Components(Diagram({2, 2}, {{1, 2}, {3, 4}}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], Diagram({2}, {{1, 2}}));
  EXPECT_EQ(parts[1], Diagram({2}, {{1, 2}}));
  auto one = Components(Diagram({2, 2}, {{1, 4}, {2, 3}}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Diagram({2, 2}, {{1, 4}, {2, 3}}));
}

TEST(Components, KeepsRelativeBackboneOrder) {
  Diagram d({1, 2, 1}, {{1, 4}, {2, 3}});
  auto parts = Components(d);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], Diagram({1, 1}, {{1, 2}}));
  EXPECT_EQ(parts[1], Diagram({2}, {{1, 2}}));
}

TEST(CanonicalCode, DistinctAndStable) {
  Diagram a({4}, {{1, 3}, {2, 4}});
  Diagram b({4}, {{1, 4}, {2, 3}});
  Diagram c({2, 2}, {{1, 4}, {2, 3}});
  EXPECT_EQ(CanonicalCode(a), "4 | 1-3 2-4");
  EXPECT_NE(CanonicalCode(a), CanonicalCode(b));
  EXPECT_NE(CanonicalCode(b), CanonicalCode(c));
  EXPECT_EQ(ParseDiagram(CanonicalCode(c)), c);
  EXPECT_TRUE(CanonicalLess(Diagram({4}, {{1, 2}}), a));
  EXPECT_FALSE(CanonicalLess(a, a));
}

TEST(IntervalKinds, DuplexAndCrossing) {
  auto kinds = IntervalKinds(Diagram({2, 2}, {{1, 4}, {2, 3}}));
  EXPECT_EQ(kinds, (std::vector<IntervalKind>{IntervalKind::kPInterval,
                                              IntervalKind::kGap,
                                              IntervalKind::kPInterval}));
  auto sigma = IntervalKinds(Diagram({4}, {{1, 3}, {2, 4}}));
  EXPECT_EQ(sigma, std::vector<IntervalKind>(3, IntervalKind::kSigmaInterval));
}

TEST(Stacks, FindsMaximalRuns) {
  auto s = Stacks(Diagram({6}, {{1, 6}, {2, 5}, {3, 4}}));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].outer, (Arc{1, 6}));
  EXPECT_EQ(s[0].length, 3);
  EXPECT_FALSE(s[0].exterior);
  auto x = Stacks(Diagram({2, 2}, {{1, 4}, {2, 3}}));
  ASSERT_EQ(x.size(), 1u);
  EXPECT_TRUE(x[0].exterior);
}

// Properties over every partial diagram on at most 7 vertices and 3
// backbones.
class SmallDiagrams : public ::testing::Test {
 protected:
  static void ForEach(const std::function<void(const Diagram&)>& f) {
    for (int n = 1; n <= 7; ++n) {
      for (int b = 1; b <= 3; ++b) {
        for (const auto& lengths : oracle::Compositions(n, b)) {
          oracle::AllPairings(lengths, false, f);
        }
      }
    }
  }
};

TEST_F(SmallDiagrams, SerializeRoundTrip) {
  ForEach([](const Diagram& d) {
    ASSERT_EQ(ParseDiagram(SerializeDiagram(d)), d) << CanonicalCode(d);
    ASSERT_EQ(ParseDiagram(CanonicalCode(d)), d);
  });
}

TEST_F(SmallDiagrams, PlantStripRoundTrip) {
  ForEach([](const Diagram& d) {
    Diagram p = Plant(d);
    ASSERT_EQ(p.arc_count(), d.arc_count() + d.backbones());
    ASSERT_EQ(p.size(), d.size() + 2 * d.backbones());
    ASSERT_TRUE(HasRainbows(p));
    ASSERT_EQ(StripPlants(p), d);
  });
}

TEST_F(SmallDiagrams, ComponentsPartitionArcs) {
  ForEach([](const Diagram& d) {
    auto parts = Components(d);
    int arcs = 0, backbones = 0;
    for (const Diagram& c : parts) {
      ASSERT_TRUE(IsConnected(c));
      arcs += c.arc_count();
      backbones += c.backbones();
    }
    ASSERT_EQ(arcs, d.arc_count());
    ASSERT_EQ(backbones, d.backbones());
    ASSERT_EQ(parts.size() == 1, IsConnected(d));
  });
}

TEST_F(SmallDiagrams, GapCount) {
  ForEach([](const Diagram& d) {
    auto kinds = IntervalKinds(d);
    ASSERT_EQ(static_cast<int>(kinds.size()), d.size() - 1);
    ASSERT_EQ(std::count(kinds.begin(), kinds.end(), IntervalKind::kGap),
              d.backbones() - 1);
  });
}

}  // namespace
}  // namespace rnashape
