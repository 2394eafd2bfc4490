#include <gtest/gtest.h>

#include "oracles.h"
#include "rnashape/bijections.h"
#include "rnashape/errors.h"
#include "rnashape/fatgraph.h"
#include "rnashape/shape.h"
#include "tables.h"

namespace rnashape {
namespace {

Diagram Planted(std::vector<int> lengths, std::initializer_list<Arc> arcs) {
  return Diagram(std::move(lengths), arcs).AssumePlanted();
}

TEST(Theta, DeletesArcAfterPartnerOfFirst) {
  Diagram a = Planted({8}, {{1, 8}, {2, 4}, {3, 6}, {5, 7}});
  Diagram b = Theta(a);
  EXPECT_EQ(b, Planted({6}, {{1, 6}, {2, 4}, {3, 5}}));
  EXPECT_EQ(Genus(b), 1);
  EXPECT_EQ(ThetaInverse(b), a);
}

TEST(Theta, RejectsWrongClass) {
  Diagram b = Planted({6}, {{1, 6}, {2, 4}, {3, 5}});
  EXPECT_THROW(Theta(b), PreconditionError);
  Diagram a = Planted({8}, {{1, 8}, {2, 4}, {3, 6}, {5, 7}});
  EXPECT_THROW(ThetaInverse(a), PreconditionError);
}

TEST(Eta, GluesTwoBackbones) {
  Diagram q = Planted({3, 3}, {{1, 3}, {4, 6}, {2, 5}});
  Diagram a = Eta(q);
  EXPECT_EQ(a, Planted({8}, {{1, 8}, {2, 4}, {5, 7}, {3, 6}}));
  EXPECT_EQ(Genus(a), 1);
  EXPECT_EQ(a.arc_count(), 4);
  EXPECT_EQ(ClassifyShape(a), ShapeClass::kA);
  EXPECT_EQ(EtaInverse(a), q);
}

TEST(Eta, FourArcGenusZeroShapeMapsToFiveArcAShape) {
  const auto& q0 = testing_tables::Shapes(2, 0);
  ASSERT_EQ(q0.size(), 2u);
  Diagram a = Eta(q0[1]);
  EXPECT_EQ(a.arc_count(), 5);
  EXPECT_EQ(Genus(a), 1);
  EXPECT_EQ(ClassifyShape(a), ShapeClass::kA);
}

TEST(Eta, RejectsOneBackboneInput) {
  EXPECT_THROW(Eta(Planted({6}, {{1, 6}, {2, 4}, {3, 5}})), PreconditionError);
}

class ThetaRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(ThetaRoundTrip, AllShapes) {
  const int g = GetParam();
  for (const Diagram& s : testing_tables::Shapes(1, g)) {
    if (ClassifyShape(s) == ShapeClass::kA) {
      Diagram b = Theta(s);
      ASSERT_TRUE(IsShape(b));
      ASSERT_EQ(ClassifyShape(b), ShapeClass::kB);
      ASSERT_EQ(Genus(b), g);
      ASSERT_EQ(b.arc_count(), s.arc_count() - 1);
      ASSERT_EQ(ThetaInverse(b), s) << CanonicalCode(s);
    } else {
      Diagram a = ThetaInverse(s);
      ASSERT_TRUE(IsShape(a));
      ASSERT_EQ(ClassifyShape(a), ShapeClass::kA);
      ASSERT_EQ(Genus(a), g);
      ASSERT_EQ(a.arc_count(), s.arc_count() + 1);
      ASSERT_EQ(Theta(a), s) << CanonicalCode(s);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Genus, ThetaRoundTrip, ::testing::Values(1, 2));

class EtaRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(EtaRoundTrip, TwoBackboneShapes) {
  const int g = GetParam();
  for (const Diagram& q : testing_tables::Shapes(2, g)) {
    Diagram a = Eta(q);
    ASSERT_TRUE(IsShape(a));
    ASSERT_EQ(ClassifyShape(a), ShapeClass::kA);
    ASSERT_EQ(Genus(a), g + 1);
    ASSERT_EQ(a.arc_count(), q.arc_count() + 1);
    ASSERT_EQ(EtaInverse(a), q) << CanonicalCode(q);
  }
}

TEST_P(EtaRoundTrip, AShapesOfNextGenus) {
  const int g = GetParam();
  int connected = 0, total = 0;
  for (const Diagram& a : testing_tables::Shapes(1, g + 1)) {
    if (ClassifyShape(a) != ShapeClass::kA) continue;
    ++total;
    Diagram q = EtaInverse(a);
    ASSERT_EQ(q.backbones(), 2);
    ASSERT_TRUE(IsShape(q)) << CanonicalCode(a);
    ASSERT_EQ(oracle::Genus(q), g);
    ASSERT_EQ(q.arc_count(), a.arc_count() - 1);
    ASSERT_EQ(Eta(q), a) << CanonicalCode(a);
    if (IsConnected(q)) {
      ++connected;
    } else {
      auto parts = Components(q);
      ASSERT_EQ(parts.size(), 2u);
      ASSERT_EQ(Genus(parts[0]) + Genus(parts[1]), g + 1);
    }
  }
  EXPECT_EQ(connected, static_cast<int>(testing_tables::Shapes(2, g).size()));
  EXPECT_EQ(total * 2, static_cast<int>(testing_tables::Shapes(1, g + 1).size()));
}

INSTANTIATE_TEST_SUITE_P(Genus, EtaRoundTrip, ::testing::Values(0, 1));

}  // namespace
}  // namespace rnashape
