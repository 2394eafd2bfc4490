#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "rnashape/enumerate.h"
#include "rnashape/errors.h"
#include "rnashape/fatgraph.h"
#include "rnashape/series.h"
#include "rnashape/shape.h"
#include "tables.h"

namespace rnashape {
namespace {

std::map<int, std::uint64_t> PolyProfile(const IntPolynomial& p) {
  std::map<int, std::uint64_t> m;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] != 0) m[k] = static_cast<std::uint64_t>(p[k]);
  }
  return m;
}

// Shapes found by filtering every perfect matching of the right size.
std::vector<Diagram> BruteForceShapes(int b, int g, int max_arcs) {
  std::vector<Diagram> out;
  for (int n = 2 * b; n <= 2 * max_arcs; n += 2) {
    for (const auto& lengths : oracle::Compositions(n, b)) {
      oracle::AllPairings(lengths, true, [&](const Diagram& d) {
        if (oracle::IsShape(d) && oracle::Genus(d) == g && IsConnected(d) &&
            d.arc_count() > b) {
          out.push_back(d.AssumePlanted());
        }
      });
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

TEST(EnumerateShapes, GenusOneOneBackbone) {
  auto shapes = EnumerateShapes(1, 1);
  ASSERT_EQ(shapes.size(), 4u);
  EXPECT_EQ(ArcProfile(shapes), (std::map<int, std::uint64_t>{{3, 1}, {4, 2}, {5, 1}}));
  EXPECT_EQ(shapes, BruteForceShapes(1, 1, 5));
}

TEST(EnumerateShapes, GenusZeroTwoBackbones) {
  auto shapes = EnumerateShapes(2, 0);
  ASSERT_EQ(shapes.size(), 2u);
  EXPECT_EQ(shapes, BruteForceShapes(2, 0, 5));
  EXPECT_EQ(ArcProfile(shapes), PolyProfile(ShapePolynomial2(0)));
}

TEST(EnumerateShapes, GenusZeroOneBackboneIsEmpty) {
  EXPECT_TRUE(EnumerateShapes(1, 0).empty());
}

TEST(EnumerateShapes, DisconnectedPairsMatchGeneralPolynomial) {
  ShapeEnumOptions opt;
  opt.include_disconnected = true;
  auto shapes = EnumerateShapes(2, 0, opt);
  EXPECT_EQ(ArcProfile(shapes), PolyProfile(ShapePolynomial2General(0)));
}

TEST(EnumerateShapes, MatchesPolynomials) {
  EXPECT_EQ(ArcProfile(testing_tables::Shapes(1, 2)),
            PolyProfile(ShapePolynomial1(2)));
  EXPECT_EQ(ArcProfile(testing_tables::Shapes(2, 1)),
            PolyProfile(ShapePolynomial2(1)));
  EXPECT_EQ(testing_tables::Shapes(1, 2).size(), 3696u);
  EXPECT_EQ(testing_tables::Shapes(2, 1).size(), 1832u);
}

TEST(EnumerateShapes, NoDuplicatesAndAllShapes) {
  for (auto [b, g] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const auto& shapes = testing_tables::Shapes(b, g);
    std::set<std::string> codes;
    for (const Diagram& s : shapes) {
      ASSERT_TRUE(codes.insert(CanonicalCode(s)).second);
      ASSERT_TRUE(IsShape(s));
      ASSERT_EQ(Genus(s), g);
      ASSERT_TRUE(IsConnected(s));
    }
  }
}

TEST(EnumerateShapes, Deterministic) {
  EXPECT_EQ(EnumerateShapes(1, 1), EnumerateShapes(1, 1));
  ShapeEnumOptions threaded;
  threaded.threads = 3;
  EXPECT_EQ(EnumerateShapes(2, 0, threaded), EnumerateShapes(2, 0));
}

TEST(EnumerateShapes, NodeLimit) {
  ShapeEnumOptions opt;
  opt.node_limit = 100;
  EXPECT_THROW(EnumerateShapes(1, 2, opt), InfeasibleError);
  EXPECT_THROW(EnumerateShapes(3, 0), PreconditionError);
}

TEST(EnumerateMatchings, SmallCensus) {
  EnumSpec spec;
  spec.backbones = 2;
  spec.connected_only = true;
  spec.genus_cap = 0;
  spec.min_arcs = spec.max_arcs = 1;
  EXPECT_EQ(EnumerateMatchings(spec, [](const Diagram&) {}), 1u);
  spec.min_arcs = spec.max_arcs = 2;
  EXPECT_EQ(EnumerateMatchings(spec, [](const Diagram&) {}), 8u);
}

TEST(EnumerateMatchings, AgreesWithBruteForce) {
  for (int b = 1; b <= 3; ++b) {
    for (int arcs = 1; arcs <= 4; ++arcs) {
      for (int g = 0; g <= 2; ++g) {
        EnumSpec spec;
        spec.backbones = b;
        spec.min_arcs = spec.max_arcs = arcs;
        spec.genus_cap = g;
        spec.exact_genus = true;
        spec.connected_only = true;
        std::vector<std::string> got;
        EnumerateMatchings(spec, [&](const Diagram& d) {
          got.push_back(CanonicalCode(d));
        });
        std::vector<std::string> want;
        for (const auto& lengths : oracle::Compositions(2 * arcs, b)) {
          oracle::AllPairings(lengths, true, [&](const Diagram& d) {
            if (oracle::Genus(d) == g && IsConnected(d)) {
              want.push_back(CanonicalCode(d));
            }
          });
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        ASSERT_EQ(got, want) << "b=" << b << " arcs=" << arcs << " g=" << g;
      }
    }
  }
}

TEST(EnumerateMatchings, PartialDiagrams) {
  EnumSpec spec;
  spec.backbones = 1;
  spec.matching_only = false;
  spec.max_vertices = 6;
  spec.max_arcs = 3;
  spec.genus_cap = 1;
  std::uint64_t want = 0;
  for (int n = 1; n <= 6; ++n) {
    oracle::AllPairings({n}, false, [&](const Diagram& d) {
      if (oracle::Genus(d) <= 1) ++want;
    });
  }
  EXPECT_EQ(EnumerateMatchings(spec, [](const Diagram&) {}), want);
}

TEST(CountFiber, LOneShape) {
  const auto& q0 = testing_tables::Shapes(2, 0);
  ASSERT_EQ(q0[0].arc_count(), 3);
  EXPECT_EQ(CountFiber(q0[0], 1), 1u);
  EXPECT_EQ(CountFiber(q0[0], 2), 7u);
  EXPECT_EQ(CountFiber(q0[0], 2) + CountFiber(q0[1], 2), 8u);
}

TEST(CountFiber, SumsMatchMatchingSeries) {
  PowerSeries w0 = MatchingSeries2(0, 9);
  PowerSeries w1 = MatchingSeries2(1, 9);
  for (int n = 1; n <= 5; ++n) {
    BigInt s0 = 0;
    for (const Diagram& s : testing_tables::Shapes(2, 0)) s0 += CountFiber(s, n);
    EXPECT_EQ(s0, w0[n + 2]) << n;
  }
  for (int n = 3; n <= 7; ++n) {
    EnumSpec spec;
    spec.backbones = 2;
    spec.min_arcs = spec.max_arcs = n;
    spec.genus_cap = 1;
    spec.exact_genus = true;
    spec.connected_only = true;
    std::uint64_t total = EnumerateMatchings(spec, [](const Diagram&) {});
    EXPECT_EQ(BigInt(total), w1[n + 2]) << n;
  }
}

// Groups every genus-1 matching by its shape and compares each fiber size
// with the fiber series of that shape.
TEST(CountFiber, GenusOneFibers) {
  const auto& table = testing_tables::Shapes(2, 1);
  for (int n = 3; n <= 6; ++n) {
    EnumSpec spec;
    spec.backbones = 2;
    spec.min_arcs = spec.max_arcs = n;
    spec.genus_cap = 1;
    spec.exact_genus = true;
    spec.connected_only = true;
    std::map<std::string, std::uint64_t> fibers;
    EnumerateMatchings(spec, [&](const Diagram& d) {
      ++fibers[CanonicalCode(ProjectShape(d).shape)];
    });
    std::map<int, PowerSeries> series;
    std::uint64_t seen = 0;
    for (const Diagram& s : table) {
      const int l = s.arc_count() - 2;
      auto it = series.find(l);
      if (it == series.end()) it = series.emplace(l, FiberSeries(l, 9)).first;
      auto f = fibers.find(CanonicalCode(s));
      std::uint64_t got = f == fibers.end() ? 0 : f->second;
      ASSERT_EQ(BigInt(got), it->second[n + 2]) << CanonicalCode(s);
      seen += got;
    }
    std::uint64_t all = 0;
    for (auto [code, c] : fibers) all += c;
    EXPECT_EQ(seen, all) << "matchings projecting outside the table";
  }
}

TEST(CountFiber, FiberSeriesByShape) {
  for (const Diagram& s : testing_tables::Shapes(2, 0)) {
    const int l = s.arc_count() - 2;
    PowerSeries f = FiberSeries(l, 8);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(BigInt(CountFiber(s, n)), f[n + 2]);
  }
}

}  // namespace
}  // namespace rnashape
