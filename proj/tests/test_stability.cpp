#include "cjac/oracle.hpp"
#include "cjac/stability.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace cjac;

TEST(Stability, VineVerdicts) {
  const auto vine = make_vine(1, 1, 2);
  auto stable = check_stability(vine, {1, 1});
  EXPECT_EQ(stable.status, StabilityStatus::stable);
  EXPECT_TRUE(stable.witnesses.empty());

  auto strict = check_stability(vine, {0, 2});
  EXPECT_EQ(strict.status, StabilityStatus::strictly_semistable);
  EXPECT_EQ(strict.witnesses, (std::vector<Subcurve>{{{0}}}));

  auto unstable = check_stability(vine, {-1, 3});
  EXPECT_EQ(unstable.status, StabilityStatus::unstable);
  EXPECT_EQ(unstable.witnesses, (std::vector<Subcurve>{{{0}}}));

  EXPECT_THROW(check_stability(vine, {1, 2}), DegreeMismatch);
  EXPECT_THROW(check_stability(vine, {1, 1, 0}), PreconditionError);
}

TEST(Stability, LoopsCountTowardSubcurveGenus) {
  // C1 has a self-node, so p_a(C1) = 1 and d_1 >= 0 is required.
  DualGraph g({{"C1", 0}, {"C2", 1}}, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_EQ(counts(g).genus, 3);
  EXPECT_EQ(check_stability(g, {-1, 3}).status, StabilityStatus::unstable);
  EXPECT_EQ(check_stability(g, {0, 2}).status, StabilityStatus::strictly_semistable);
  EXPECT_EQ(check_stability(g, {1, 1}).status, StabilityStatus::stable);
}

TEST(Stability, EnumerateVine) {
  const auto vine = make_vine(1, 1, 2);
  EXPECT_EQ(enumerate_semistable(vine), (std::vector<Multidegree>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(enumerate_stable(vine), (std::vector<Multidegree>{{1, 1}}));
  EXPECT_TRUE(enumerate_stable(make_vine(2, 3, 1)).empty());
  EXPECT_EQ(enumerate_semistable(make_vine(2, 3, 1)).size(), 2u);
}

TEST(Stability, EnumerateIrreducible) {
  for (int g = 0; g <= 3; ++g)
    for (int nodes = 0; nodes <= 2; ++nodes) {
      const auto curve = make_irreducible(g, nodes);
      const Degree expected = g + nodes - 1;
      EXPECT_EQ(enumerate_semistable(curve), (std::vector<Multidegree>{{expected}}));
      EXPECT_EQ(enumerate_stable(curve), (std::vector<Multidegree>{{expected}}));
    }
}

TEST(Stability, Disconnected) {
  for (int g1 = 0; g1 <= 2; ++g1)
    for (int g2 = 0; g2 <= 2; ++g2) {
      const auto pieces = partial_normalization(make_vine(g1, g2, 3), NodeSet{{0, 1, 2}});
      EXPECT_EQ(enumerate_stable_disconnected(pieces), (std::vector<Multidegree>{{g1 - 1, g2 - 1}}));
    }

  const auto vine = make_vine(1, 1, 2);
  EXPECT_EQ(enumerate_stable_disconnected(partial_normalization(vine, NodeSet{})), enumerate_stable(vine));

  // vine (delta 2, genera 1,1) joined to a genus-2 point by a bridge, bridge normalized
  DualGraph g({{"C1", 1}, {"C2", 1}, {"P", 2}}, {{0, 1}, {0, 1}, {1, 2}});
  const auto pieces = partial_normalization(g, NodeSet{{2}});
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(enumerate_stable_disconnected(pieces), (std::vector<Multidegree>{{1, 1, 1}}));

  EXPECT_EQ(check_stability(pieces, {1, 1, 1}).status, StabilityStatus::stable);
  auto strict = check_stability(pieces, {0, 2, 1});
  EXPECT_EQ(strict.status, StabilityStatus::strictly_semistable);
  EXPECT_EQ(strict.witnesses, (std::vector<Subcurve>{{{0}}}));
  EXPECT_THROW(check_stability(pieces, {1, 2, 0}), DegreeMismatch);
}

TEST(Stability, BoxCap) {
  EnumerationLimits tight;
  tight.max_box = 10;
  DualGraph g({{"a", 0}, {"b", 0}, {"c", 0}}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {2, 0}});
  EXPECT_THROW(enumerate_semistable(g, tight), CapExceeded);
}

// ---------------------------------------------------------------------------

TEST(StabilityProperties, AgreesWithBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = cjac::testing::random_graph(rng, 5, 8, 3);
    const auto ss = enumerate_semistable(g);
    const auto st = enumerate_stable(g);
    const auto brute = oracle::semistable_bruteforce(g);
    EXPECT_EQ(ss, brute.semistable);
    EXPECT_EQ(st, brute.stable);
    EXPECT_FALSE(ss.empty());
    EXPECT_TRUE(std::includes(ss.begin(), ss.end(), st.begin(), st.end()));
  }
}

TEST(StabilityProperties, VineCounts) {
  for (int g1 = 0; g1 <= 3; ++g1)
    for (int g2 = 0; g2 <= 3; ++g2)
      for (int delta = 1; delta <= 6; ++delta) {
        const auto vine = make_vine(g1, g2, delta);
        EXPECT_EQ(enumerate_semistable(vine).size(), static_cast<std::size_t>(delta + 1));
        EXPECT_EQ(enumerate_stable(vine).size(), static_cast<std::size_t>(delta - 1));
      }
}

TEST(StabilityProperties, ConnectedQuantifierSuffices) {
  // Testing every proper subset instead of connected ones gives the same semistable set.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = cjac::testing::random_graph(rng, 5, 8, 2);
    const std::size_t n = g.vertex_count();
    for (const auto& d : enumerate_semistable(g)) {
      for (unsigned set = 1; set + 1 < (1u << n); ++set) {
        std::int64_t dz = 0, genera = 0, inner = 0, size = 0;
        for (std::size_t i = 0; i < n; ++i)
          if ((set >> i) & 1u) {
            dz += d[i];
            genera += g.vertex(i).genus;
            ++size;
          }
        for (const auto& e : g.edges())
          if (((set >> e.u) & 1u) && ((set >> e.v) & 1u)) ++inner;
        // sum of (p_a(Z_j) - 1) over the connected pieces of Z
        EXPECT_GE(dz, genera + inner - size) << "set " << set;
      }
    }
  }
}

TEST(StabilityProperties, RelabelingPermutesSets) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = cjac::testing::random_graph(rng, 5, 8, 2);
    const auto perm = cjac::testing::random_permutation(rng, g.vertex_count());
    auto h = cjac::testing::permute(g, perm);
    std::vector<Multidegree> mapped;
    for (const auto& d : enumerate_semistable(g)) {
      Multidegree m = d;
      for (std::size_t i = 0; i < perm.size(); ++i) m[perm[i]] = d[i];
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, enumerate_semistable(h));
  }
}
