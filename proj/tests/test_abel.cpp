#include "cjac/abel.hpp"
#include "cjac/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cjac;

TEST(Abel, NaturalGMinus1Table) {
  EXPECT_EQ(natural_g_minus_1_vine(3, 4, 1).status, Naturality::natural);
  EXPECT_EQ(natural_g_minus_1_vine(1, 1, 5).status, Naturality::natural);
  EXPECT_EQ(natural_g_minus_1_vine(0, 1, 3).status, Naturality::natural);
  EXPECT_EQ(natural_g_minus_1_vine(0, 0, 3).status, Naturality::natural);

  const auto v = natural_g_minus_1_vine(0, 2, 2);
  EXPECT_EQ(v.status, Naturality::not_natural);
  ASSERT_TRUE(v.offending);
  EXPECT_EQ(*v.offending, (Multidegree{2, 0}));
  EXPECT_NE(v.reason.find("(2,0)"), std::string::npos);

  EXPECT_EQ(natural_g_minus_1_vine(2, 2, 2).status, Naturality::not_natural);
  EXPECT_THROW(natural_g_minus_1_vine(1, 0, 1), PreconditionError);
  EXPECT_THROW(natural_g_minus_1_vine(1, 1, 0), PreconditionError);
}

TEST(Abel, NaturalityNecessary) {
  const auto vine = make_vine(1, 1, 2);
  const auto two = naturality_necessary(vine, 2);
  EXPECT_EQ(two.status, Naturality::not_natural);
  EXPECT_EQ(two.epsilon, Connectivity::finite(2));
  EXPECT_EQ(naturality_necessary(vine, 1).status, Naturality::possibly_natural);

  const auto irr = naturality_necessary(make_irreducible(1, 3), 7);
  EXPECT_EQ(irr.status, Naturality::possibly_natural);
  EXPECT_TRUE(irr.epsilon->is_infinite());
  EXPECT_EQ(irr.neron_type_exists, DGenerality::tree_like_only);

  EXPECT_THROW(naturality_necessary(vine, 0), PreconditionError);
}

TEST(Abel, CorrectionProfiles) {
  EXPECT_TRUE(correction_profile_vine(1, 1, 2).all_zero());
  for (int delta = 3; delta <= 6; ++delta) EXPECT_TRUE(correction_profile_vine(0, 0, delta).all_zero());

  const auto p = correction_profile_vine(0, 2, 3);
  ASSERT_EQ(p.entries.size(), 4u);
  EXPECT_EQ(p.entries[3].l, 3);
  EXPECT_NE(p.entries[3].a, 0);
  EXPECT_EQ(p.entries[3].corrected, (Multidegree{0, 3}));
  EXPECT_FALSE(p.all_zero());
}

TEST(Abel, DegreeOneEmbedding) {
  const auto tail = degree1_abel_is_embedding(make_vine(0, 1, 1));
  EXPECT_FALSE(tail.embedding);
  EXPECT_EQ(tail.offenders, (std::vector<VertexIndex>{0}));

  EXPECT_TRUE(degree1_abel_is_embedding(make_vine(0, 0, 2)).embedding);
  EXPECT_TRUE(degree1_abel_is_embedding(make_irreducible(0, 1)).embedding);
  EXPECT_TRUE(degree1_abel_is_embedding(make_vine(1, 1, 1)).embedding);

  DualGraph chain({{"a", 1}, {"b", 0}, {"c", 1}}, {{0, 1}, {1, 2}});
  EXPECT_EQ(degree1_abel_is_embedding(chain).offenders, (std::vector<VertexIndex>{1}));
  // a self-node on the rational bridge component rescues it
  DualGraph looped({{"a", 1}, {"b", 0}, {"c", 1}}, {{0, 1}, {1, 2}, {1, 1}});
  EXPECT_TRUE(degree1_abel_is_embedding(looped).embedding);
}

// ---------------------------------------------------------------------------

TEST(AbelProperties, NaturalityMatchesStabilityScan) {
  for (int g1 = 0; g1 <= 4; ++g1)
    for (int g2 = 0; g2 <= 4; ++g2)
      for (int delta = 1; delta <= 5; ++delta) {
        if (g1 + g2 + delta - 1 < 2) continue;
        const auto vine = make_vine(g1, g2, delta);
        if (vine.edge_count() > oracle::OracleConfig{}.max_edges) continue;
        const auto genus = counts(vine).genus;
        const auto ss = oracle::semistable_bruteforce(vine).semistable;
        bool all_semistable = true;
        for (Degree l = 0; l <= genus - 1; ++l)
          if (std::find(ss.begin(), ss.end(), Multidegree{l, genus - 1 - l}) == ss.end()) all_semistable = false;
        const bool expected = delta == 1 || all_semistable;
        EXPECT_EQ(natural_g_minus_1_vine(g1, g2, delta).status == Naturality::natural, expected)
            << g1 << "," << g2 << "," << delta;
      }
}

TEST(AbelProperties, CorrectionProfileShape) {
  for (int g1 = 0; g1 <= 4; ++g1)
    for (int g2 = 0; g2 <= 4; ++g2)
      for (int delta = 1; delta <= 6; ++delta) {
        if (g1 + g2 + delta - 1 < 2) continue;
        const auto vine = make_vine(g1, g2, delta);
        const auto genus = counts(vine).genus;
        const StabilityChecker checker(vine);
        const auto p = correction_profile_vine(g1, g2, delta);
        ASSERT_EQ(p.entries.size(), static_cast<std::size_t>(genus));
        for (const auto& e : p.entries) {
          EXPECT_EQ(e.corrected, (Multidegree{e.l - e.a * delta, genus - 1 - e.l + e.a * delta}));
          EXPECT_TRUE(checker.check(e.corrected).semistable());
          EXPECT_EQ(e.a == 0, checker.check(Multidegree{e.l, genus - 1 - e.l}).semistable());
        }
        if (delta <= genus - 2) EXPECT_FALSE(p.all_zero()) << g1 << "," << g2 << "," << delta;
      }
}

TEST(AbelProperties, EmbeddingAgreesWithDefinition) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = cjac::testing::random_graph(rng, 6, 7, 1);
    const auto v = degree1_abel_is_embedding(g);
    EXPECT_EQ(v.embedding, v.offenders.empty());
    for (VertexIndex x : v.offenders) {
      EXPECT_EQ(g.vertex(x).genus, 0);
      // every incident node disconnects the graph
      for (EdgeIndex e : g.incident(x)) {
        std::vector<Edge> rest;
        for (EdgeIndex f = 0; f < g.edge_count(); ++f)
          if (f != e) rest.push_back({g.edge(f).u, g.edge(f).v});
        EXPECT_THROW(DualGraph(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), rest), InvalidInput);
      }
    }
  }
}
