#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sepchoose/hypergraph.hpp"

using namespace sepchoose;

TEST(Validate, SingletonPartsAcceptAnyEdge) {
  const Hypergraph h{2, 2, {{0, 1}}};
  const auto p = PartitionStructure::blocks(2, 1);
  EXPECT_TRUE(validate(h, &p).ok());
}

TEST(Validate, EdgeInsideOnePartIsReported) {
  const Hypergraph h{2, 2, {{0, 1}}};
  const auto p = PartitionStructure::blocks(1, 2);
  const auto report = validate(h, &p);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].find("meets part 0 in 2"), std::string::npos);
  EXPECT_NE(report.violations[0].find("{0,1}"), std::string::npos);
}

TEST(Validate, UniformityMismatch) {
  const Hypergraph h{3, 2, {{0, 1, 2}}};
  const auto report = validate(h);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.violations[0].find("size 3 != uniformity 2"), std::string::npos);
}

TEST(Validate, RangeOrderAndRepeats) {
  EXPECT_FALSE(validate(Hypergraph{3, 2, {{0, 3}}}).ok());
  EXPECT_FALSE(validate(Hypergraph{3, 2, {{2, 1}}}).ok());
  EXPECT_FALSE(validate(Hypergraph{3, 2, {{1, 1}}}).ok());
  EXPECT_THROW(Hypergraph::make(3, 2, {{0, 5}}), PreconditionError);
  EXPECT_EQ(Hypergraph::make(3, 2, {{2, 1}}).edges[0], (Edge{1, 2}));
}

TEST(Validate, PartitionFromParts) {
  EXPECT_THROW(PartitionStructure::from_parts({{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(PartitionStructure::from_parts({{0, 1}, {2}}), PreconditionError);
  const auto p = PartitionStructure::from_parts({{0, 2}, {1, 3}});
  EXPECT_EQ(p.part_of, (std::vector<unsigned>{0, 1, 0, 1}));
}

TEST(Validate, FamilyMembersMustAgree) {
  HypergraphFamily f = HypergraphFamily::make(4, 2, {{{0, 1}}, {{2, 3}}});
  EXPECT_TRUE(validate(f).ok());
  f.members[1].num_vertices = 5;
  EXPECT_FALSE(validate(f).ok());
  EXPECT_FALSE(validate(HypergraphFamily{}).ok());
}

TEST(NearlyDisjoint, Examples) {
  const auto yes = HypergraphFamily::make(4, 2, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  EXPECT_TRUE(are_nearly_disjoint(yes));

  const auto no = HypergraphFamily::make(4, 3, {{{0, 1, 2}}, {{0, 1, 3}}});
  const auto result = are_nearly_disjoint(no);
  ASSERT_FALSE(result);
  ASSERT_TRUE(result.witness);
  EXPECT_EQ(result.witness->member_a, 1u);
  EXPECT_EQ(result.witness->edge_a, (Edge{0, 1, 2}));
  EXPECT_EQ(result.witness->member_b, 2u);
  EXPECT_EQ(result.witness->edge_b, (Edge{0, 1, 3}));
}

TEST(NearlyDisjoint, DuplicatesWithinMemberAreFine) {
  const auto f = HypergraphFamily::make(4, 2, {{{0, 1}, {0, 1}}, {{2, 3}}});
  EXPECT_TRUE(are_nearly_disjoint(f));
}

// For graphs, near-disjointness is edge-set disjointness; both sides are
// checked independently by exhaustive pair enumeration.
TEST(NearlyDisjoint, GraphsMeansDisjointEdgeSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    HypergraphFamily f;
    f.num_vertices = n;
    f.uniformity = 2;
    const std::size_t k = 2 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) f.members.push_back(oracle::random_hypergraph(rng, n, 2, rng() % 4));
    bool disjoint = true;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (const auto& x : f.members[a].edges)
          for (const auto& y : f.members[b].edges) disjoint = disjoint && x != y;
    EXPECT_EQ(are_nearly_disjoint(f).nearly_disjoint, disjoint);
    EXPECT_EQ(oracle::nearly_disjoint(f), disjoint);
  }
}

TEST(NearlyDisjoint, SymmetricAndRelabelingInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 5 + rng() % 4;
    const unsigned r = 2 + rng() % 2;
    HypergraphFamily f;
    f.num_vertices = n;
    f.uniformity = r;
    for (int i = 0; i < 3; ++i) f.members.push_back(oracle::random_hypergraph(rng, n, r, 1 + rng() % 3));
    const bool base = are_nearly_disjoint(f).nearly_disjoint;
    EXPECT_EQ(base, oracle::nearly_disjoint(f));

    HypergraphFamily reversed = f;
    std::reverse(reversed.members.begin(), reversed.members.end());
    EXPECT_EQ(are_nearly_disjoint(reversed).nearly_disjoint, base);

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    HypergraphFamily relabeled = f;
    for (auto& h : relabeled.members)
      for (auto& e : h.edges) {
        for (auto& v : e) v = perm[v];
        std::sort(e.begin(), e.end());
      }
    EXPECT_EQ(are_nearly_disjoint(relabeled).nearly_disjoint, base);
  }
}

TEST(MaxDegree, Examples) {
  EXPECT_EQ(max_degree(Hypergraph{3, 2, {{0, 1}, {0, 2}}}), 2u);
  EXPECT_EQ(max_degree(Hypergraph{4, 2, {}}), 0u);
  EXPECT_EQ(max_degree(Hypergraph{4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}), 3u);
  EXPECT_EQ(max_degree(Hypergraph{2, 2, {{0, 1}, {0, 1}}}), 2u);
}

TEST(Transversal, Examples) {
  EXPECT_TRUE(is_transversal(Hypergraph{2, 2, {{0, 1}}}, VertexSet{1}));
  EXPECT_FALSE(is_transversal(Hypergraph{4, 2, {{0, 1}, {2, 3}}}, VertexSet{0}));
}

TEST(Transversal, ComplementOfIndependentSet) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const unsigned r = 1 + rng() % std::min<std::size_t>(3, n);
    const auto h = oracle::random_hypergraph(rng, n, r, rng() % 8);
    VertexSet t;
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1) t.push_back(v);
    EXPECT_EQ(is_transversal(h, t), is_independent(h, complement(n, t)));
  }
}

TEST(Copies, DisjointCopiesShiftVertices) {
  const Hypergraph h{3, 2, {{0, 2}}};
  const auto c = disjoint_copies(h, 3);
  EXPECT_EQ(c.num_vertices, 9u);
  EXPECT_EQ(c.edges, (std::vector<Edge>{{0, 2}, {3, 5}, {6, 8}}));
}
