#include <gtest/gtest.h>

#include "irrbool/graph.hpp"
#include "irrbool/hypergraph.hpp"
#include "irrbool/minor.hpp"
#include "irrbool/text_format.hpp"

using namespace irrbool;

namespace {

bool iso(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.vertex_count() == 0) return true;
  return is_isomorphic(a.to_hypergraph(), b.to_hypergraph()).has_value();
}

Graph two_triangles() { return disjoint_union(complete(3), complete(3)); }

}  // namespace

TEST(Builders, Examples) {
  EXPECT_TRUE(iso(graph_join(empty(2), empty(2)), cycle(4)));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(complement(complete(n)), empty(n));
  const Graph t = two_triangles();
  EXPECT_EQ(t.vertex_count(), 6);
  EXPECT_EQ(t.edge_count(), 6u);
  EXPECT_THROW(complete(0), std::invalid_argument);
}

TEST(Builders, ComplementIsInvolutionAndJoinIsBipartite) {
  for (std::uint64_t m = 0; m < 1024; m += 3) {
    const Graph g = Graph::from_pair_mask(5, m);
    ASSERT_EQ(complement(complement(g)), g);
  }
  const Graph k23 = graph_join(empty(2), empty(3));
  EXPECT_EQ(k23.edge_count(), 6u);
}

TEST(ReduceIsolated, Examples) {
  const Graph t = disjoint_union(complete(3), empty(2));
  EXPECT_EQ(reduce_isolated(t), complete(3));
  EXPECT_TRUE(is_equivalent(polynomial_of(t.to_hypergraph()),
                            polynomial_of(reduce_isolated(t).to_hypergraph())));
  EXPECT_EQ(reduce_isolated(empty(4)).vertex_count(), 0);
  EXPECT_EQ(reduce_isolated(cycle(5)), cycle(5));
}

TEST(AiDecomposition, Examples) {
  const auto c4 = ai_decomposition(cycle(4));
  EXPECT_EQ(c4.components, (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(c4.quotient, complete(2));

  const auto c5 = ai_decomposition(cycle(5));
  EXPECT_EQ(c5.components.size(), 5u);
  EXPECT_TRUE(is_ai_prime(c5.quotient));

  const auto p3 = ai_decomposition(path(3));
  EXPECT_EQ(p3.components, (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(p3.quotient, complete(2));
}

TEST(AiDecomposition, LexicographicSumRebuildsUpToIsomorphism) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); m += 5) {
      const Graph g = Graph::from_pair_mask(n, m);
      const auto d = ai_decomposition(g);
      ASSERT_TRUE(is_ai_prime(d.quotient));
      std::vector<int> sizes;
      for (const auto& c : d.components) sizes.push_back(static_cast<int>(c.size()));
      ASSERT_TRUE(iso(lexicographic_sum(d.quotient, sizes), g)) << format_edge_list(g);
    }
  }
}

TEST(PropertyP, Examples) {
  EXPECT_TRUE(satisfies_property_p(cycle(5)));
  EXPECT_TRUE(satisfies_property_p(complete(4)));
  EXPECT_FALSE(satisfies_property_p(cycle(6)));
  EXPECT_EQ(classify_property_p(cycle(4)).tag, PropertyPTag::Cycle4);
  EXPECT_EQ(classify_property_p(path(3)).tag, PropertyPTag::Path3);
  const auto k5 = classify_property_p(complete(5));
  EXPECT_EQ(k5.tag, PropertyPTag::Complete);
  EXPECT_EQ(k5.n, 5);
  EXPECT_EQ(classify_property_p(cycle(5)).tag, PropertyPTag::Cycle5);
}

TEST(PropertyP, LiteralDefinitionOracle) {
  // Every nonedge {a, b} has some j of degree 2 adjacent to both.
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m) {
      const Graph g = Graph::from_pair_mask(n, m);
      bool p = true;
      for (int a = 1; a <= n && p; ++a) {
        for (int b = a + 1; b <= n && p; ++b) {
          if (g.adjacent(a, b)) continue;
          bool found = false;
          for (int j = 1; j <= n; ++j) {
            found = found || (j != a && j != b && g.degree(j) == 2 && g.adjacent(a, j) && g.adjacent(j, b));
          }
          p = found;
        }
      }
      ASSERT_EQ(satisfies_property_p(g), p) << format_edge_list(g);
    }
  }
}

TEST(JoinIrreducible, Examples) {
  EXPECT_EQ(classify_join_irreducible(two_triangles()), (JIGraphClass{JITag::DisjointTriangles, 2, 0}));
  EXPECT_EQ(classify_join_irreducible(cycle(5)).tag, JITag::Cycle5);
  EXPECT_EQ(classify_join_irreducible(path(3)), (JIGraphClass{JITag::EmptyJoinEmpty, 1, 2}));
  EXPECT_EQ(classify_join_irreducible(complete(4)), (JIGraphClass{JITag::Complete, 4, 0}));
  EXPECT_EQ(classify_join_irreducible(graph_join(complete(2), empty(3))),
            (JIGraphClass{JITag::K2JoinEmpty, 3, 0}));
  EXPECT_EQ(classify_join_irreducible(graph_join(empty(2), graph_join(empty(2), empty(2)))),
            (JIGraphClass{JITag::BalancedMultipartite, 3, 2}));
  EXPECT_EQ(classify_join_irreducible(cycle(4)), (JIGraphClass{JITag::BalancedMultipartite, 2, 2}));
  EXPECT_EQ(classify_join_irreducible(cycle(6)).tag, JITag::NotIrreducible);
  EXPECT_EQ(classify_join_irreducible(empty(3)).tag, JITag::NotIrreducible);
  EXPECT_EQ(classify_join_irreducible(disjoint_union(cycle(5), empty(2))).tag, JITag::Cycle5);
}

TEST(JoinIrreducible, StructuralMatchesTemplateIsomorphism) {
  std::vector<JIGraphClass> families;
  for (int a = 2; a <= 2; ++a) families.push_back({JITag::DisjointTriangles, a, 0});
  families.push_back({JITag::Cycle5, 0, 0});
  for (int m = 2; m <= 5; ++m) families.push_back({JITag::K2JoinEmpty, m, 0});
  for (int n = 2; n <= 7; ++n) families.push_back({JITag::Complete, n, 0});
  for (int n = 1; n <= 3; ++n) {
    for (int m = n + 1; n + m <= 7; ++m) families.push_back({JITag::EmptyJoinEmpty, n, m});
  }
  for (int r = 2; r <= 3; ++r) {
    for (int n = 2; r * n <= 7; ++n) families.push_back({JITag::BalancedMultipartite, r, n});
  }
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); m += (n == 7 ? 97 : 1)) {
      const Graph g = Graph::from_pair_mask(n, m);
      const Graph r = reduce_isolated(g);
      JIGraphClass by_template{};
      for (const auto& f : families) {
        if (iso(family_representative(f), r)) by_template = f;
      }
      ASSERT_EQ(classify_join_irreducible(g), by_template) << format_edge_list(g);
    }
  }
}

TEST(JoinIrreducible, FamilyRepresentativesAreIrreducible) {
  EXPECT_TRUE(is_join_irreducible_generic(family_representative({JITag::DisjointTriangles, 3, 0})));
  EXPECT_TRUE(is_join_irreducible_generic(family_representative({JITag::Cycle5, 0, 0})));
  EXPECT_TRUE(is_join_irreducible_generic(family_representative({JITag::EmptyJoinEmpty, 2, 3})));
  EXPECT_TRUE(is_join_irreducible_generic(graph_join(empty(3), empty(3))));
  EXPECT_FALSE(is_join_irreducible_generic(cycle(6)));
  EXPECT_THROW(family_representative({JITag::EmptyJoinEmpty, 3, 3}), std::invalid_argument);
  EXPECT_THROW(family_representative({JITag::NotIrreducible, 0, 0}), std::invalid_argument);
}

TEST(LemmaAux, Examples) {
  EXPECT_TRUE(lemma_aux_check(complete(4)));
  EXPECT_TRUE(lemma_aux_check(cycle(5)));
  EXPECT_THROW(lemma_aux_check(two_triangles()), std::invalid_argument);
}

TEST(LemmaAux, IsolatedAfterContraction) {
  // Contracting the nonedge {1, 3} of the path 1-2-3: x1x2 + x2x1 cancels.
  EXPECT_EQ(isolated_after_contraction(path(3), 1, 3), (std::vector<int>{1, 2}));
  // Contracting the edge {1, 2} leaves 1 (merged) and old 3 as 2.
  EXPECT_EQ(isolated_after_contraction(path(3), 1, 2), (std::vector<int>{}));
  EXPECT_EQ(isolated_after_contraction(complete(3), 1, 2), (std::vector<int>{2}));
}
