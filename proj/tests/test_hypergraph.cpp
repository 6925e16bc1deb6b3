#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "irrbool/canon.hpp"
#include "irrbool/designs.hpp"
#include "irrbool/graph.hpp"
#include "irrbool/hypergraph.hpp"
#include "irrbool/minor.hpp"
#include "irrbool/text_format.hpp"
#include "irrbool/verify.hpp"
#include "oracles.hpp"

using namespace irrbool;

namespace {

Hypergraph H(int n, std::vector<std::vector<int>> e) { return Hypergraph::from_lists(n, e); }
const Hypergraph kH1 = H(3, {});
const Hypergraph kH2 = H(3, {{1, 2}, {}});
const Hypergraph kH3 = H(3, {{1, 2}, {1, 3}, {2, 3}});

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int density16) {
  std::vector<Edge> edges;
  for (Edge s = 0; s < (Edge{1} << n); ++s) {
    if (static_cast<int>(rng() % 16) < density16) edges.push_back(s);
  }
  return Hypergraph(n, edges);
}

std::vector<Edge> edges_of(const Hypergraph& h) { return {h.edges().begin(), h.edges().end()}; }

}  // namespace

TEST(Hypergraph, Validation) {
  EXPECT_THROW(Hypergraph(0, {}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(2, {4}), std::invalid_argument);
}

TEST(Hypergraph, PolynomialExamples) {
  EXPECT_TRUE(polynomial_of(kH1).is_zero());
  EXPECT_EQ(format_polynomial(polynomial_of(kH2)), "x1*x2 + 1");
  EXPECT_EQ(format_polynomial(polynomial_of(kH3)), "x1*x2 + x1*x3 + x2*x3");
}

TEST(Hypergraph, BijectionExhaustiveUpToFourVertices) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (1u << n)); ++fam) {
      std::vector<Edge> edges;
      for (Edge s = 0; s < (Edge{1} << n); ++s) {
        if ((fam >> s) & 1U) edges.push_back(s);
      }
      const Hypergraph h(n, edges);
      ASSERT_EQ(hypergraph_of(polynomial_of(h)), h);
      const Zhegalkin p = polynomial_of(h);
      ASSERT_EQ(polynomial_of(hypergraph_of(p)), p);
    }
  }
}

TEST(Hypergraph, Support) {
  EXPECT_EQ(support(kH2), (std::vector<int>{1, 2}));
  EXPECT_TRUE(support(kH1).empty());
  EXPECT_EQ(support(kH3), (std::vector<int>{1, 2, 3}));
}

TEST(QuotientMap, Examples) {
  EXPECT_TRUE(verify_quotient_map(VertexMap::identity(3), kH3, kH3));
  const VertexMap m{3, 2, {1, 1, 2}};
  EXPECT_TRUE(verify_quotient_map(m, kH3, H(2, {{1}})));
  EXPECT_TRUE(verify_quotient_map(VertexMap{2, 1, {1, 1}}, H(2, {{1}, {2}}), H(1, {})));
  EXPECT_THROW(verify_quotient_map(VertexMap{2, 1, {1, 1}}, kH3, H(1, {})), std::invalid_argument);
}

TEST(QuotientMap, Composition) {
  const VertexMap id = VertexMap::identity(3);
  EXPECT_EQ(compose_quotients(id, id), id);
  const VertexMap m{3, 2, {1, 1, 2}};
  const VertexMap c{2, 1, {1, 1}};
  const Hypergraph mid = H(2, {{1}});
  ASSERT_TRUE(verify_quotient_map(c, mid, H(1, {{1}})));
  EXPECT_TRUE(verify_quotient_map(compose_quotients(m, c), kH3, H(1, {{1}})));
  EXPECT_THROW(compose_quotients(m, m), std::invalid_argument);
}

TEST(QuotientMap, ChainsOfRandomQuotientsCompose) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 300; ++rep) {
    const Hypergraph h0 = random_hypergraph(rng, 5, 4);
    VertexMap a{5, 4, std::vector<int>(5)};
    for (int& v : a.image) v = 1 + static_cast<int>(rng() % 4);
    std::vector<Edge> e1;
    for (Edge e : h0.edges()) e1.push_back(map_edge(a, e));
    reduce_gf2(e1);
    const Hypergraph h1(4, e1);
    VertexMap b{4, 3, std::vector<int>(4)};
    for (int& v : b.image) v = 1 + static_cast<int>(rng() % 3);
    std::vector<Edge> e2;
    for (Edge e : h1.edges()) e2.push_back(map_edge(b, e));
    reduce_gf2(e2);
    const Hypergraph h2(3, e2);
    ASSERT_TRUE(verify_quotient_map(a, h0, h1));
    ASSERT_TRUE(verify_quotient_map(b, h1, h2));
    ASSERT_TRUE(verify_quotient_map(compose_quotients(a, b), h0, h2));
    // An isomorphism after a quotient still verifies.
    const std::vector<int> p{3, 1, 2};
    const VertexMap iso{3, 3, p};
    const Hypergraph h3(3, oracle::permute_edges(e2, p));
    ASSERT_TRUE(verify_quotient_map(compose_quotients(a, compose_quotients(b, iso)), h0, h3));
  }
}

TEST(Contract, Examples) {
  EXPECT_EQ(contract(kH3, 1, 2), H(2, {{1}}));
  EXPECT_EQ(contract(H(2, {{1}, {2}}), 1, 2), H(1, {}));
  // Edge {3, 4} avoids e = {1, 2}; it moves down with the renumbering.
  EXPECT_EQ(contract(H(4, {{3, 4}, {1}}), 1, 2), H(3, {{2, 3}, {1}}));
  EXPECT_THROW(contract(kH3, 2, 2), std::invalid_argument);
}

TEST(Contract, CommutesWithIdentifyAndCollapseIsQuotient) {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (1u << n)); fam += (n == 4 ? 13 : 1)) {
      std::vector<Edge> edges;
      for (Edge s = 0; s < (Edge{1} << n); ++s) {
        if ((fam >> s) & 1U) edges.push_back(s);
      }
      const Hypergraph h(n, edges);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const Hypergraph he = contract(h, i, j);
          ASSERT_TRUE(is_equivalent(polynomial_of(he), identify(polynomial_of(h), i, j)));
          ASSERT_TRUE(verify_quotient_map(collapse_map(n, i, j), h, he));
        }
      }
    }
  }
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 200; ++rep) {
    const Hypergraph h = random_hypergraph(rng, 5, 5);
    const int i = 1 + static_cast<int>(rng() % 5);
    int j = 1 + static_cast<int>(rng() % 5);
    if (j == i) j = i % 5 + 1;
    ASSERT_TRUE(is_equivalent(polynomial_of(contract(h, i, j)), identify(polynomial_of(h), i, j)));
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(kH3, kH3));
  const Hypergraph shifted = H(4, {{2, 3}, {2, 4}, {3, 4}});
  EXPECT_TRUE(is_isomorphic(support_reduced(shifted), kH3));
  EXPECT_FALSE(is_isomorphic(H(3, {{1, 2}}), H(3, {{1, 2}, {1, 3}})));
}

TEST(Isomorphism, BijectionIsCheckedAndMatchesCanonicalRoute) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Hypergraph a = random_hypergraph(rng, n, 3);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const Hypergraph b = (rep % 2 == 0) ? Hypergraph(n, oracle::permute_edges(edges_of(a), p))
                                        : random_hypergraph(rng, n, 3);
    const auto phi = is_isomorphic(a, b);
    const bool same_canon = canonical_hypergraph(a) == canonical_hypergraph(b);
    ASSERT_EQ(phi.has_value(), same_canon);
    if (phi) ASSERT_EQ(oracle::permute_edges(edges_of(a), *phi), edges_of(b));
    if (rep % 2 == 0) ASSERT_TRUE(phi);
  }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(H(4, {})).size(), 24u);
  EXPECT_EQ(automorphisms(kH3).size(), 6u);
  EXPECT_EQ(automorphisms(fano_plane()).size(), 168u);
  EXPECT_EQ(automorphisms(affine_plane_3()).size(), 432u);
  EXPECT_THROW(automorphisms(Hypergraph(17, {})), std::invalid_argument);
}

TEST(Automorphisms, FanoCountMatchesBruteForce) {
  const auto fano = edges_of(fano_plane());
  std::size_t count = 0;
  for (const auto& p : oracle::permutations(7)) count += oracle::permute_edges(fano, p) == fano;
  EXPECT_EQ(count, 168u);
}

TEST(Automorphisms, FormAGroup) {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 20; ++rep) {
    const Hypergraph h = random_hypergraph(rng, 6, 2);
    const auto group = automorphisms(h);
    const std::set<std::vector<int>> members(group.begin(), group.end());
    std::vector<int> id(6);
    std::iota(id.begin(), id.end(), 1);
    ASSERT_TRUE(members.count(id));
    for (const auto& a : group) {
      std::vector<int> inv(6);
      for (int v = 1; v <= 6; ++v) inv[a[v - 1] - 1] = v;
      ASSERT_TRUE(members.count(inv));
      for (const auto& b : group) {
        std::vector<int> ab(6);
        for (int v = 1; v <= 6; ++v) ab[v - 1] = b[a[v - 1] - 1];
        ASSERT_TRUE(members.count(ab));
      }
    }
  }
}

TEST(TwoSetTransitive, Examples) {
  EXPECT_TRUE(is_2set_transitive(fano_plane()));
  EXPECT_TRUE(is_2set_transitive(kH3));
  EXPECT_FALSE(is_2set_transitive(H(3, {{1, 2}})));
}

TEST(TwoSetTransitive, MatchesPairOrbitsOfFullGroup) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const Hypergraph h = random_hypergraph(rng, 5, rep % 2 ? 2 : 8);
    std::set<std::pair<int, int>> orbit;
    for (const auto& a : automorphisms(h)) {
      orbit.insert(std::minmax(a[0], a[1]));
    }
    ASSERT_EQ(is_2set_transitive(h), orbit.size() == 10u) << format_hypergraph(h);
  }
}

TEST(ContractionClasses, Examples) {
  const auto tri = contraction_classes(kH3);
  ASSERT_EQ(tri.classes.size(), 1u);
  EXPECT_EQ(tri.classes[0].pairs.size(), 3u);

  const auto path = contraction_classes(H(3, {{1, 2}, {2, 3}}));
  ASSERT_EQ(path.classes.size(), 2u);
  EXPECT_EQ(path.classes[0].pairs, (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(path.classes[1].pairs, (std::vector<std::pair<int, int>>{{1, 3}}));

  const auto orand = contraction_classes(hypergraph_of(parse_function("tt:EEE0 arity=4")));
  int top = 0;
  for (const auto& c : orand.classes) top = std::max(top, c.ess);
  int at_top = 0;
  for (const auto& c : orand.classes) at_top += c.ess == top;
  EXPECT_GE(at_top, 2);
  EXPECT_THROW(contraction_classes(H(3, {{1}})), std::invalid_argument);
}

TEST(KeyLemma, Examples) {
  EXPECT_TRUE(is_irreducible_keylemma(kH3));
  EXPECT_TRUE(is_irreducible_keylemma(H(2, {{1, 2}})));
  EXPECT_FALSE(is_irreducible_keylemma(hypergraph_of(parse_function("tt:EEE0 arity=4"))));
  EXPECT_FALSE(is_irreducible_keylemma(H(2, {{1}})));
}

TEST(KeyLemma, TwoSetTransitiveImpliesIrreducibleOnZoo) {
  std::vector<Hypergraph> zoo{fano_plane(), affine_plane_3(), kH3};
  for (int n = 2; n <= 7; ++n) zoo.push_back(complete(n).to_hypergraph());
  for (const auto& h : zoo) {
    ASSERT_EQ(support(h).size(), static_cast<std::size_t>(h.vertex_count()));
    ASSERT_TRUE(is_2set_transitive(h));
    EXPECT_TRUE(is_irreducible_keylemma(h)) << format_hypergraph(h);
  }
}

TEST(EssDrop, Examples) {
  const auto lin = ess_drop_analysis(H(2, {{1}, {2}}), 1, 2);
  EXPECT_TRUE(lin.large_drop);
  EXPECT_TRUE(lin.merged_isolated);
  EXPECT_TRUE(lin.merged_parity_condition);

  const auto maj = ess_drop_analysis(kH3, 1, 2);
  EXPECT_TRUE(maj.large_drop);
  EXPECT_EQ(maj.isolated_others, (std::vector<int>{3}));

  const auto conj = ess_drop_analysis(H(2, {{1, 2}}), 1, 2);
  EXPECT_FALSE(conj.large_drop);
  EXPECT_EQ(conj.ess_before - conj.ess_after, 1);
}

TEST(EssDrop, LargeDropAlwaysExplained) {
  for (std::uint64_t fam = 0; fam < 65536; fam += 5) {
    std::vector<Edge> edges;
    for (Edge s = 0; s < 16; ++s) {
      if ((fam >> s) & 1U) edges.push_back(s);
    }
    const Hypergraph h(4, edges);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        const auto r = ess_drop_analysis(h, i, j);
        ASSERT_EQ(r.large_drop, r.ess_before - r.ess_after >= 2);
        if (r.large_drop) ASSERT_TRUE(r.merged_isolated || !r.isolated_others.empty());
      }
    }
  }
}

TEST(FindQuotientMap, AgreesWithVerifier) {
  EXPECT_TRUE(find_quotient_map(kH3, H(2, {{1}})));
  EXPECT_FALSE(find_quotient_map(H(2, {{1, 2}}), H(2, {{1}, {2}})));
  const auto m = find_quotient_map(kH3, H(1, {{1}}));
  ASSERT_TRUE(m);
  EXPECT_TRUE(verify_quotient_map(*m, kH3, H(1, {{1}})));
}

TEST(CanonicalLabeling, EqualEdgesIffIsomorphic) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Hypergraph a = random_hypergraph(rng, n, 2);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const auto pa = oracle::permute_edges(edges_of(a), p);
    const auto ca = canonical_labeling(n, edges_of(a));
    const auto cb = canonical_labeling(n, pa);
    ASSERT_EQ(ca.edges, cb.edges);
    // order[] really relabels the input onto the canonical edges.
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[ca.order[k]] = k + 1;
    ASSERT_EQ(oracle::permute_edges(edges_of(a), img), ca.edges);
  }
}
