#ifndef IRRBOOL_GRAPH_HPP
#define IRRBOOL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irrbool/hypergraph.hpp"

namespace irrbool {

// Simple undirected graph on vertices {1..n}, 0 <= n <= 63, stored as
// neighbor bitmasks (bit v-1 is vertex v). No loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Throws std::invalid_argument unless every edge has exactly two vertices.
  static Graph from_hypergraph(const Hypergraph& h);

  // Edge set given as a bitmask over the pairs (1,2), (1,3), ..., (1,n),
  // (2,3), ... in that order; used by exhaustive sweeps.
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int vertex_count() const { return n_; }
  bool adjacent(int i, int j) const { return (adj_[i - 1] >> (j - 1)) & 1U; }
  std::uint64_t neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  // The associated hypergraph; a graph without vertices becomes a single
  // isolated vertex so that the function stays well-defined.
  Hypergraph to_hypergraph() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edge(int i, int j);

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph complete(int n);
Graph cycle(int n);
Graph empty(int n);
Graph path(int n);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph graph_join(const Graph& g1, const Graph& g2);

// Deletes degree-0 vertices and renumbers the rest in order.
Graph reduce_isolated(const Graph& g);

bool is_connected(const Graph& g);
// Vertex sets of the connected components, each ascending, ordered by
// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct AiDecomposition {
  // ai-components (maximal autonomous independent sets), ordered by
  // smallest vertex; each ascending.
  std::vector<std::vector<int>> components;
  // quotient vertex k+1 stands for components[k].
  Graph quotient;
};

// Components are the classes of "nonadjacent with equal neighborhoods".
AiDecomposition ai_decomposition(const Graph& g);
bool is_ai_prime(const Graph& g);

// Replaces each vertex k of `quotient` by an independent set of
// block_sizes[k-1] vertices; blocks are numbered consecutively.
Graph lexicographic_sum(const Graph& quotient, const std::vector<int>& block_sizes);

// Every nonedge {a, b} has a common neighbor of degree two.
bool satisfies_property_p(const Graph& g);

enum class PropertyPTag { NotSatisfied, Complete, Cycle5, Cycle4, Path3, Unclassified };

struct PropertyPClass {
  PropertyPTag tag = PropertyPTag::NotSatisfied;
  int n = 0;  // vertex count for Complete
};

// Which graph shape explains property (P); Unclassified flags a graph that
// satisfies (P) yet matches none of K_n (n >= 2), C_5, C_4, the 3-vertex
// path. The single-vertex graph lands here vacuously.
PropertyPClass classify_property_p(const Graph& g);

enum class JITag {
  DisjointTriangles,     // a = number of triangles (>= 2)
  Cycle5,
  K2JoinEmpty,           // a = m (>= 2)
  Complete,              // a = n (>= 2)
  EmptyJoinEmpty,        // a = n, b = m, 1 <= n < m
  BalancedMultipartite,  // a = r parts, b = n per part, r, n >= 2
  NotIrreducible,
};

struct JIGraphClass {
  JITag tag = JITag::NotIrreducible;
  int a = 0;
  int b = 0;
  friend bool operator==(const JIGraphClass&, const JIGraphClass&) = default;
};

std::string describe(const JIGraphClass& c);

// Structural recognition of the join-irreducible graph families after
// removing isolated vertices. Complete multipartite shapes are found from
// the components of the complement.
JIGraphClass classify_join_irreducible(const Graph& g);

// Builds a representative of a family (isolated-free); throws for
// NotIrreducible or parameters outside the family's side conditions.
Graph family_representative(const JIGraphClass& c);

// Irreducibility of the associated Boolean function by the direct test.
bool is_join_irreducible_generic(const Graph& g);

// For connected g: if contracting some nonedge leaves no isolated vertex,
// then so does contracting some edge. Throws std::invalid_argument when g
// is disconnected or has no vertices.
bool lemma_aux_check(const Graph& g);

// Vertices of V_e left in no edge after contracting {i, j}.
std::vector<int> isolated_after_contraction(const Graph& g, int i, int j);

}  // namespace irrbool

#endif  // IRRBOOL_GRAPH_HPP
