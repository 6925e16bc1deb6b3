#ifndef IRRBOOL_HYPERGRAPH_HPP
#define IRRBOOL_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "irrbool/zhegalkin.hpp"

namespace irrbool {

using Edge = std::uint64_t;  // bit (v-1) is vertex v; 0 is the empty edge

inline constexpr int kMaxHypergraphVertices = 63;
inline constexpr int kMaxAutomorphismVertices = 16;

// Vertices {1..n}; a duplicate-free set of edges, the empty edge allowed.
// Isolated vertices are kept; support reduction is a separate step.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws std::invalid_argument for n outside [1, 63], duplicate edges, or
  // an edge naming a vertex above n.
  Hypergraph(int n, std::vector<Edge> edges);

  static Hypergraph from_lists(int n,
                               const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Edge e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;  // sorted ascending
};

Hypergraph hypergraph_of(const Zhegalkin& p);
Zhegalkin polynomial_of(const Hypergraph& h);

// Union of all edges, ascending.
std::vector<int> support(const Hypergraph& h);

// Induced hypergraph on the support, relabeled 1..|support| in order
// (at least one vertex is kept).
Hypergraph support_reduced(const Hypergraph& h);

// A map from the vertices of one hypergraph to those of another.
struct VertexMap {
  int source_count = 0;
  int target_count = 0;
  std::vector<int> image;  // image[v-1] in [1, target_count]

  static VertexMap identity(int n);
  int operator()(int v) const { return image[v - 1]; }
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

Edge map_edge(const VertexMap& m, Edge e);

// True iff for every E subset of h's vertices, E is an edge of h exactly
// when an odd number of edges of hp map onto E. Throws
// std::invalid_argument when m does not go from hp's vertices to h's.
bool verify_quotient_map(const VertexMap& m, const Hypergraph& hp,
                         const Hypergraph& h);

// Apply `first`, then `second`. Throws std::invalid_argument unless
// first.target_count == second.source_count.
VertexMap compose_quotients(const VertexMap& first, const VertexMap& second);

// The pair contraction H_e for e = {i, j}. The merged vertex takes index
// min(i, j) and vertices above max(i, j) shift down by one. An edge of H_e
// either avoids the merged vertex and is an edge of h disjoint from e, or
// contains it and an odd number of its three possible preimages
// (with i, with j, with both) are edges of h.
Hypergraph contract(const Hypergraph& h, int i, int j);

// The vertex map V -> V_e realizing contract(h, i, j).
VertexMap collapse_map(int n, int i, int j);

// A bijection (image[v-1] = vertex of h2) carrying edges(h1) exactly onto
// edges(h2), or nothing.
std::optional<std::vector<int>> is_isomorphic(const Hypergraph& h1,
                                              const Hypergraph& h2);

// Every edge-preserving vertex permutation. Throws std::invalid_argument
// above kMaxAutomorphismVertices vertices.
std::vector<std::vector<int>> automorphisms(const Hypergraph& h);

// Whether Aut(h) maps any unordered vertex pair onto any other.
bool is_2set_transitive(const Hypergraph& h);

// The canonical representative of h's isomorphism class on the same vertex
// count (support first, isolated vertices last).
Hypergraph canonical_hypergraph(const Hypergraph& h);

struct ContractionClass {
  std::vector<std::pair<int, int>> pairs;  // ascending
  Zhegalkin canon;                         // canonical form of f_{H_e}
  int ess = 0;
};

struct ContractionClassPartition {
  std::vector<int> support;
  // Ordered by the smallest pair in each class.
  std::vector<ContractionClass> classes;
};

// Groups the pairs of support vertices by isomorphism of their contractions.
// Throws std::invalid_argument when the support has fewer than two
// vertices.
ContractionClassPartition contraction_classes(const Hypergraph& h);

// |support| >= 2 and some contraction class C strictly out-ranks every pair
// outside it in essential arity of the contraction.
bool is_irreducible_keylemma(const Hypergraph& h);

// How contracting e drops essential arity by more than one.
struct EssDropReport {
  int ess_before = 0;
  int ess_after = 0;
  bool large_drop = false;  // ess_after < ess_before - 1
  // Merged vertex in no edge of H_e, and the parity criterion for it: for
  // every F disjoint from e, an even number of F+{i}, F+{j}, F+{i,j} are
  // edges.
  bool merged_isolated = false;
  bool merged_parity_condition = false;
  // Other support vertices of h (original labels) in no edge of H_e.
  std::vector<int> isolated_others;
  // Vertices (original labels, outside e) meeting the set condition: every
  // edge through the vertex meets e, and has a partner edge through the
  // vertex with the same part outside e.
  std::vector<int> set_condition_vertices;
};

EssDropReport ess_drop_analysis(const Hypergraph& h, int i, int j);

}  // namespace irrbool

#endif  // IRRBOOL_HYPERGRAPH_HPP
