#include "irrbool/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "irrbool/minor.hpp"

namespace irrbool {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_positive(int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + " needs n >= 1");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxHypergraphVertices) {
    throw std::invalid_argument("graph vertex count must be in [0, 63]");
  }
}

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("graphs have no loops");
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  adj_[i - 1] |= std::uint64_t{1} << (j - 1);
  adj_[j - 1] |= std::uint64_t{1} << (i - 1);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::from_hypergraph(const Hypergraph& h) {
  Graph g(h.vertex_count());
  for (Edge e : h.edges()) {
    if (std::popcount(e) != 2) {
      throw std::invalid_argument("graph edges must have exactly two vertices");
    }
    const int i = std::countr_zero(e) + 1;
    const int j = 63 - std::countl_zero(e) + 1;
    g.add_edge(i, j);
  }
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t a : adj_) total += std::popcount(a);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Hypergraph Graph::to_hypergraph() const {
  std::vector<Edge> masks;
  for (auto [i, j] : edges()) masks.push_back(variable_bit(i) | variable_bit(j));
  return Hypergraph(std::max(n_, 1), std::move(masks));
}

Graph complete(int n) {
  require_positive(n, "complete");
  Graph g(n);
  return complement(g);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph::from_edges(n, edges);
}

Graph empty(int n) {
  require_positive(n, "empty");
  return Graph(n);
}

Graph path(int n) {
  require_positive(n, "path");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.vertex_count(); ++i) {
    for (int j = i + 1; j <= g.vertex_count(); ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.vertex_count();
  auto edges = g1.edges();
  for (auto [i, j] : g2.edges()) edges.emplace_back(i + shift, j + shift);
  return Graph::from_edges(g1.vertex_count() + g2.vertex_count(), edges);
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  const int shift = g1.vertex_count();
  auto edges = disjoint_union(g1, g2).edges();
  for (int i = 1; i <= g1.vertex_count(); ++i) {
    for (int j = 1; j <= g2.vertex_count(); ++j) edges.emplace_back(i, j + shift);
  }
  return Graph::from_edges(g1.vertex_count() + g2.vertex_count(), edges);
}

Graph reduce_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  std::vector<int> index(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k + 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(index[i], index[j]);
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t unseen = low_mask(g.vertex_count());
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= g.neighbors(std::countr_zero(f) + 1);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.push_back(variables_of(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

AiDecomposition ai_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  AiDecomposition out;
  std::vector<int> block(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (block[v] >= 0) continue;
    block[v] = static_cast<int>(out.components.size());
    out.components.push_back({v});
    for (int u = v + 1; u <= n; ++u) {
      // Nonadjacent vertices with equal neighborhoods.
      if (block[u] < 0 && !g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v)) {
        block[u] = block[v];
        out.components.back().push_back(u);
      }
    }
  }
  std::vector<std::pair<int, int>> quotient_edges;
  for (std::size_t a = 0; a < out.components.size(); ++a) {
    for (std::size_t b = a + 1; b < out.components.size(); ++b) {
      if (g.adjacent(out.components[a][0], out.components[b][0])) {
        quotient_edges.emplace_back(a + 1, b + 1);
      }
    }
  }
  out.quotient = Graph::from_edges(static_cast<int>(out.components.size()),
                                   quotient_edges);
  return out;
}

bool is_ai_prime(const Graph& g) {
  return static_cast<int>(ai_decomposition(g).components.size()) ==
         g.vertex_count();
}

Graph lexicographic_sum(const Graph& quotient,
                        const std::vector<int>& block_sizes) {
  if (static_cast<int>(block_sizes.size()) != quotient.vertex_count()) {
    throw std::invalid_argument("one block size per quotient vertex");
  }
  std::vector<int> first(block_sizes.size() + 1, 1);
  for (std::size_t k = 0; k < block_sizes.size(); ++k) {
    if (block_sizes[k] < 1) throw std::invalid_argument("blocks are nonempty");
    first[k + 1] = first[k] + block_sizes[k];
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : quotient.edges()) {
    for (int u = first[a - 1]; u < first[a]; ++u) {
      for (int w = first[b - 1]; w < first[b]; ++w) edges.emplace_back(u, w);
    }
  }
  return Graph::from_edges(first.back() - 1, edges);
}

bool satisfies_property_p(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t degree_two = 0;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) == 2) degree_two |= variable_bit(v);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (g.adjacent(a, b)) continue;
      if ((g.neighbors(a) & g.neighbors(b) & degree_two) == 0) return false;
    }
  }
  return true;
}

static bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

static bool is_two_regular_connected(const Graph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

PropertyPClass classify_property_p(const Graph& g) {
  if (!satisfies_property_p(g)) return {PropertyPTag::NotSatisfied, 0};
  const int n = g.vertex_count();
  if (n >= 2 && is_complete(g)) return {PropertyPTag::Complete, n};
  if (n == 5 && is_two_regular_connected(g)) return {PropertyPTag::Cycle5, 0};
  if (n == 4 && is_two_regular_connected(g)) return {PropertyPTag::Cycle4, 0};
  if (n == 3 && g.edge_count() == 2) return {PropertyPTag::Path3, 0};
  return {PropertyPTag::Unclassified, 0};
}

std::string describe(const JIGraphClass& c) {
  const auto a = std::to_string(c.a);
  const auto b = std::to_string(c.b);
  switch (c.tag) {
    case JITag::DisjointTriangles:
      return "DisjointTriangles(" + a + "): disjoint union of " + a +
             " triangles";
    case JITag::Cycle5: return "C5: the 5-cycle";
    case JITag::K2JoinEmpty:
      return "K2JoinEmpty(" + a + "): K_2 joined with " + a +
             " independent vertices";
    case JITag::Complete: return "Complete(" + a + "): K_" + a;
    case JITag::EmptyJoinEmpty:
      return "EmptyJoinEmpty(" + a + "," + b + "): complete bipartite K_{" + a +
             "," + b + "}";
    case JITag::BalancedMultipartite:
      return "BalancedMultipartite(" + a + "," + b + "): join of " + a +
             " independent sets of size " + b;
    case JITag::NotIrreducible: return "NotIrreducible";
  }
  return "?";
}

JIGraphClass classify_join_irreducible(const Graph& g) {
  const Graph r = reduce_isolated(g);
  const int n = r.vertex_count();
  if (n == 0) return {};
  const auto components = connected_components(r);
  if (components.size() > 1) {
    for (const auto& comp : components) {
      if (comp.size() != 3) return {};
      for (int v : comp) {
        if (r.degree(v) != 2) return {};
      }
    }
    return {JITag::DisjointTriangles, static_cast<int>(components.size()), 0};
  }
  if (n == 5 && is_two_regular_connected(r)) return {JITag::Cycle5, 0, 0};

  // Complete multipartite iff the complement's components are independent
  // in r; they are then the parts.
  const auto parts = connected_components(complement(r));
  std::vector<int> sizes;
  for (const auto& part : parts) {
    for (std::size_t x = 0; x < part.size(); ++x) {
      for (std::size_t y = x + 1; y < part.size(); ++y) {
        if (r.adjacent(part[x], part[y])) return {};
      }
    }
    sizes.push_back(static_cast<int>(part.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  const int count = static_cast<int>(sizes.size());
  if (count < 2) return {};
  if (sizes.back() == 1) return {JITag::Complete, count, 0};
  if (count == 2 && sizes[0] < sizes[1]) {
    return {JITag::EmptyJoinEmpty, sizes[0], sizes[1]};
  }
  if (count == 3 && sizes[0] == 1 && sizes[1] == 1) {
    return {JITag::K2JoinEmpty, sizes[2], 0};
  }
  if (sizes.front() == sizes.back()) {
    return {JITag::BalancedMultipartite, count, sizes[0]};
  }
  return {};
}

Graph family_representative(const JIGraphClass& c) {
  auto bad = [] { throw std::invalid_argument("parameters outside the family"); };
  switch (c.tag) {
    case JITag::DisjointTriangles: {
      if (c.a < 2) bad();
      Graph g = complete(3);
      for (int k = 1; k < c.a; ++k) g = disjoint_union(g, complete(3));
      return g;
    }
    case JITag::Cycle5: return cycle(5);
    case JITag::K2JoinEmpty:
      if (c.a < 2) bad();
      return graph_join(complete(2), empty(c.a));
    case JITag::Complete:
      if (c.a < 2) bad();
      return complete(c.a);
    case JITag::EmptyJoinEmpty:
      if (c.a < 1 || c.a >= c.b) bad();
      return graph_join(empty(c.a), empty(c.b));
    case JITag::BalancedMultipartite: {
      if (c.a < 2 || c.b < 2) bad();
      Graph g = empty(c.b);
      for (int k = 1; k < c.a; ++k) g = graph_join(g, empty(c.b));
      return g;
    }
    case JITag::NotIrreducible: break;
  }
  throw std::invalid_argument("NotIrreducible has no representative");
}

bool is_join_irreducible_generic(const Graph& g) {
  return is_irreducible_direct(polynomial_of(g.to_hypergraph())).has_value();
}

std::vector<int> isolated_after_contraction(const Graph& g, int i, int j) {
  const Hypergraph he = contract(g.to_hypergraph(), i, j);
  Edge covered = 0;
  for (Edge e : he.edges()) covered |= e;
  std::vector<int> out;
  for (int v = 1; v <= he.vertex_count(); ++v) {
    if ((covered & variable_bit(v)) == 0) out.push_back(v);
  }
  return out;
}

bool lemma_aux_check(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("lemma_aux_check needs a connected graph");
  }
  const int n = g.vertex_count();
  bool nonedge_clean = false;
  bool edge_clean = false;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool clean = isolated_after_contraction(g, i, j).empty();
      if (!clean) continue;
      (g.adjacent(i, j) ? edge_clean : nonedge_clean) = true;
    }
  }
  return !nonedge_clean || edge_clean;
}

}  // namespace irrbool
