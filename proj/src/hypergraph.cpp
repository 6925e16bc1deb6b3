#include "irrbool/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "irrbool/canon.hpp"
#include "irrbool/minor.hpp"

namespace irrbool {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxHypergraphVertices) {
    throw std::invalid_argument("hypergraph vertex count must be in [1, 63], got " +
                                std::to_string(n));
  }
  const Edge allowed = (Edge{1} << n) - 1;
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if ((edges_[k] & ~allowed) != 0) {
      throw std::invalid_argument("edge names a vertex above " +
                                  std::to_string(n));
    }
    if (k > 0 && edges_[k] == edges_[k - 1]) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

Hypergraph Hypergraph::from_lists(int n,
                                  const std::vector<std::vector<int>>& edges) {
  std::vector<Edge> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    for (int v : e) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("edge names vertex " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
    }
    masks.push_back(monomial_of(e));
  }
  return Hypergraph(n, std::move(masks));
}

bool Hypergraph::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph hypergraph_of(const Zhegalkin& p) {
  return Hypergraph(p.arity(),
                    std::vector<Edge>(p.monomials().begin(), p.monomials().end()));
}

Zhegalkin polynomial_of(const Hypergraph& h) {
  return make_reduced(h.vertex_count(),
                      std::vector<Monomial>(h.edges().begin(), h.edges().end()));
}

std::vector<int> support(const Hypergraph& h) {
  Edge s = 0;
  for (Edge e : h.edges()) s |= e;
  return variables_of(s);
}

Hypergraph support_reduced(const Hypergraph& h) {
  return hypergraph_of(support_reduced(polynomial_of(h)));
}

VertexMap VertexMap::identity(int n) {
  VertexMap m{n, n, std::vector<int>(n)};
  for (int v = 1; v <= n; ++v) m.image[v - 1] = v;
  return m;
}

Edge map_edge(const VertexMap& m, Edge e) {
  Edge out = 0;
  for (; e != 0; e &= e - 1) out |= variable_bit(m.image[std::countr_zero(e)]);
  return out;
}

static void check_map(const VertexMap& m) {
  if (static_cast<int>(m.image.size()) != m.source_count) {
    throw std::invalid_argument("vertex map must assign every source vertex");
  }
  for (int t : m.image) {
    if (t < 1 || t > m.target_count) {
      throw std::invalid_argument("vertex map image out of range");
    }
  }
}

bool verify_quotient_map(const VertexMap& m, const Hypergraph& hp,
                         const Hypergraph& h) {
  check_map(m);
  if (m.source_count != hp.vertex_count() ||
      m.target_count != h.vertex_count()) {
    throw std::invalid_argument("vertex map does not match the hypergraphs");
  }
  std::vector<Edge> images;
  images.reserve(hp.edge_count());
  for (Edge e : hp.edges()) images.push_back(map_edge(m, e));
  reduce_gf2(images);  // sets hit an odd number of times
  return std::equal(images.begin(), images.end(), h.edges().begin(),
                    h.edges().end());
}

VertexMap compose_quotients(const VertexMap& first, const VertexMap& second) {
  check_map(first);
  check_map(second);
  if (first.target_count != second.source_count) {
    throw std::invalid_argument("cannot compose: range mismatch");
  }
  VertexMap out{first.source_count, second.target_count,
                std::vector<int>(first.source_count)};
  for (int v = 1; v <= first.source_count; ++v) {
    out.image[v - 1] = second(first(v));
  }
  return out;
}

static void check_pair(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("contraction needs i != j");
  if (i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("contraction pair out of range");
  }
  if (n < 2) throw std::invalid_argument("contraction needs two vertices");
}

VertexMap collapse_map(int n, int i, int j) {
  check_pair(n, i, j);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  VertexMap m{n, n - 1, std::vector<int>(n)};
  for (int v = 1; v <= n; ++v) {
    m.image[v - 1] = (v == hi) ? lo : (v > hi ? v - 1 : v);
  }
  return m;
}

Hypergraph contract(const Hypergraph& h, int i, int j) {
  const int n = h.vertex_count();
  check_pair(n, i, j);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  const Edge pair = variable_bit(i) | variable_bit(j);

  // Old label -> new label for vertices outside e; the merged vertex is lo.
  auto relabel = [&](Edge e) {
    Edge out = 0;
    for (; e != 0; e &= e - 1) {
      const int v = std::countr_zero(e) + 1;
      out |= variable_bit(v > hi ? v - 1 : v);
    }
    return out;
  };
  const Edge merged = variable_bit(lo);

  std::vector<Edge> out;
  std::vector<Edge> seen_bases;
  for (Edge e : h.edges()) {
    if ((e & pair) == 0) {
      out.push_back(relabel(e));
      continue;
    }
    const Edge base = e & ~pair;
    if (std::find(seen_bases.begin(), seen_bases.end(), base) !=
        seen_bases.end()) {
      continue;
    }
    seen_bases.push_back(base);
    const int count = int{h.has_edge(base | pair)} +
                      int{h.has_edge(base | variable_bit(i))} +
                      int{h.has_edge(base | variable_bit(j))};
    if (count % 2 == 1) out.push_back(relabel(base) | merged);
  }
  return Hypergraph(n - 1, std::move(out));
}

namespace {

// Backtracking search for edge-preserving bijections h1 -> h2. Candidates
// are restricted to vertices of equal refined color.
class IsoSearch {
 public:
  IsoSearch(const Hypergraph& h1, const Hypergraph& h2)
      : h1_(h1), h2_(h2), n_(h1.vertex_count()) {}

  // Calls `found` for each isomorphism extending `fixed` (pairs of 1-based
  // vertices); stops early when `found` returns false.
  void run(const std::vector<std::pair<int, int>>& fixed,
           const std::function<bool(const std::vector<int>&)>& found) {
    if (!compatible()) return;
    found_ = &found;
    map_.assign(n_, -1);
    inverse_.assign(n_, -1);
    for (auto [a, b] : fixed) {
      const int u = a - 1;
      const int w = b - 1;
      if (col1_[u] != col2_[w] || inverse_[w] >= 0 || map_[u] >= 0) return;
      if (!assign(u, w)) return;
    }
    order_.clear();
    for (int v = 0; v < n_; ++v) {
      if (map_[v] < 0) order_.push_back(v);
    }
    std::vector<int> cell_size(n_, 0);
    for (int v = 0; v < n_; ++v) ++cell_size[col1_[v]];
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return cell_size[col1_[a]] < cell_size[col1_[b]];
    });
    stopped_ = false;
    descend(0);
  }

 private:
  bool compatible() {
    if (h1_.vertex_count() != h2_.vertex_count() ||
        h1_.edge_count() != h2_.edge_count()) {
      return false;
    }
    std::vector<int> sizes1;
    std::vector<int> sizes2;
    for (Edge e : h1_.edges()) sizes1.push_back(std::popcount(e));
    for (Edge e : h2_.edges()) sizes2.push_back(std::popcount(e));
    std::sort(sizes1.begin(), sizes1.end());
    std::sort(sizes2.begin(), sizes2.end());
    if (sizes1 != sizes2) return false;
    col1_ = refine_colors(n_, h1_.edges(), std::vector<int>(n_, 0));
    col2_ = refine_colors(n_, h2_.edges(), std::vector<int>(n_, 0));
    std::vector<int> c1(col1_);
    std::vector<int> c2(col2_);
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) return false;
    inc1_.assign(n_, {});
    inc2_.assign(n_, {});
    for (Edge e : h1_.edges()) {
      for (Edge r = e; r != 0; r &= r - 1) inc1_[std::countr_zero(r)].push_back(e);
    }
    for (Edge e : h2_.edges()) {
      for (Edge r = e; r != 0; r &= r - 1) inc2_[std::countr_zero(r)].push_back(e);
    }
    return true;
  }

  bool assign(int u, int w) {
    map_[u] = w;
    inverse_[w] = u;
    assigned1_ |= Edge{1} << u;
    assigned2_ |= Edge{1} << w;
    for (Edge e : inc1_[u]) {
      if ((e & ~assigned1_) == 0 && !h2_.has_edge(image(e, map_))) return false;
    }
    for (Edge e : inc2_[w]) {
      if ((e & ~assigned2_) == 0 && !h1_.has_edge(image(e, inverse_))) {
        return false;
      }
    }
    return true;
  }

  void unassign(int u, int w) {
    map_[u] = -1;
    inverse_[w] = -1;
    assigned1_ &= ~(Edge{1} << u);
    assigned2_ &= ~(Edge{1} << w);
  }

  static Edge image(Edge e, const std::vector<int>& m) {
    Edge out = 0;
    for (; e != 0; e &= e - 1) out |= Edge{1} << m[std::countr_zero(e)];
    return out;
  }

  void descend(std::size_t depth) {
    if (stopped_) return;
    if (depth == order_.size()) {
      std::vector<int> result(n_);
      for (int v = 0; v < n_; ++v) result[v] = map_[v] + 1;
      if (!(*found_)(result)) stopped_ = true;
      return;
    }
    const int u = order_[depth];
    for (int w = 0; w < n_ && !stopped_; ++w) {
      if (inverse_[w] >= 0 || col2_[w] != col1_[u]) continue;
      if (assign(u, w)) descend(depth + 1);
      unassign(u, w);
    }
  }

  const Hypergraph& h1_;
  const Hypergraph& h2_;
  int n_;
  std::vector<int> col1_;
  std::vector<int> col2_;
  std::vector<std::vector<Edge>> inc1_;
  std::vector<std::vector<Edge>> inc2_;
  std::vector<int> map_;
  std::vector<int> inverse_;
  std::vector<int> order_;
  Edge assigned1_ = 0;
  Edge assigned2_ = 0;
  bool stopped_ = false;
  const std::function<bool(const std::vector<int>&)>* found_ = nullptr;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Hypergraph& h1,
                                              const Hypergraph& h2) {
  std::optional<std::vector<int>> out;
  IsoSearch(h1, h2).run({}, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

std::vector<std::vector<int>> automorphisms(const Hypergraph& h) {
  if (h.vertex_count() > kMaxAutomorphismVertices) {
    throw std::invalid_argument("automorphisms: more than " +
                                std::to_string(kMaxAutomorphismVertices) +
                                " vertices");
  }
  std::vector<std::vector<int>> out;
  IsoSearch(h, h).run({}, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_2set_transitive(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxAutomorphismVertices) {
    throw std::invalid_argument("is_2set_transitive: more than " +
                                std::to_string(kMaxAutomorphismVertices) +
                                " vertices");
  }
  if (n < 2) return false;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      bool hit = false;
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        IsoSearch(h, h).run({{1, x}, {2, y}}, [&](const std::vector<int>&) {
          hit = true;
          return false;
        });
        if (hit) break;
      }
      if (!hit) return false;
    }
  }
  return true;
}

Hypergraph canonical_hypergraph(const Hypergraph& h) {
  CanonicalLabeling lab = canonical_labeling(h.vertex_count(), h.edges());
  return Hypergraph(h.vertex_count(), std::move(lab.edges));
}

ContractionClassPartition contraction_classes(const Hypergraph& h) {
  ContractionClassPartition out;
  out.support = support(h);
  if (out.support.size() < 2) {
    throw std::invalid_argument("contraction_classes: support has fewer than "
                                "two vertices");
  }
  std::map<Zhegalkin, std::size_t> index;
  for (std::size_t a = 0; a < out.support.size(); ++a) {
    for (std::size_t b = a + 1; b < out.support.size(); ++b) {
      const int i = out.support[a];
      const int j = out.support[b];
      Zhegalkin canon = canonical_form(polynomial_of(contract(h, i, j)));
      auto [it, inserted] = index.try_emplace(canon, out.classes.size());
      if (inserted) {
        const int ess = essential_arity(canon);
        out.classes.push_back({{}, std::move(canon), ess});
      }
      out.classes[it->second].pairs.emplace_back(i, j);
    }
  }
  return out;
}

bool is_irreducible_keylemma(const Hypergraph& h) {
  if (support(h).size() < 2) return false;
  const ContractionClassPartition p = contraction_classes(h);
  for (const ContractionClass& c : p.classes) {
    bool dominant = true;
    for (const ContractionClass& other : p.classes) {
      if (&other != &c && other.ess >= c.ess) {
        dominant = false;
        break;
      }
    }
    if (dominant) return true;
  }
  return false;
}

EssDropReport ess_drop_analysis(const Hypergraph& h, int i, int j) {
  const int n = h.vertex_count();
  check_pair(n, i, j);
  const Hypergraph he = contract(h, i, j);
  const VertexMap collapse = collapse_map(n, i, j);
  const Edge pair = variable_bit(i) | variable_bit(j);

  EssDropReport r;
  r.ess_before = static_cast<int>(support(h).size());
  r.ess_after = static_cast<int>(support(he).size());
  r.large_drop = r.ess_after < r.ess_before - 1;

  Edge after_support = 0;
  for (Edge e : he.edges()) after_support |= e;
  r.merged_isolated = (after_support & variable_bit(std::min(i, j))) == 0;

  r.merged_parity_condition = true;
  for (Edge e : h.edges()) {
    if ((e & pair) == 0) continue;
    const Edge rest = e & ~pair;
    const int count = int{h.has_edge(rest | variable_bit(i))} +
                      int{h.has_edge(rest | variable_bit(j))} +
                      int{h.has_edge(rest | pair)};
    if (count % 2 == 1) {
      r.merged_parity_condition = false;
      break;
    }
  }

  for (int v : support(h)) {
    if (v == i || v == j) continue;
    if ((after_support & variable_bit(collapse(v))) == 0) {
      r.isolated_others.push_back(v);
    }
    bool holds = true;
    for (Edge e : h.edges()) {
      if ((e & variable_bit(v)) == 0) continue;
      if ((e & pair) == 0) {
        holds = false;
        break;
      }
      bool partner = false;
      for (Edge other : h.edges()) {
        if (other != e && (other & variable_bit(v)) != 0 &&
            (other & ~pair) == (e & ~pair)) {
          partner = true;
          break;
        }
      }
      if (!partner) {
        holds = false;
        break;
      }
    }
    if (holds) r.set_condition_vertices.push_back(v);
  }
  return r;
}

}  // namespace irrbool
