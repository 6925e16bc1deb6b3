#include "irrbool/designs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "irrbool/minor.hpp"

namespace irrbool {

std::optional<DesignParams> design_parameters(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (h.edge_count() == 0 || n < 2) return std::nullopt;
  const int k = std::popcount(h.edges().front());
  for (Edge e : h.edges()) {
    if (std::popcount(e) != k) return std::nullopt;
  }
  int lambda = -1;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const Edge pair = variable_bit(a) | variable_bit(b);
      int count = 0;
      for (Edge e : h.edges()) count += (e & pair) == pair;
      if (lambda < 0) lambda = count;
      if (count != lambda) return std::nullopt;
    }
  }
  return DesignParams{n, k, lambda};
}

bool is_steiner(const Hypergraph& h) {
  const auto p = design_parameters(h);
  return p && p->lambda == 1;
}

bool is_steiner_triple(const Hypergraph& h) {
  const auto p = design_parameters(h);
  return p && p->lambda == 1 && p->k == 3;
}

Hypergraph delete_pair(const Hypergraph& h, int i, int j) {
  const int n = h.vertex_count();
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("delete_pair needs two distinct vertices");
  }
  if (n < 3) throw std::invalid_argument("delete_pair needs three vertices");
  const Edge pair = variable_bit(i) | variable_bit(j);
  std::vector<int> index(n + 1, 0);
  for (int v = 1, next = 1; v <= n; ++v) {
    if (v != i && v != j) index[v] = next++;
  }
  std::vector<Edge> kept;
  for (Edge e : h.edges()) {
    if ((e & pair) != 0) continue;
    Edge m = 0;
    for (Edge r = e; r != 0; r &= r - 1) {
      m |= variable_bit(index[std::countr_zero(r) + 1]);
    }
    kept.push_back(m);
  }
  return Hypergraph(n - 2, std::move(kept));
}

bool is_minus2_monomorphic(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw std::invalid_argument("-2-monomorphy needs two vertices");
  if (n == 2) return true;
  std::optional<Hypergraph> first;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Hypergraph canon = canonical_hypergraph(delete_pair(h, a, b));
      if (!first) {
        first = std::move(canon);
      } else if (canon != *first) {
        return false;
      }
    }
  }
  return true;
}

SteinerReport steiner_report(const Hypergraph& h, bool run_direct) {
  const auto params = design_parameters(h);
  if (!params || params->lambda != 1) {
    throw std::invalid_argument("steiner_report needs a Steiner system");
  }
  SteinerReport r;
  r.params = *params;
  // Every point of a Steiner system lies on a block, so the support is V.
  const ContractionClassPartition classes = contraction_classes(h);
  r.contractions_isomorphic = classes.classes.size() == 1;
  r.irreducible = is_irreducible_keylemma(h);
  if (run_direct) {
    r.irreducible_direct = is_irreducible_direct(polynomial_of(h)).has_value();
  }
  r.minus2_monomorphic = is_minus2_monomorphic(h);
  if (h.vertex_count() <= kMaxAutomorphismVertices) {
    r.two_set_transitive = is_2set_transitive(h);
  }
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  if (r.irreducible != r.contractions_isomorphic) {
    r.findings.push_back("irreducible=" + flag(r.irreducible) +
                         " but contractions_isomorphic=" +
                         flag(r.contractions_isomorphic));
  }
  if (r.contractions_isomorphic != r.minus2_monomorphic) {
    r.findings.push_back("contractions_isomorphic=" +
                         flag(r.contractions_isomorphic) +
                         " but minus2_monomorphic=" +
                         flag(r.minus2_monomorphic));
  }
  if (r.irreducible_direct && *r.irreducible_direct != r.irreducible) {
    r.findings.push_back("direct irreducibility=" + flag(*r.irreducible_direct) +
                         " but contraction criterion=" + flag(r.irreducible));
  }
  if (r.two_set_transitive && *r.two_set_transitive &&
      !r.contractions_isomorphic) {
    r.findings.push_back("2-set transitive but contractions not isomorphic");
  }
  return r;
}

Hypergraph fano_plane() {
  return Hypergraph::from_lists(7, {{1, 2, 3},
                                    {1, 4, 5},
                                    {1, 6, 7},
                                    {2, 4, 6},
                                    {2, 5, 7},
                                    {3, 4, 7},
                                    {3, 5, 6}});
}

Hypergraph affine_plane_3() {
  // Point (x, y) in Z_3^2 is vertex 3x + y + 1.
  auto point = [](int x, int y) { return 3 * (x % 3) + (y % 3) + 1; };
  std::vector<std::vector<int>> lines;
  for (int c = 0; c < 3; ++c) lines.push_back({point(c, 0), point(c, 1), point(c, 2)});
  for (int slope = 0; slope < 3; ++slope) {
    for (int b = 0; b < 3; ++b) {
      std::vector<int> line;
      for (int x = 0; x < 3; ++x) line.push_back(point(x, slope * x + b));
      lines.push_back(line);
    }
  }
  return Hypergraph::from_lists(9, lines);
}

Hypergraph cyclic_sts13() {
  const std::vector<std::vector<int>> base{{1, 2, 5}, {1, 3, 8}};
  std::vector<std::vector<int>> blocks;
  for (int shift = 0; shift < 13; ++shift) {
    for (const auto& b : base) {
      std::vector<int> block;
      for (int v : b) block.push_back((v - 1 + shift) % 13 + 1);
      blocks.push_back(block);
    }
  }
  return Hypergraph::from_lists(13, blocks);
}

std::vector<NamedDesign> builtin_instances() {
  return {{"fano", fano_plane()},
          {"ag23", affine_plane_3()},
          {"sts13", cyclic_sts13()}};
}

}  // namespace irrbool
