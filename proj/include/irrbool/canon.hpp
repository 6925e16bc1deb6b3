#ifndef IRRBOOL_CANON_HPP
#define IRRBOOL_CANON_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace irrbool {

// Set families on vertices 0..n-1 with edges as bitmasks (bit v = vertex v).
// This is the shared engine behind polynomial canonical forms and the
// isomorphism search.

// Iterated refinement of a vertex coloring by the colors of co-incident
// vertices. Colors are dense ranks 0..c-1; the result only depends on the
// family up to relabeling, and refines the input coloring while keeping the
// relative order of its cells.
std::vector<int> refine_colors(int n, std::span<const std::uint64_t> edges,
                               std::vector<int> colors);

struct CanonicalLabeling {
  // order[k] is the original vertex that receives the new index k
  // (both 0-based, as are the bit positions in `edges`).
  std::vector<int> order;
  // Edges under the new labels, sorted ascending.
  std::vector<std::uint64_t> edges;
};

// Distinguished relabeling of a set family: the lexicographically least
// sorted edge-mask sequence among the relabelings that respect the ordered
// cells produced by refinement and individualization. Vertices in no edge
// are placed last, in increasing original order. Two families get equal
// `edges` iff they are isomorphic.
CanonicalLabeling canonical_labeling(int n,
                                     std::span<const std::uint64_t> edges);

// Applies a relabeling (new_index[v] for each 0-based vertex v) and sorts
// the result.
std::vector<std::uint64_t> relabel_edges(std::span<const std::uint64_t> edges,
                                         std::span<const int> new_index);

}  // namespace irrbool

#endif  // IRRBOOL_CANON_HPP
