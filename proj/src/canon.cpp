#include "irrbool/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace irrbool {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int refine_in_place(int n, std::span<const std::uint64_t> edges,
                    std::vector<int>& col) {
  int ncol = n == 0 ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  std::vector<std::uint64_t> acc(n);
  std::vector<int> idx(n);
  while (ncol < n) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint64_t e : edges) {
      std::uint64_t h = mix(static_cast<std::uint64_t>(std::popcount(e)));
      for (std::uint64_t m = e; m != 0; m &= m - 1) {
        h += mix(static_cast<std::uint64_t>(col[std::countr_zero(m)]) + 1);
      }
      const std::uint64_t contribution = mix(h ^ 0x5bd1e995ULL);
      for (std::uint64_t m = e; m != 0; m &= m - 1) {
        acc[std::countr_zero(m)] += contribution;
      }
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (col[a] != col[b]) return col[a] < col[b];
      return acc[a] < acc[b];
    });
    std::vector<int> next(n);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && (col[idx[k]] != col[idx[k - 1]] ||
                    acc[idx[k]] != acc[idx[k - 1]])) {
        ++rank;
      }
      next[idx[k]] = rank;
    }
    const int fresh = n == 0 ? 0 : rank + 1;
    col.swap(next);
    if (fresh == ncol) break;
    ncol = fresh;
  }
  return ncol;
}

struct Search {
  int n;
  std::span<const std::uint64_t> edges;
  std::uint64_t support;
  bool have_best = false;
  std::vector<std::uint64_t> best;
  std::vector<int> best_pos;
  std::vector<std::uint64_t> scratch;

  void leaf(const std::vector<int>& col) {
    scratch.clear();
    for (std::uint64_t e : edges) {
      std::uint64_t out = 0;
      for (std::uint64_t m = e; m != 0; m &= m - 1) {
        out |= std::uint64_t{1} << col[std::countr_zero(m)];
      }
      scratch.push_back(out);
    }
    std::sort(scratch.begin(), scratch.end());
    if (!have_best || scratch < best) {
      have_best = true;
      best = scratch;
      best_pos = col;
    }
  }

  void descend(std::vector<int> col) {
    refine_in_place(n, edges, col);
    // First cell, in color order, holding two or more support vertices.
    std::vector<int> cell_count(n, 0);
    for (int v = 0; v < n; ++v) {
      if (support >> v & 1U) ++cell_count[col[v]];
    }
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(col);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> child(col);
      for (int u = 0; u < n; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      }
      descend(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> refine_colors(int n, std::span<const std::uint64_t> edges,
                               std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != n) {
    throw std::invalid_argument("refine_colors: one color per vertex");
  }
  // Densify while keeping the order of the given colors.
  std::vector<int> sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& c : colors) {
    c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                         sorted.begin());
  }
  refine_in_place(n, edges, colors);
  return colors;
}

CanonicalLabeling canonical_labeling(int n,
                                     std::span<const std::uint64_t> edges) {
  if (n < 0 || n > 64) {
    throw std::invalid_argument("canonical_labeling supports up to 64 vertices");
  }
  std::uint64_t support = 0;
  for (std::uint64_t e : edges) support |= e;
  const int support_size = std::popcount(support);

  Search search{n, edges, support, false, {}, {}, {}};
  std::vector<int> col(n);
  for (int v = 0; v < n; ++v) col[v] = (support >> v & 1U) ? 0 : 1;
  if (support_size == 0 || support_size == n) {
    std::fill(col.begin(), col.end(), 0);
  }
  search.descend(std::move(col));

  CanonicalLabeling out;
  out.order.assign(n, -1);
  int next_isolated = support_size;
  for (int v = 0; v < n; ++v) {
    if (support >> v & 1U) {
      out.order[search.best_pos[v]] = v;
    } else {
      out.order[next_isolated++] = v;
    }
  }
  out.edges = std::move(search.best);
  return out;
}

std::vector<std::uint64_t> relabel_edges(std::span<const std::uint64_t> edges,
                                         std::span<const int> new_index) {
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (std::uint64_t e : edges) {
    std::uint64_t m = 0;
    for (std::uint64_t r = e; r != 0; r &= r - 1) {
      m |= std::uint64_t{1} << new_index[std::countr_zero(r)];
    }
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace irrbool
