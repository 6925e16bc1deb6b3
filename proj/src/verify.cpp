#include "irrbool/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "irrbool/canon.hpp"
#include "irrbool/designs.hpp"
#include "irrbool/graph.hpp"
#include "irrbool/minor.hpp"
#include "irrbool/parallel.hpp"
#include "irrbool/poset.hpp"
#include "irrbool/text_format.hpp"
#include "irrbool/truth_table.hpp"

namespace irrbool {

namespace {

constexpr std::size_t kShards = 64;

// Hypergraph whose edges are the subsets s of {1..n} with bit s of family set.
Hypergraph hypergraph_from_family(int n, std::uint64_t family) {
  std::vector<Edge> edges;
  for (Edge s = 0; s < (Edge{1} << n); ++s) {
    if ((family >> s) & 1U) edges.push_back(s);
  }
  return Hypergraph(n, std::move(edges));
}

std::uint64_t family_of(const Hypergraph& h) {
  std::uint64_t family = 0;
  for (Edge e : h.edges()) family |= std::uint64_t{1} << e;
  return family;
}

std::string pair_text(const Hypergraph& a, const Hypergraph& b) {
  return format_hypergraph(a) + " / " + format_hypergraph(b);
}

// Sweeps [0, total) in kShards contiguous shards and merges in shard order.
template <class Check>
SweepReport sharded(std::string name, std::uint64_t total, Check&& check) {
  const std::size_t shards = static_cast<std::size_t>(
      std::min<std::uint64_t>(kShards, std::max<std::uint64_t>(total, 1)));
  std::vector<SweepReport> parts(shards);
  parallel_for(shards, [&](std::size_t s) {
    const std::uint64_t lo = total * s / shards;
    const std::uint64_t hi = total * (s + 1) / shards;
    for (std::uint64_t k = lo; k < hi; ++k) check(k, parts[s]);
  });
  SweepReport out;
  out.name = std::move(name);
  for (const auto& p : parts) out.absorb(p);
  return out;
}

// --- packed truth tables (at most 6 variables) -----------------------------

bool packed_depends(std::uint64_t t, int n, int var) {
  const std::uint64_t bit = std::uint64_t{1} << (var - 1);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if ((x & bit) == 0 && ((t >> x) & 1U) != ((t >> (x | bit)) & 1U)) return true;
  }
  return false;
}

int packed_ess(std::uint64_t t, int n) {
  int count = 0;
  for (int v = 1; v <= n; ++v) count += packed_depends(t, n, v) ? 1 : 0;
  return count;
}

// g(x) = f(x with x_j replaced by x_i).
std::uint64_t packed_identify(std::uint64_t t, int n, int i, int j) {
  std::uint64_t out = 0;
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const std::uint64_t y = (x & bi) ? (x | bj) : (x & ~bj);
    if ((t >> y) & 1U) out |= std::uint64_t{1} << x;
  }
  return out;
}

// --- graphs -----------------------------------------------------------------

int pair_index(int n, int a, int b) {
  // Position of (a, b), a < b, in the order (1,2), (1,3), ..., (2,3), ...
  int idx = 0;
  for (int r = 1; r < a; ++r) idx += n - r;
  return idx + (b - a - 1);
}

std::uint64_t graph_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> edges;
  for (auto [a, b] : g.edges()) edges.push_back(variable_bit(a) | variable_bit(b));
  const CanonicalLabeling canon = canonical_labeling(std::max(n, 1), edges);
  std::uint64_t mask = 0;
  for (std::uint64_t e : canon.edges) {
    const int a = std::countr_zero(e) + 1;
    const int b = 63 - std::countl_zero(e) + 1;
    mask |= std::uint64_t{1} << pair_index(n, a, b);
  }
  return (static_cast<std::uint64_t>(n) << 32) | mask;
}

bool is_complete_graph(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_c5(const Graph& g) {
  if (g.vertex_count() != 5 || !is_connected(g)) return false;
  for (int v = 1; v <= 5; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// g equals the lexicographic sum of its ai-blocks over the quotient, with
// vertex labels intact.
bool reconstructs(const Graph& g, const AiDecomposition& d) {
  const int n = g.vertex_count();
  std::vector<int> block(n + 1, 0);
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    for (int v : d.components[k]) block[v] = static_cast<int>(k) + 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (block[v] == 0) return false;
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const bool expect = block[a] != block[b] && d.quotient.adjacent(block[a], block[b]);
      if (g.adjacent(a, b) != expect) return false;
    }
  }
  return true;
}

bool non_ai_prime_family(JITag t) {
  return t == JITag::K2JoinEmpty || t == JITag::EmptyJoinEmpty ||
         t == JITag::BalancedMultipartite;
}

void compositions(int parts, int max_total, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    out.push_back(cur);
    return;
  }
  const int used = std::accumulate(cur.begin(), cur.end(), 0);
  const int left = parts - static_cast<int>(cur.size()) - 1;
  for (int s = 1; used + s + left <= max_total; ++s) {
    cur.push_back(s);
    compositions(parts, max_total, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<VertexMap> find_quotient_map(const Hypergraph& hp, const Hypergraph& h) {
  const int src = hp.vertex_count();
  const int dst = h.vertex_count();
  if (dst > 6 || src > 8) {
    throw std::invalid_argument("find_quotient_map: at most 8 source and 6 target vertices");
  }
  const std::uint64_t want = family_of(h);
  std::vector<int> image(src, 1);
  for (;;) {
    std::uint64_t parity = 0;
    for (Edge e : hp.edges()) {
      Edge img = 0;
      for (Edge rest = e; rest != 0; rest &= rest - 1) {
        img |= variable_bit(image[std::countr_zero(rest)]);
      }
      parity ^= std::uint64_t{1} << img;
    }
    if (parity == want) return VertexMap{src, dst, image};
    int k = src - 1;
    while (k >= 0 && image[k] == dst) image[k--] = 1;
    if (k < 0) return std::nullopt;
    ++image[k];
  }
}

SweepReport verify_gap(int max_arity) {
  if (max_arity < 2 || max_arity > 4) {
    throw std::invalid_argument("verify gap: --max-arity must be in [2, 4]");
  }
  const int n = max_arity;
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  SweepReport report = sharded("gap", total, [&](std::uint64_t t, SweepReport& r) {
    const Zhegalkin f = zhegalkin_from_truth_table(TruthTable::from_packed(n, t));
    const std::string text = format_truth_table(TruthTable::from_packed(n, t));
    const int ess = packed_ess(t, n);
    if (ess != essential_arity(f)) {
      r.fail(text + ": essential arity " + std::to_string(essential_arity(f)) +
             ", table says " + std::to_string(ess));
      return;
    }
    if (ess <= 1) {
      try {
        (void)arity_gap(f);
        r.fail(text + ": arity_gap accepted ess <= 1");
      } catch (const std::domain_error&) {
      }
      return;
    }
    int best = 0;
    for (int i = 1; i <= n; ++i) {
      if (!packed_depends(t, n, i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (!packed_depends(t, n, j)) continue;
        best = std::max(best, packed_ess(packed_identify(t, n, i, j), n));
      }
    }
    const int gap = ess - best;
    const int lib_gap = arity_gap(f);
    const GapClass cls = classify_gap(f);
    if (gap != 1 && gap != 2) r.fail(text + ": gap " + std::to_string(gap) + " outside {1, 2}");
    if (lib_gap != gap) {
      r.fail(text + ": arity_gap " + std::to_string(lib_gap) + ", brute force " +
             std::to_string(gap));
    }
    if ((cls.tag != GapTag::GapOne) != (gap == 2)) {
      r.fail(text + ": family " + std::string(to_string(cls.tag)) + " but gap " +
             std::to_string(gap));
    }
  });
  report.summary.push_back(std::to_string(total) + " tables checked");
  return report;
}

SweepReport verify_correspondence(int max_vertices, std::uint64_t seed, int samples) {
  if (max_vertices < 1 || max_vertices > 3) {
    throw std::invalid_argument("verify correspondence: --max-vertices must be in [1, 3]");
  }
  if (samples < 0) throw std::invalid_argument("verify correspondence: negative sample count");

  std::vector<Hypergraph> small;
  for (int n = 1; n <= max_vertices; ++n) {
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (1u << n)); ++fam) {
      small.push_back(hypergraph_from_family(n, fam));
    }
  }
  std::vector<std::pair<Hypergraph, Hypergraph>> pairs;
  pairs.reserve(small.size() * small.size() + static_cast<std::size_t>(samples));
  for (const auto& hp : small) {
    for (const auto& h : small) pairs.emplace_back(hp, h);
  }
  const std::size_t exhaustive = pairs.size();

  std::mt19937_64 rng(seed);
  const auto random_family = [&](int n, int density) {
    std::uint64_t fam = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (static_cast<int>(rng() % 8) < density) fam |= std::uint64_t{1} << s;
    }
    return fam;
  };
  for (int k = 0; k < samples; ++k) {
    const int np = 4 + static_cast<int>(rng() % 2);
    const int nt = 4 + static_cast<int>(rng() % 2);
    Hypergraph hp = hypergraph_from_family(np, random_family(np, 1 + static_cast<int>(rng() % 4)));
    Hypergraph h;
    if (k % 2 == 0) {
      VertexMap m{np, nt, std::vector<int>(np)};
      for (int& v : m.image) v = 1 + static_cast<int>(rng() % nt);
      std::uint64_t parity = 0;
      for (Edge e : hp.edges()) parity ^= std::uint64_t{1} << map_edge(m, e);
      h = hypergraph_from_family(nt, parity);
    } else {
      h = hypergraph_from_family(nt, random_family(nt, 1));
    }
    pairs.emplace_back(std::move(hp), std::move(h));
  }

  SweepReport report = sharded("correspondence", pairs.size(), [&](std::uint64_t k, SweepReport& r) {
    const auto& [hp, h] = pairs[k];
    const auto q = find_quotient_map(hp, h);
    const Zhegalkin f = polynomial_of(hp);
    const Zhegalkin g = polynomial_of(h);
    const auto w = is_minor(g, f);
    if (q.has_value() != w.has_value()) {
      r.fail(pair_text(hp, h) + ": quotient map " + (q ? "exists" : "absent") +
             ", is_minor " + (w ? "holds" : "fails"));
      return;
    }
    if (q && !verify_quotient_map(*q, hp, h)) {
      r.fail(pair_text(hp, h) + ": brute-force map does not verify");
    }
    if (w && !is_equivalent(apply_witness(f, *w), g)) {
      r.fail(pair_text(hp, h) + ": minor witness does not reproduce the target");
    }
    if (q) ++r.tally;
  });
  report.summary.push_back(std::to_string(exhaustive) + " exhaustive pairs on <= " +
                           std::to_string(max_vertices) + " vertices checked");
  report.summary.push_back(std::to_string(samples) + " seeded pairs on 4-5 vertices checked (seed " +
                           std::to_string(seed) + ")");
  report.summary.push_back(
      std::to_string(report.tally) + " pairs related by a quotient map");
  return report;
}

SweepReport verify_keylemma(int max_vertices, std::uint64_t seed, int samples) {
  if (max_vertices < 1 || max_vertices > 4) {
    throw std::invalid_argument("verify keylemma: --max-vertices must be in [1, 4]");
  }
  if (samples < 0) throw std::invalid_argument("verify keylemma: negative sample count");
  std::vector<std::pair<int, std::uint64_t>> items;
  for (int n = 1; n <= max_vertices; ++n) {
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (1u << n)); ++fam) {
      items.emplace_back(n, fam);
    }
  }
  const std::size_t exhaustive = items.size();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const int density = 1 + static_cast<int>(rng() % 6);
    std::uint64_t fam = 0;
    for (int s = 0; s < 32; ++s) {
      if (static_cast<int>(rng() % 16) < density) fam |= std::uint64_t{1} << s;
    }
    items.emplace_back(5, fam);
  }
  SweepReport report = sharded("keylemma", items.size(), [&](std::uint64_t k, SweepReport& r) {
    const Hypergraph h = hypergraph_from_family(items[k].first, items[k].second);
    const bool key = is_irreducible_keylemma(h);
    const bool direct = is_irreducible_direct(polynomial_of(h)).has_value();
    if (key != direct) {
      r.fail(format_hypergraph(h) + ": contraction classes say " +
             (key ? "irreducible" : "not irreducible") + ", direct test says " +
             (direct ? "irreducible" : "not irreducible"));
    }
    if (direct) ++r.tally;
  });
  report.summary.push_back(std::to_string(exhaustive) + " hypergraphs on <= " +
                           std::to_string(max_vertices) + " vertices checked");
  report.summary.push_back(std::to_string(samples) + " seeded hypergraphs on 5 vertices checked (seed " +
                           std::to_string(seed) + ")");
  report.summary.push_back(
      std::to_string(report.tally) + " irreducible");
  return report;
}

SweepReport verify_graphs(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 7) {
    throw std::invalid_argument("verify graphs: --max-vertices must be in [1, 7]");
  }
  // Labeled graphs as (n, pair mask), enumerated n by n.
  std::vector<std::uint64_t> offset{0};
  for (int n = 1; n <= max_vertices; ++n) {
    offset.push_back(offset.back() + (std::uint64_t{1} << (n * (n - 1) / 2)));
  }
  const std::uint64_t total = offset.back();
  const auto decode = [&](std::uint64_t k) {
    int n = 1;
    while (k >= offset[n]) ++n;
    return Graph::from_pair_mask(n, k - offset[n - 1]);
  };

  // Pass 1: per labeled graph, checks that need no memo, the structural
  // verdict, and the isomorphism key.
  std::vector<std::uint64_t> keys(total);
  std::vector<std::uint8_t> structural(total);
  SweepReport report = sharded("graphs", total, [&](std::uint64_t k, SweepReport& r) {
    const Graph g = decode(k);
    const int n = g.vertex_count();
    keys[k] = graph_key(g);
    structural[k] = classify_join_irreducible(g).tag != JITag::NotIrreducible;

    const bool p = satisfies_property_p(g);
    const PropertyPClass pc = classify_property_p(g);
    if (!p && pc.tag != PropertyPTag::NotSatisfied) {
      r.fail(format_edge_list(g) + ": property (P) fails but a shape was reported");
    }
    if (p && n >= 2 && (pc.tag == PropertyPTag::NotSatisfied || pc.tag == PropertyPTag::Unclassified)) {
      r.fail(format_edge_list(g) + ": property (P) holds outside K_n, C_5, C_4, P_3");
    }
    if (!reconstructs(g, ai_decomposition(g))) {
      r.fail(format_edge_list(g) + ": ai-blocks over the quotient do not rebuild the graph");
    }
  });

  // Pass 2: one representative per isomorphism class.
  std::map<std::uint64_t, std::uint64_t> first_of;
  for (std::uint64_t k = 0; k < total; ++k) first_of.emplace(keys[k], k);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reps(first_of.begin(), first_of.end());
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::uint8_t> generic(reps.size());
  SweepReport classes = sharded("graph classes", reps.size(), [&](std::uint64_t c, SweepReport& r) {
    const Graph g = decode(reps[c].second);
    const bool ji = is_join_irreducible_generic(g);
    generic[c] = ji;
    if (ji) ++r.tally;
    if (g.vertex_count() == 0 || !is_connected(g)) return;
    if (!lemma_aux_check(g)) {
      r.fail(format_edge_list(g) + ": a nonedge contraction leaves no isolated vertex but every edge contraction does");
    }
    const AiDecomposition d = ai_decomposition(g);
    if (!is_ai_prime(d.quotient)) {
      r.fail(format_edge_list(g) + ": ai-quotient is not ai-prime");
    }
    if (ji && g.vertex_count() >= 2 && !is_complete_graph(d.quotient) && !is_c5(d.quotient)) {
      r.fail(format_edge_list(g) + ": irreducible but G_ai is neither complete nor C_5");
    }
    if (!is_ai_prime(g)) {
      const bool family = non_ai_prime_family(classify_join_irreducible(g).tag);
      if (family != ji) {
        r.fail(format_edge_list(g) + ": non-ai-prime graph, family match " +
               (family ? "yes" : "no") + ", irreducible " + (ji ? "yes" : "no"));
      }
    }
  });
  report.absorb(classes);
  const std::uint64_t ji_classes = classes.tally;

  // Pass 3: structural verdict against the memoized direct test.
  std::map<std::uint64_t, std::size_t> class_of;
  for (std::size_t c = 0; c < reps.size(); ++c) class_of.emplace(reps[c].first, c);
  SweepReport compare = sharded("graph compare", total, [&](std::uint64_t k, SweepReport& r) {
    const bool ji = generic[class_of.at(keys[k])];
    if (static_cast<bool>(structural[k]) != ji) {
      const Graph g = decode(k);
      r.fail(format_edge_list(g) + ": classifier says " +
             describe(classify_join_irreducible(g)) + ", direct test says " +
             (ji ? "irreducible" : "not irreducible"));
    }
  });
  report.absorb(compare);

  // Lexicographic sums over C_5 with a nontrivial block, up to 8 vertices.
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  compositions(5, 8, cur, sizes);
  std::uint64_t sums = 0;
  for (const auto& s : sizes) {
    if (*std::max_element(s.begin(), s.end()) < 2) continue;
    ++sums;
    const Graph g = lexicographic_sum(cycle(5), s);
    if (!is_c5(ai_decomposition(g).quotient)) {
      report.fail(format_edge_list(g) + ": ai-quotient of a sum over C_5 is not C_5");
    }
    if (is_join_irreducible_generic(g)) {
      report.fail(format_edge_list(g) + ": irreducible lexicographic sum over C_5");
    }
  }

  report.summary.push_back(std::to_string(total) + " labeled graphs on <= " +
                           std::to_string(max_vertices) + " vertices checked");
  report.summary.push_back(
      std::to_string(reps.size()) + " isomorphism classes, " +
      std::to_string(ji_classes) + " join-irreducible");
  report.summary.push_back(std::to_string(sums) + " lexicographic sums over C_5 on <= 8 vertices checked");
  return report;
}

SweepReport verify_steiner() {
  SweepReport report;
  report.name = "steiner";
  std::vector<NamedDesign> designs = builtin_instances();
  for (int n = 3; n <= 6; ++n) designs.push_back({"K" + std::to_string(n), complete(n).to_hypergraph()});
  designs.push_back({"single-block-4", Hypergraph::from_lists(4, {{1, 2, 3, 4}})});

  for (const auto& [name, h] : designs) {
    const SteinerReport r = steiner_report(h);
    const bool catalog = name == "fano" || name == "ag23";
    std::string line = name + ": 2-(" + std::to_string(r.params.n) + "," +
                       std::to_string(r.params.k) + "," + std::to_string(r.params.lambda) +
                       ") irreducible=" + (r.irreducible ? "yes" : "no") +
                       " contractions-isomorphic=" + (r.contractions_isomorphic ? "yes" : "no") +
                       " minus2-monomorphic=" + (r.minus2_monomorphic ? "yes" : "no") +
                       " 2-set-transitive=" +
                       (r.two_set_transitive ? (*r.two_set_transitive ? "yes" : "no") : "n/a");
    report.summary.push_back(line);
    if (!r.conditions_agree()) {
      for (const auto& f : r.findings) report.fail(name + ": " + f);
      if (r.findings.empty()) report.fail(name + ": conditions disagree");
    }
    if (r.two_set_transitive && *r.two_set_transitive && !r.irreducible) {
      report.fail(name + ": 2-set transitive but not irreducible");
    }
    if (catalog && !(r.irreducible && r.contractions_isomorphic && r.minus2_monomorphic &&
                     r.two_set_transitive.value_or(false))) {
      report.fail(name + ": expected all conditions and 2-set transitivity");
    }
  }
  const std::size_t fano_aut = automorphisms(fano_plane()).size();
  report.summary.push_back("|Aut(fano)| = " + std::to_string(fano_aut));
  if (fano_aut != 168) report.fail("fano: automorphism group of order " + std::to_string(fano_aut));
  return report;
}

SweepReport verify_poset(int max_ess) {
  if (max_ess < 0 || max_ess > kMaxPosetEss) {
    throw std::invalid_argument("verify poset: --max-ess must be in [0, 4]");
  }
  SweepReport report;
  report.name = "poset";
  const ClassUniverse u = enumerate_classes(max_ess);

  // Permutation orbits of tables on n variables, restricted to ess <= max_ess.
  const int n = std::max(max_ess, 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint64_t>> index_maps;
  do {
    std::vector<std::uint64_t> m(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < m.size(); ++x) {
      std::uint64_t y = 0;
      for (int b = 0; b < n; ++b) {
        if ((x >> b) & 1U) y |= std::uint64_t{1} << perm[b];
      }
      m[x] = y;
    }
    index_maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint64_t> orbits;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1u << n)); ++t) {
    if (packed_ess(t, n) > max_ess) continue;
    std::uint64_t least = t;
    for (const auto& m : index_maps) {
      std::uint64_t p = 0;
      for (std::uint64_t x = 0; x < m.size(); ++x) {
        if ((t >> x) & 1U) p |= std::uint64_t{1} << m[x];
      }
      least = std::min(least, p);
    }
    orbits.insert(least);
  }
  report.summary.push_back(std::to_string(u.size()) + " classes with ess <= " +
                           std::to_string(max_ess) + " (" + std::to_string(orbits.size()) +
                           " permutation orbits of tables)");
  if (orbits.size() != u.size()) {
    report.fail("class count " + std::to_string(u.size()) + " differs from orbit count " +
                std::to_string(orbits.size()));
  }

  const auto lv = levels(u);
  std::set<Zhegalkin> bottom(lv.empty() ? std::set<Zhegalkin>{}
                                        : std::set<Zhegalkin>(lv[0].begin(), lv[0].end()));
  std::set<Zhegalkin> expect;
  for (const char* s : {"0", "1", "x1", "x1 + 1"}) {
    const Zhegalkin c = canonical_form(parse_polynomial(s));
    if (essential_arity(c) <= max_ess) expect.insert(c);
  }
  if (bottom != expect) {
    report.fail("level 0 has " + std::to_string(bottom.size()) + " classes, expected " +
                std::to_string(expect.size()));
  }
  std::string per_level = "level sizes:";
  for (const auto& l : lv) per_level += " " + std::to_string(l.size());
  report.summary.push_back(per_level);

  std::map<std::pair<int, Block>, int> tally;
  std::uint64_t covers = 0;
  std::uint64_t irreducible = 0;
  for (const ClassRecord& r : u) {
    const std::string text = format_polynomial(r.canon);
    ++tally[{r.ess, r.block}];
    if (r.block != block_of(r.canon)) report.fail(text + ": stored block differs");
    const std::vector<int> vars = essential_variables(r.canon);
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        if (block_of(identify(r.canon, vars[a], vars[b])) != r.block) {
          report.fail(text + ": identifying x" + std::to_string(vars[a]) + ", x" +
                      std::to_string(vars[b]) + " changes the block");
        }
      }
    }
    for (const Zhegalkin& c : r.lower_covers) {
      ++covers;
      const int ess_c = essential_arity(c);
      if (!r.gap || r.ess != ess_c + *r.gap) {
        report.fail(text + " covers " + format_polynomial(c) + ": ess " + std::to_string(r.ess) +
                    " != " + std::to_string(ess_c) + " + gap");
      }
      if (block_of(c) != r.block) {
        report.fail(text + " covers " + format_polynomial(c) + " across blocks");
      }
    }
    const bool direct = is_irreducible_direct(r.canon).has_value();
    const bool key = r.ess >= 2 && is_irreducible_keylemma(hypergraph_of(r.canon));
    if (r.irreducible != direct || direct != key) {
      report.fail(text + ": irreducible flag " + (r.irreducible ? "yes" : "no") + ", direct " +
                  (direct ? "yes" : "no") + ", contraction classes " + (key ? "yes" : "no"));
    }
    if (r.irreducible) ++irreducible;
  }
  // Classes of ess <= 2 from distinct blocks: incomparable both ways.
  std::uint64_t cross = 0;
  for (const ClassRecord& a : u) {
    for (const ClassRecord& b : u) {
      if (a.ess > 2 || b.ess > 2 || a.block == b.block) continue;
      ++cross;
      if (is_minor(a.canon, b.canon)) {
        report.fail(format_polynomial(a.canon) + " <= " + format_polynomial(b.canon) +
                    " across blocks");
      }
    }
  }
  report.summary.push_back(std::to_string(covers) + " cover pairs checked, " +
                           std::to_string(irreducible) + " irreducible classes");
  report.summary.push_back(std::to_string(cross) + " cross-block pairs checked");
  for (const auto& [key, count] : tally) {
    report.summary.push_back("ess " + std::to_string(key.first) + " " +
                             std::string(to_string(key.second)) + ": " + std::to_string(count));
  }
  return report;
}

}  // namespace irrbool
