// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "irrbool/designs.hpp"
#include "irrbool/graph.hpp"
#include "irrbool/hypergraph.hpp"
#include "irrbool/minor.hpp"
#include "irrbool/parallel.hpp"
#include "irrbool/poset.hpp"
#include "irrbool/text_format.hpp"
#include "irrbool/verify.hpp"

using namespace irrbool;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(IRRBOOL_CLI) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  return out;
}

// Four-variable tables packed in 16 bits; x1 is the least significant bit of
// the point index.
constexpr int kN = 4;

bool tt_at(std::uint32_t t, std::uint32_t x) { return (t >> x) & 1U; }

bool tt_depends(std::uint32_t t, int var) {
  const std::uint32_t bit = 1U << (var - 1);
  for (std::uint32_t x = 0; x < 16; ++x) {
    if (tt_at(t, x) != tt_at(t, x ^ bit)) return true;
  }
  return false;
}

int tt_ess(std::uint32_t t) {
  int e = 0;
  for (int v = 1; v <= kN; ++v) e += tt_depends(t, v);
  return e;
}

// x_j := x_i.
std::uint32_t tt_identify(std::uint32_t t, int i, int j) {
  std::uint32_t out = 0;
  for (std::uint32_t x = 0; x < 16; ++x) {
    std::uint32_t y = x & ~(1U << (j - 1));
    if ((x >> (i - 1)) & 1U) y |= 1U << (j - 1);
    if (tt_at(t, y)) out |= 1U << x;
  }
  return out;
}

int tt_gap(std::uint32_t t) {
  const int e = tt_ess(t);
  int best = e;
  for (int i = 1; i <= kN; ++i) {
    for (int j = i + 1; j <= kN; ++j) {
      if (!tt_depends(t, i) || !tt_depends(t, j)) continue;
      best = std::min(best, e - tt_ess(tt_identify(t, i, j)));
    }
  }
  return best;
}

// Table of a polynomial given as monomials over variable indices.
std::uint32_t tt_of(const std::vector<std::vector<int>>& monos, bool c) {
  std::uint32_t out = 0;
  for (std::uint32_t x = 0; x < 16; ++x) {
    bool v = c;
    for (const auto& m : monos) {
      bool term = true;
      for (int var : m) term = term && ((x >> (var - 1)) & 1U);
      v ^= term;
    }
    if (v) out |= 1U << x;
  }
  return out;
}

// Every table on four variables belonging to one of the arity-gap-two
// families, built by placing the families on all injective variable choices.
std::set<std::uint32_t> gap_two_tables() {
  std::set<std::uint32_t> out;
  for (bool c : {false, true}) {
    for (int mask = 0; mask < 16; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) < 2) continue;
      std::vector<std::vector<int>> monos;
      for (int v = 1; v <= kN; ++v) {
        if ((mask >> (v - 1)) & 1) monos.push_back({v});
      }
      out.insert(tt_of(monos, c));
    }
    for (int a = 1; a <= kN; ++a) {
      for (int b = 1; b <= kN; ++b) {
        if (b == a) continue;
        out.insert(tt_of({{a, b}, {a}}, c));
        for (int d = 1; d <= kN; ++d) {
          if (d == a || d == b) continue;
          out.insert(tt_of({{a, b}, {a, d}, {b, d}}, c));
          out.insert(tt_of({{a, b}, {a, d}, {b, d}, {a}, {b}}, c));
        }
      }
    }
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Zhegalkin proj = canonical_form(parse_polynomial("x1"));
  const auto conj = is_irreducible_direct(parse_polynomial("x1*x2"));
  const auto disj = is_irreducible_direct(parse_polynomial("x1 + x2 + x1*x2"));
  o.require(conj && *conj == proj, "x1*x2 is not irreducible over the projection");
  o.require(disj && *disj == proj, "x1 + x2 + x1*x2 is not irreducible over the projection");
  const Zhegalkin f = parse_function("tt:EEE0 arity=4");
  const Zhegalkin expect = parse_polynomial("x1*x3 + x1*x4 + x2*x3 + x2*x4 + x1*x2*x3 + x1*x2*x4 + "
                                            "x1*x3*x4 + x2*x3*x4 + x1*x2*x3*x4");
  o.require(f == expect, "tt:EEE0 is not (x1 or x2) and (x3 or x4)");
  o.require(!is_irreducible_direct(f), "(x1 or x2) and (x3 or x4) reported irreducible");
  const auto maximal = maximal_strict_minors(f);
  o.require(maximal.size() >= 2, "fewer than two maximal strict minors");
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      o.require(!is_equivalent(maximal[a], maximal[b]), "maximal minors are equivalent");
    }
  }
  o.require(run_cli("irreducible \"x1*x2\"") == "irreducible; unique lower cover: x1\n",
            "cli output for x1*x2");
  o.require(run_cli("irreducible \"x1 + x2 + x1*x2\"") == "irreducible; unique lower cover: x1\n",
            "cli output for x1 + x2 + x1*x2");
  const std::string out = run_cli("irreducible \"tt:EEE0 arity=4\"");
  o.require(out.rfind("not irreducible; maximal strict minors: ", 0) == 0 &&
                std::count(out.begin(), out.end(), ';') == static_cast<long>(maximal.size()),
            "cli output for tt:EEE0: " + out);
  const double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  std::ostringstream d;
  d << maximal.size() << " maximal minors for (x1 or x2) and (x3 or x4), " << s << " s";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::set<std::uint32_t> family = gap_two_tables();
  std::uint64_t gap2 = 0;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string first;
  for (std::uint32_t t = 0; t < 65536; ++t) {
    if (tt_ess(t) < 2) continue;
    ++checked;
    const int g = tt_gap(t);
    const Zhegalkin f = zhegalkin_from_truth_table(TruthTable::from_packed(kN, t));
    const bool in_family = family.count(t) != 0;
    const bool ok = (g == 1 || g == 2) && (g == 2) == in_family && arity_gap(f) == g &&
                    (classify_gap(f).tag != GapTag::GapOne) == in_family;
    if (!ok) {
      if (mismatches == 0) first = format_truth_table(TruthTable::from_packed(kN, t));
      ++mismatches;
    }
    gap2 += g == 2;
  }
  const double s = seconds_since(t0);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches, first " + first);
  o.require(s < 60.0, "took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail = std::to_string(checked) + " tables with ess >= 2, " + std::to_string(gap2) +
               " with gap 2, " + std::to_string(s) + " s";
  }
  return o;
}

Outcome from_report(const SweepReport& r, double s) {
  Outcome o;
  std::string lines;
  for (const auto& l : r.summary) lines += (lines.empty() ? "" : "; ") + l;
  o.require(r.ok(), std::to_string(r.failure_count) + " failures" +
                        (r.failures.empty() ? "" : ", first " + r.failures.front()));
  if (o.pass) o.detail = lines + ", " + std::to_string(s) + " s";
  return o;
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  const SweepReport r = verify_correspondence(3, kDefaultSeed, kDefaultSamples);
  return from_report(r, seconds_since(t0));
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  const SweepReport r = verify_keylemma(4, kDefaultSeed, kDefaultSamples);
  return from_report(r, seconds_since(t0));
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  const SweepReport r = verify_graphs(7);
  const double s = seconds_since(t0);
  Outcome o = from_report(r, s);
  // Budget is 10 minutes on 8 workers; scale to the workers present.
  const double budget = 600.0 * 8.0 / std::min(worker_count(), 8);
  o.require(s < budget, "took " + std::to_string(s) + " s, budget " + std::to_string(budget));
  if (o.pass) o.detail += ", " + std::to_string(worker_count()) + " worker(s)";
  return o;
}

// Shape test by invariants: K_n (n >= 2), C_5, C_4 or the 3-vertex path.
bool listed_shape(const Graph& g) {
  const int n = g.vertex_count();
  const std::size_t m = g.edge_count();
  bool two_regular = true;
  for (int v = 1; v <= n; ++v) two_regular = two_regular && g.degree(v) == 2;
  if (n >= 2 && m == static_cast<std::size_t>(n * (n - 1) / 2)) return true;
  if ((n == 4 || n == 5) && two_regular) return true;
  return n == 3 && m == 2;
}

bool literal_p(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (g.adjacent(a, b)) continue;
      bool found = false;
      for (int j = 1; j <= n && !found; ++j) {
        found = j != a && j != b && g.degree(j) == 2 && g.adjacent(a, j) && g.adjacent(j, b);
      }
      if (!found) return false;
    }
  }
  return true;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t graphs = 0;
  std::uint64_t holds = 0;
  std::uint64_t mismatches = 0;
  std::string first;
  for (int n = 2; n <= 7; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = Graph::from_pair_mask(n, mask);
      const bool p = literal_p(g);
      ++graphs;
      holds += p;
      if (p != listed_shape(g) || p != satisfies_property_p(g)) {
        if (mismatches == 0) first = format_edge_list(g);
        ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches, first " + first);
  if (o.pass) {
    o.detail = std::to_string(graphs) + " labeled graphs on 2..7 vertices, " +
               std::to_string(holds) + " with (P), " + std::to_string(seconds_since(t0)) + " s";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& [name, h] :
       std::vector<std::pair<std::string, Hypergraph>>{{"fano", fano_plane()},
                                                      {"ag23", affine_plane_3()}}) {
    const SteinerReport r = steiner_report(h);
    o.require(r.irreducible && r.contractions_isomorphic && r.minus2_monomorphic,
              name + ": a condition fails");
    o.require(r.conditions_agree() && r.findings.empty(), name + ": conditions disagree");
    o.require(r.two_set_transitive == true, name + ": not 2-set transitive");
  }
  const std::size_t aut = automorphisms(fano_plane()).size();
  o.require(aut == 168, "|Aut(fano)| = " + std::to_string(aut));
  const SteinerReport s13 = steiner_report(cyclic_sts13());
  o.require(s13.two_set_transitive.has_value(), "sts13: 2-set transitivity not evaluated");
  const std::string out = run_cli("steiner-check sts13");
  o.require(out.find("monomorphic") != std::string::npos &&
                out.find("transitive") != std::string::npos,
            "sts13 cli report lacks the flags");
  if (o.pass) {
    o.detail = "fano and ag23 satisfy all conditions, |Aut(fano)| = 168; sts13: -2-monomorphic " +
               std::string(s13.minus2_monomorphic ? "yes" : "no") + ", 2-set transitive " +
               (*s13.two_set_transitive ? "yes" : "no");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const ClassUniverse u1 = enumerate_classes(1);
  o.require(u1.size() == 4, "enumerate_classes(1) has " + std::to_string(u1.size()) + " classes");
  std::set<Block> blocks;
  for (const auto& r : u1) blocks.insert(r.block);
  o.require(blocks.size() == 4, "classes of ess <= 1 do not fill the four blocks");
  for (const auto& a : u1) {
    for (const auto& b : u1) {
      if (a.canon != b.canon) {
        o.require(!is_minor(a.canon, b.canon), "comparable classes of ess <= 1");
      }
    }
  }
  // Orbits of the 16 binary tables under swapping x1 and x2.
  std::set<std::uint32_t> orbits;
  for (std::uint32_t t = 0; t < 16; ++t) {
    const std::uint32_t swapped = (t & 0b1001U) | ((t & 0b0010U) << 1) | ((t & 0b0100U) >> 1);
    orbits.insert(std::min(t, swapped));
  }
  const ClassUniverse u2 = enumerate_classes(2);
  o.require(orbits.size() == 12 && u2.size() == orbits.size(),
            "enumerate_classes(2) has " + std::to_string(u2.size()) + " classes, orbits " +
                std::to_string(orbits.size()));
  const ClassUniverse u4 = enumerate_classes(kMaxPosetEss);
  std::uint64_t pairs = 0;
  for (const auto& r : u4) {
    for (const auto& c : r.lower_covers) {
      ++pairs;
      o.require(r.gap && r.ess == essential_arity(c) + *r.gap,
                format_polynomial(r.canon) + " covers " + format_polynomial(c) +
                    " against the gap law");
    }
  }
  if (o.pass) {
    o.detail = "4 and 12 classes, " + std::to_string(u4.size()) + " classes with ess <= 4, " +
               std::to_string(pairs) + " cover pairs obey the gap law";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::uint64_t docs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1u << n)); ++t) {
      const TruthTable tt = TruthTable::from_packed(n, t);
      const Zhegalkin p = zhegalkin_from_truth_table(tt);
      const Hypergraph h = hypergraph_of(p);
      o.require(polynomial_of(h) == p && truth_table_from_zhegalkin(polynomial_of(h)) == tt,
                "round trip fails at " + format_truth_table(tt));
      o.require(parse_truth_table(format_truth_table(tt)) == tt, "tt text " + format_truth_table(tt));
      o.require(parse_polynomial(format_polynomial(p), n) == p, "poly text " + format_polynomial(p));
      o.require(parse_hypergraph(format_hypergraph(h)) == h, "json " + format_hypergraph(h));
      docs += 3;
    }
  }
  // Hypergraphs as edge sets: every family on four vertices.
  for (std::uint64_t fam = 0; fam < 65536; ++fam) {
    std::vector<Edge> edges;
    for (Edge e = 0; e < 16; ++e) {
      if ((fam >> e) & 1U) edges.push_back(e);
    }
    const Hypergraph h(4, edges);
    o.require(hypergraph_of(polynomial_of(h)) == h, "hypergraph round trip " + format_hypergraph(h));
  }
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m) {
      const Graph g = Graph::from_pair_mask(n, m);
      o.require(parse_graph(format_edge_list(g)) == g, "edge list " + format_edge_list(g));
      ++docs;
    }
  }
  for (const auto& d : builtin_instances()) {
    o.require(parse_hypergraph(format_hypergraph(d.design)) == d.design, "design " + d.name);
    ++docs;
  }
  const ClassUniverse u = enumerate_classes(kMaxPosetEss);
  o.require(parse_cache(cache_text(u)) == u, "poset cache");
  const auto structured = nlohmann::json::parse(export_poset(u, PosetFormat::Structured));
  o.require(structured.at("classes").size() == u.size(), "structured poset export");
  for (const auto& c : structured.at("classes")) {
    const Zhegalkin p = parse_polynomial(c.at("canon").get<std::string>());
    o.require(find_class(u, p.with_arity(std::max(essential_arity(p), 1))).has_value(),
              "structured poset class " + c.at("canon").get<std::string>());
  }
  docs += 2;
  if (o.pass) {
    o.detail = "exhaustive at arity <= 4 and all 65536 edge sets on 4 vertices, " +
               std::to_string(docs) + " documents reparsed";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
