#ifndef IRRBOOL_VERIFY_HPP
#define IRRBOOL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrbool/hypergraph.hpp"

namespace irrbool {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kDefaultSamples = 10000;
inline constexpr std::size_t kMaxListedFailures = 20;

// Outcome of one exhaustive or sampled sweep. `summary` holds the
// user-facing count lines; `failures` the first few counterexamples in the
// input text formats, in sweep order.
struct SweepReport {
  std::string name;
  std::vector<std::string> summary;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;
  std::uint64_t tally = 0;  // sweep-specific count of positive cases

  bool ok() const { return failure_count == 0; }
  void fail(std::string what) {
    ++failure_count;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
  }
  // Appends another shard's failures, keeping the cap.
  void absorb(const SweepReport& other) {
    failure_count += other.failure_count;
    tally += other.tally;
    for (const auto& f : other.failures) {
      if (failures.size() < kMaxListedFailures) failures.push_back(f);
    }
  }
};

// Brute force over all maps from hp's vertices to h's vertices; the first
// quotient map in lexicographic order of images. Throws
// std::invalid_argument when h has more than 6 or hp more than 8 vertices.
std::optional<VertexMap> find_quotient_map(const Hypergraph& hp, const Hypergraph& h);

// Truth-table arity gap against arity_gap() and classify_gap() on every
// table with 2..max_arity variables (max_arity <= 4).
SweepReport verify_gap(int max_arity = 4);

// Quotient-map existence against is_minor() on all pairs with at most
// max_vertices vertices (<= 3) plus `samples` seeded pairs on 4-5 vertices.
SweepReport verify_correspondence(int max_vertices = 3,
                                  std::uint64_t seed = kDefaultSeed,
                                  int samples = kDefaultSamples);

// Contraction-class criterion against the direct test on every hypergraph
// with at most max_vertices vertices (<= 4) plus `samples` on 5 vertices.
SweepReport verify_keylemma(int max_vertices = 4,
                            std::uint64_t seed = kDefaultSeed,
                            int samples = kDefaultSamples);

// Every labeled graph on at most max_vertices vertices (<= 7): structural
// classifier against the direct test, property (P) shapes, ai-quotient
// reconstruction, the auxiliary contraction lemma, the shape of G_ai for
// connected irreducible graphs, the non-ai-prime families, and the
// absence of irreducible lexicographic sums over C_5 up to 8 vertices.
SweepReport verify_graphs(int max_vertices = 7);

// Equivalence of the Steiner-system conditions on the catalog and small
// designs; the cyclic STS(13) flags are reported, not asserted.
SweepReport verify_steiner();

// Class counts against permutation orbits, level zero, block invariance,
// the cover/gap law and irreducibility consistency up to max_ess (<= 4).
SweepReport verify_poset(int max_ess = 4);

}  // namespace irrbool

#endif  // IRRBOOL_VERIFY_HPP
