#ifndef IRRBOOL_DESIGNS_HPP
#define IRRBOOL_DESIGNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "irrbool/hypergraph.hpp"

namespace irrbool {

// 2-(n, k, lambda) design: all blocks have size k and every pair of points
// lies in exactly lambda blocks.
struct DesignParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// Parameters iff h has at least one block, is k-uniform and pair-regular.
std::optional<DesignParams> design_parameters(const Hypergraph& h);

bool is_steiner(const Hypergraph& h);
bool is_steiner_triple(const Hypergraph& h);

// Induced sub-hypergraph on V \ {i, j}: the blocks avoiding both points,
// vertices renumbered in order. Needs at least three vertices.
Hypergraph delete_pair(const Hypergraph& h, int i, int j);

// All pair deletions are isomorphic. Throws std::invalid_argument below two
// vertices.
bool is_minus2_monomorphic(const Hypergraph& h);

struct SteinerReport {
  DesignParams params;
  bool irreducible = false;             // contraction-class criterion
  std::optional<bool> irreducible_direct;  // direct test, when it was run
  bool contractions_isomorphic = false;
  bool minus2_monomorphic = false;
  std::optional<bool> two_set_transitive;  // empty above the automorphism cap
  std::vector<std::string> findings;       // violated equivalences

  bool conditions_agree() const {
    return irreducible == contractions_isomorphic &&
           contractions_isomorphic == minus2_monomorphic &&
           (!irreducible_direct || *irreducible_direct == irreducible);
  }
};

// Evaluates irreducibility, isomorphism of all pair contractions and
// -2-monomorphy, plus 2-set transitivity of Aut(h). Disagreements are
// listed in `findings`. Throws std::invalid_argument for non-Steiner input.
SteinerReport steiner_report(const Hypergraph& h, bool run_direct = true);

Hypergraph fano_plane();
Hypergraph affine_plane_3();
// Develops base blocks {1,2,5} and {1,3,8} under x -> x+1 mod 13.
Hypergraph cyclic_sts13();

struct NamedDesign {
  std::string name;
  Hypergraph design;
};

// fano, ag23, sts13.
std::vector<NamedDesign> builtin_instances();

}  // namespace irrbool

#endif  // IRRBOOL_DESIGNS_HPP
