#ifndef IRRBOOL_MINOR_HPP
#define IRRBOOL_MINOR_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "irrbool/zhegalkin.hpp"

namespace irrbool {

// Certifies g <= f: the essential variables of f grouped into the fibers of
// the identifying substitution. Blocks are ascending; block order follows
// the first variable of each block.
struct MinorWitness {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

enum class GapTag { LinearSum, XYplusX, Triangle, TriangleLinear, GapOne };

std::string_view to_string(GapTag tag);

struct GapClass {
  GapTag tag = GapTag::GapOne;
  // The constant c of the matched family; empty for GapOne.
  std::optional<bool> constant;
  friend bool operator==(const GapClass&, const GapClass&) = default;
};

// Representative of the equivalence class of f: essential variables
// relabeled 1..ess(f), dummies dropped, and the relabeling chosen by
// canonical_labeling() (least sorted monomial-mask sequence among the
// refinement-compatible relabelings). Arity is max(ess(f), 1).
Zhegalkin canonical_form(const Zhegalkin& f);

// True iff f and g agree up to a bijection of essential variables (dummy
// variables are free).
bool is_equivalent(const Zhegalkin& f, const Zhegalkin& g);

// Some witness that g is a simple minor of f, or nothing. Partitions of
// ess(f) are tried in restricted-growth-string order and the first hit is
// returned, so witnesses are reproducible.
std::optional<MinorWitness> is_minor(const Zhegalkin& g, const Zhegalkin& f);

// Applies a witness to f: each block collapses to one variable, numbered by
// block position.
Zhegalkin apply_witness(const Zhegalkin& f, const MinorWitness& w);

// Minimum essential-arity drop over identifications of two essential
// variables. Throws std::domain_error when ess(f) <= 1.
int arity_gap(const Zhegalkin& f);

// Matches f against the arity-gap-two families (up to permutation and the
// constant); GapOne otherwise. Throws std::domain_error when ess(f) <= 1.
GapClass classify_gap(const Zhegalkin& f);

// Canonical forms of all identifications of two essential variables,
// deduplicated and sorted. Every strict minor of f lies below one of these.
std::vector<Zhegalkin> one_step_classes(const Zhegalkin& f);

// The <=-maximal members of one_step_classes(f): the lower covers of f's
// class.
std::vector<Zhegalkin> maximal_strict_minors(const Zhegalkin& f);

// The canonical f' that dominates every one-step identification class of f,
// if such a class exists; nothing for constants, projections, and
// functions with two or more maximal strict minors.
std::optional<Zhegalkin> is_irreducible_direct(const Zhegalkin& f);

}  // namespace irrbool

#endif  // IRRBOOL_MINOR_HPP
