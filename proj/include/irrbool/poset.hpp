#ifndef IRRBOOL_POSET_HPP
#define IRRBOOL_POSET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrbool/zhegalkin.hpp"

namespace irrbool {

// Minor-invariant tag: parity of the nonconstant monomial count together
// with the constant term.
enum class Block { Zero, One, Projection, NegatedProjection };

std::string_view to_string(Block b);
std::optional<Block> block_from_string(std::string_view s);
Block block_of(const Zhegalkin& f);

inline constexpr int kMaxPosetEss = 4;

struct ClassRecord {
  Zhegalkin canon;
  int ess = 0;
  std::optional<int> gap;  // absent when ess <= 1
  int level = 0;
  std::vector<Zhegalkin> lower_covers;  // sorted canonical forms
  bool irreducible = false;
  Block block = Block::Zero;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// Classes sorted by (ess, canon).
using ClassUniverse = std::vector<ClassRecord>;

// Every class with ess <= max_ess, found by canonicalizing all truth tables
// on max(max_ess, 1) variables. Covers, levels and irreducibility are
// filled in. Throws std::invalid_argument outside [0, 4].
ClassUniverse enumerate_classes(int max_ess);

// Lower covers of the class of `canon` (sorted canonical forms). Throws
// std::invalid_argument if some one-step minor class is missing from the
// universe.
std::vector<Zhegalkin> lower_covers(const Zhegalkin& canon,
                                    const ClassUniverse& universe);

// Minimal-element stripping; entry n lists the canonical forms in level n.
// Uses the lower_covers fields of the records.
std::vector<std::vector<Zhegalkin>> levels(const ClassUniverse& universe);

// Index of the record for `canon`, or nothing.
std::optional<std::size_t> find_class(const ClassUniverse& universe,
                                      const Zhegalkin& canon);

enum class PosetFormat { Dot, Structured };

// Hasse diagram (cover edges only) in DOT, or the full records as JSON.
// Nodes appear in universe order.
std::string export_poset(const ClassUniverse& universe, PosetFormat format);
PosetFormat poset_format_from_string(std::string_view s);

// Cache: one tab-separated record per line: canon text, ess, gap ('-' when
// absent), block, level, covers joined by ';'.
std::string cache_text(const ClassUniverse& universe);
ClassUniverse parse_cache(std::string_view text);

}  // namespace irrbool

#endif  // IRRBOOL_POSET_HPP
