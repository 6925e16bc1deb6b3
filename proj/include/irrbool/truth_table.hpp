#ifndef IRRBOOL_TRUTH_TABLE_HPP
#define IRRBOOL_TRUTH_TABLE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace irrbool {

inline constexpr int kMaxTableArity = 20;

// A Boolean function f: {0,1}^n -> {0,1} stored as its 2^n values.
// The value at index i is f(a_1, ..., a_n) where a_k is bit (k-1) of i,
// so x_1 is the least significant bit of the index.
class TruthTable {
 public:
  // Throws std::invalid_argument unless 1 <= arity <= kMaxTableArity and
  // bits.size() == 2^arity.
  TruthTable(int arity, std::vector<std::uint8_t> bits);

  // All-zero table of the given arity.
  static TruthTable zero(int arity);

  // Table from the low 2^arity bits of `packed` (arity <= 6).
  static TruthTable from_packed(int arity, std::uint64_t packed);

  int arity() const { return arity_; }
  std::size_t size() const { return bits_.size(); }
  bool at(std::uint64_t point) const { return bits_[point] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  // Inverse of from_packed.
  std::uint64_t packed() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int arity_;
  std::vector<std::uint8_t> bits_;
};

// True iff f depends on variable `var` (1-based), checked pointwise.
bool depends_on(const TruthTable& f, int var);

}  // namespace irrbool

#endif  // IRRBOOL_TRUTH_TABLE_HPP
