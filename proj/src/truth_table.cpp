#include "irrbool/truth_table.hpp"

#include <stdexcept>
#include <string>

namespace irrbool {

TruthTable::TruthTable(int arity, std::vector<std::uint8_t> bits)
    : arity_(arity), bits_(std::move(bits)) {
  if (arity < 1 || arity > kMaxTableArity) {
    throw std::invalid_argument("truth table arity must be in [1, " +
                                std::to_string(kMaxTableArity) + "], got " +
                                std::to_string(arity));
  }
  if (bits_.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("truth table of arity " +
                                std::to_string(arity) + " needs " +
                                std::to_string(std::size_t{1} << arity) +
                                " values, got " + std::to_string(bits_.size()));
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

TruthTable TruthTable::zero(int arity) {
  if (arity < 1 || arity > kMaxTableArity) {
    throw std::invalid_argument("truth table arity out of range");
  }
  return TruthTable(arity, std::vector<std::uint8_t>(std::size_t{1} << arity));
}

TruthTable TruthTable::from_packed(int arity, std::uint64_t packed) {
  if (arity < 1 || arity > 6) {
    throw std::invalid_argument("packed truth tables hold at most 6 variables");
  }
  std::vector<std::uint8_t> bits(std::size_t{1} << arity);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (packed >> i) & 1U;
  return TruthTable(arity, std::move(bits));
}

std::uint64_t TruthTable::packed() const {
  if (arity_ > 6) {
    throw std::invalid_argument("packed truth tables hold at most 6 variables");
  }
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out |= std::uint64_t{bits_[i]} << i;
  }
  return out;
}

bool depends_on(const TruthTable& f, int var) {
  if (var < 1 || var > f.arity()) return false;
  const std::uint64_t bit = std::uint64_t{1} << (var - 1);
  for (std::uint64_t p = 0; p < f.size(); ++p) {
    if ((p & bit) == 0 && f.at(p) != f.at(p | bit)) return true;
  }
  return false;
}

}  // namespace irrbool
