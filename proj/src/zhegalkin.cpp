#include "irrbool/zhegalkin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace irrbool {

std::vector<int> variables_of(Monomial m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Monomial monomial_of(std::span<const int> vars) {
  Monomial m = 0;
  for (int v : vars) {
    if (v < 1 || v > kMaxPolyArity) {
      throw std::invalid_argument("variable index out of range: " +
                                  std::to_string(v));
    }
    m |= variable_bit(v);
  }
  return m;
}

void reduce_gf2(std::vector<Monomial>& monomials) {
  std::sort(monomials.begin(), monomials.end());
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < monomials.size()) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monomials[out++] = monomials[i];
    i = j;
  }
  monomials.resize(out);
}

Zhegalkin make_reduced(int arity, std::vector<Monomial> sorted_unique) {
  return Zhegalkin(Zhegalkin::Reduced{}, arity, std::move(sorted_unique));
}

Zhegalkin::Zhegalkin(int arity, std::vector<Monomial> monomials)
    : arity_(arity), monomials_(std::move(monomials)) {
  if (arity < 1 || arity > kMaxPolyArity) {
    throw std::invalid_argument("polynomial arity must be in [1, 63], got " +
                                std::to_string(arity));
  }
  const Monomial allowed = (Monomial{1} << arity) - 1;
  for (Monomial m : monomials_) {
    if ((m & ~allowed) != 0) {
      throw std::invalid_argument("monomial uses a variable above arity " +
                                  std::to_string(arity));
    }
  }
  reduce_gf2(monomials_);
}

Zhegalkin Zhegalkin::from_sets(int arity,
                               const std::vector<std::vector<int>>& monomials) {
  std::vector<Monomial> masks;
  masks.reserve(monomials.size());
  for (const auto& vars : monomials) masks.push_back(monomial_of(vars));
  return Zhegalkin(arity, std::move(masks));
}

bool Zhegalkin::contains(Monomial m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

Monomial Zhegalkin::support_mask() const {
  Monomial s = 0;
  for (Monomial m : monomials_) s |= m;
  return s;
}

bool Zhegalkin::evaluate(std::uint64_t point) const {
  bool v = false;
  for (Monomial m : monomials_) {
    if ((m & ~point) == 0) v = !v;
  }
  return v;
}

Zhegalkin Zhegalkin::with_arity(int arity) const {
  return Zhegalkin(arity, monomials_);
}

// In-place binary Moebius transform; it is its own inverse over GF(2).
static void moebius(std::vector<std::uint8_t>& a, int arity) {
  const std::size_t size = std::size_t{1} << arity;
  for (int k = 0; k < arity; ++k) {
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) a[m] ^= a[m ^ bit];
    }
  }
}

Zhegalkin zhegalkin_from_truth_table(const TruthTable& t) {
  std::vector<std::uint8_t> coeffs(t.bits().begin(), t.bits().end());
  moebius(coeffs, t.arity());
  std::vector<Monomial> monomials;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m]) monomials.push_back(m);
  }
  return make_reduced(t.arity(), std::move(monomials));
}

TruthTable truth_table_from_zhegalkin(const Zhegalkin& p) {
  if (p.arity() > kMaxTableArity) {
    throw std::invalid_argument("arity " + std::to_string(p.arity()) +
                                " too large for a truth table");
  }
  std::vector<std::uint8_t> values(std::size_t{1} << p.arity());
  for (Monomial m : p.monomials()) values[m] = 1;
  moebius(values, p.arity());
  return TruthTable(p.arity(), std::move(values));
}

std::vector<int> essential_variables(const Zhegalkin& p) {
  return variables_of(p.support_mask());
}

Zhegalkin substitute(const Zhegalkin& f, std::span<const int> sigma,
                     int target_arity) {
  if (static_cast<int>(sigma.size()) != f.arity()) {
    throw std::invalid_argument("substitution must cover all " +
                                std::to_string(f.arity()) + " variables");
  }
  if (target_arity < 1 || target_arity > kMaxPolyArity) {
    throw std::invalid_argument("target arity out of range");
  }
  for (int s : sigma) {
    if (s < 1 || s > target_arity) {
      throw std::invalid_argument("substitution image " + std::to_string(s) +
                                  " outside [1, " +
                                  std::to_string(target_arity) + "]");
    }
  }
  std::vector<Monomial> image;
  image.reserve(f.size());
  for (Monomial m : f.monomials()) {
    Monomial out = 0;
    while (m != 0) {
      out |= variable_bit(sigma[std::countr_zero(m)]);
      m &= m - 1;
    }
    image.push_back(out);
  }
  reduce_gf2(image);
  return make_reduced(target_arity, std::move(image));
}

Zhegalkin identify(const Zhegalkin& f, int i, int j) {
  if (i == j) {
    throw std::invalid_argument("identify needs two distinct variables");
  }
  if (i < 1 || j < 1 || i > f.arity() || j > f.arity()) {
    throw std::invalid_argument("identify: variable out of range");
  }
  const Monomial bj = variable_bit(j);
  const Monomial bi = variable_bit(i);
  std::vector<Monomial> image;
  image.reserve(f.size());
  for (Monomial m : f.monomials()) {
    image.push_back((m & bj) ? ((m & ~bj) | bi) : m);
  }
  reduce_gf2(image);
  return make_reduced(f.arity(), std::move(image));
}

Zhegalkin support_reduced(const Zhegalkin& f) {
  const Monomial support = f.support_mask();
  const int ess = std::popcount(support);
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (Monomial m : f.monomials()) {
    Monomial packed = 0;
    int k = 0;
    for (Monomial s = support; s != 0; s &= s - 1, ++k) {
      if (m & s & (~s + 1)) packed |= Monomial{1} << k;
    }
    out.push_back(packed);
  }
  std::sort(out.begin(), out.end());
  return make_reduced(std::max(ess, 1), std::move(out));
}

}  // namespace irrbool
