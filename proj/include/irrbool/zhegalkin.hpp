#ifndef IRRBOOL_ZHEGALKIN_HPP
#define IRRBOOL_ZHEGALKIN_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "irrbool/truth_table.hpp"

namespace irrbool {

// A monomial is the set of its variables: bit (k-1) stands for x_k, and the
// empty mask is the constant monomial 1.
using Monomial = std::uint64_t;

inline constexpr int kMaxPolyArity = 63;

inline Monomial variable_bit(int var) { return Monomial{1} << (var - 1); }
std::vector<int> variables_of(Monomial m);
Monomial monomial_of(std::span<const int> vars);

// Multilinear polynomial over GF(2) in x_1..x_n (algebraic normal form).
//
// Monomials are kept sorted ascending by mask value and duplicate-free;
// construction reduces its input over GF(2), so repeated monomials cancel
// in pairs.
class Zhegalkin {
 public:
  // The zero polynomial in one variable.
  Zhegalkin() = default;

  // Throws std::invalid_argument if arity is outside [1, kMaxPolyArity] or a
  // monomial names a variable above `arity`.
  Zhegalkin(int arity, std::vector<Monomial> monomials);

  static Zhegalkin from_sets(int arity,
                             const std::vector<std::vector<int>>& monomials);

  int arity() const { return arity_; }
  std::span<const Monomial> monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool is_zero() const { return monomials_.empty(); }
  bool contains(Monomial m) const;
  bool constant_term() const {
    return !monomials_.empty() && monomials_.front() == 0;
  }
  std::size_t nonconstant_count() const {
    return monomials_.size() - (constant_term() ? 1 : 0);
  }

  // Union of all monomials: the essential variables.
  Monomial support_mask() const;

  bool evaluate(std::uint64_t point) const;

  // Same polynomial viewed in a different number of variables. Throws when
  // a variable in use would fall outside the new range.
  Zhegalkin with_arity(int arity) const;

  friend bool operator==(const Zhegalkin&, const Zhegalkin&) = default;
  friend auto operator<=>(const Zhegalkin&, const Zhegalkin&) = default;

 private:
  struct Reduced {};
  Zhegalkin(Reduced, int arity, std::vector<Monomial> sorted_unique)
      : arity_(arity), monomials_(std::move(sorted_unique)) {}
  friend Zhegalkin make_reduced(int, std::vector<Monomial>);

  int arity_ = 1;
  std::vector<Monomial> monomials_;
};

// Builds a polynomial from monomials that are already sorted and unique.
// No validation; for hot loops that produce reduced output themselves.
Zhegalkin make_reduced(int arity, std::vector<Monomial> sorted_unique);

// Sorts and cancels repeated monomials in pairs.
void reduce_gf2(std::vector<Monomial>& monomials);

Zhegalkin zhegalkin_from_truth_table(const TruthTable& t);
TruthTable truth_table_from_zhegalkin(const Zhegalkin& p);

// Ascending 1-based indices of the variables p depends on.
std::vector<int> essential_variables(const Zhegalkin& p);
inline int essential_arity(const Zhegalkin& p) {
  return std::popcount(p.support_mask());
}

// f(x_sigma(1), ..., x_sigma(n)) reduced with x^2 = x and GF(2)
// cancellation. sigma has one 1-based entry per variable of f, each in
// [1, target_arity].
Zhegalkin substitute(const Zhegalkin& f, std::span<const int> sigma,
                     int target_arity);

// Replaces x_j by x_i; the arity is unchanged and x_j becomes a dummy.
// Throws std::invalid_argument if i == j or either is out of range.
Zhegalkin identify(const Zhegalkin& f, int i, int j);

// Relabels the essential variables to 1..ess(f) in increasing order and
// drops dummies; arity becomes max(ess(f), 1).
Zhegalkin support_reduced(const Zhegalkin& f);

}  // namespace irrbool

#endif  // IRRBOOL_ZHEGALKIN_HPP
