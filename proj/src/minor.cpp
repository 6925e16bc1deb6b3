#include "irrbool/minor.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "irrbool/canon.hpp"
#include "irrbool/hypergraph.hpp"

namespace irrbool {

std::string_view to_string(GapTag tag) {
  switch (tag) {
    case GapTag::LinearSum: return "LinearSum";
    case GapTag::XYplusX: return "XYplusX";
    case GapTag::Triangle: return "Triangle";
    case GapTag::TriangleLinear: return "TriangleLinear";
    case GapTag::GapOne: return "GapOne";
  }
  return "?";
}

Zhegalkin canonical_form(const Zhegalkin& f) {
  const Zhegalkin reduced = support_reduced(f);
  const int ess = essential_arity(reduced);
  CanonicalLabeling lab = canonical_labeling(ess, reduced.monomials());
  return make_reduced(reduced.arity(), std::move(lab.edges));
}

bool is_equivalent(const Zhegalkin& f, const Zhegalkin& g) {
  if (essential_arity(f) != essential_arity(g) || f.size() != g.size()) {
    return false;
  }
  return is_isomorphic(hypergraph_of(support_reduced(f)),
                       hypergraph_of(support_reduced(g)))
      .has_value();
}

namespace {

using DegreeProfile = std::array<std::uint16_t, 65>;

DegreeProfile degree_profile(const Zhegalkin& p) {
  DegreeProfile d{};
  for (Monomial m : p.monomials()) ++d[std::popcount(m)];
  return d;
}

// Searches partitions of the essential variables of f for one whose
// identification is equivalent to the target.
class MinorSearch {
 public:
  MinorSearch(const Zhegalkin& g, const Zhegalkin& f)
      : f_(f),
        target_(canonical_form(g)),
        target_profile_(degree_profile(g)),
        target_ess_(essential_arity(g)),
        ess_vars_(essential_variables(f)),
        rgs_(ess_vars_.size(), 0),
        sigma_(f.arity(), 1) {}

  std::optional<MinorWitness> run() {
    const int k = static_cast<int>(ess_vars_.size());
    if (target_ess_ > k) return std::nullopt;
    if (target_ess_ == k) {
      if (canonical_form(f_) != target_) return std::nullopt;
      MinorWitness w;
      for (int v : ess_vars_) w.blocks.push_back({v});
      return w;
    }
    if (descend(0, 0)) return witness();
    return std::nullopt;
  }

 private:
  bool descend(int pos, int blocks) {
    const int k = static_cast<int>(ess_vars_.size());
    if (pos == k) return blocks < k && check(blocks);
    for (int b = 0; b <= blocks; ++b) {
      const int used = std::max(blocks, b + 1);
      if (used + (k - pos - 1) < target_ess_) continue;
      rgs_[pos] = b;
      if (descend(pos + 1, used)) return true;
    }
    return false;
  }

  bool check(int blocks) {
    for (std::size_t t = 0; t < ess_vars_.size(); ++t) {
      sigma_[ess_vars_[t] - 1] = rgs_[t] + 1;
    }
    const Zhegalkin r = substitute(f_, sigma_, blocks);
    if (r.size() != target_.size()) return false;
    if (essential_arity(r) != target_ess_) return false;
    if (degree_profile(r) != target_profile_) return false;
    return canonical_form(r) == target_;
  }

  MinorWitness witness() const {
    MinorWitness w;
    for (std::size_t t = 0; t < ess_vars_.size(); ++t) {
      const auto b = static_cast<std::size_t>(rgs_[t]);
      if (b >= w.blocks.size()) w.blocks.resize(b + 1);
      w.blocks[b].push_back(ess_vars_[t]);
    }
    return w;
  }

  const Zhegalkin& f_;
  Zhegalkin target_;
  DegreeProfile target_profile_;
  int target_ess_;
  std::vector<int> ess_vars_;
  std::vector<int> rgs_;
  std::vector<int> sigma_;
};

int require_two_essential(const Zhegalkin& f, const char* op) {
  const int ess = essential_arity(f);
  if (ess <= 1) {
    throw std::domain_error(std::string(op) +
                            " needs at least two essential variables");
  }
  return ess;
}

struct GapTemplate {
  GapTag tag;
  bool constant;
  Zhegalkin canon;
};

const std::vector<GapTemplate>& gap_templates() {
  static const std::vector<GapTemplate> templates = [] {
    std::vector<GapTemplate> out;
    const std::vector<std::pair<GapTag, std::vector<std::vector<int>>>> base{
        {GapTag::XYplusX, {{1, 2}, {1}}},
        {GapTag::Triangle, {{1, 2}, {1, 3}, {2, 3}}},
        {GapTag::TriangleLinear, {{1, 2}, {1, 3}, {2, 3}, {1}, {2}}},
    };
    for (const auto& [tag, monomials] : base) {
      for (bool c : {false, true}) {
        auto with_c = monomials;
        if (c) with_c.push_back({});
        out.push_back(
            {tag, c, canonical_form(Zhegalkin::from_sets(3, with_c))});
      }
    }
    return out;
  }();
  return templates;
}

}  // namespace

std::optional<MinorWitness> is_minor(const Zhegalkin& g, const Zhegalkin& f) {
  return MinorSearch(g, f).run();
}

Zhegalkin apply_witness(const Zhegalkin& f, const MinorWitness& w) {
  std::vector<int> sigma(f.arity(), 1);
  for (std::size_t b = 0; b < w.blocks.size(); ++b) {
    for (int v : w.blocks[b]) {
      if (v < 1 || v > f.arity()) {
        throw std::invalid_argument("witness names a variable outside f");
      }
      sigma[v - 1] = static_cast<int>(b) + 1;
    }
  }
  return substitute(f, sigma, std::max<int>(1, w.blocks.size()));
}

int arity_gap(const Zhegalkin& f) {
  const int ess = require_two_essential(f, "arity_gap");
  const std::vector<int> vars = essential_variables(f);
  int best = ess;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      best = std::min(best, ess - essential_arity(identify(f, vars[a], vars[b])));
    }
  }
  return best;
}

GapClass classify_gap(const Zhegalkin& f) {
  require_two_essential(f, "classify_gap");
  bool linear = true;
  for (Monomial m : f.monomials()) {
    if (std::popcount(m) > 1) {
      linear = false;
      break;
    }
  }
  if (linear) return {GapTag::LinearSum, f.constant_term()};
  const Zhegalkin canon = canonical_form(f);
  for (const GapTemplate& t : gap_templates()) {
    if (t.canon == canon) return {t.tag, t.constant};
  }
  return {GapTag::GapOne, std::nullopt};
}

std::vector<Zhegalkin> one_step_classes(const Zhegalkin& f) {
  const std::vector<int> vars = essential_variables(f);
  std::vector<Zhegalkin> out;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      out.push_back(canonical_form(identify(f, vars[a], vars[b])));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Zhegalkin> maximal_strict_minors(const Zhegalkin& f) {
  const std::vector<Zhegalkin> classes = one_step_classes(f);
  std::vector<int> ess(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    ess[k] = essential_arity(classes[k]);
  }
  std::vector<Zhegalkin> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    bool dominated = false;
    for (std::size_t m = 0; m < classes.size() && !dominated; ++m) {
      if (ess[m] > ess[k] && is_minor(classes[k], classes[m])) dominated = true;
    }
    if (!dominated) out.push_back(classes[k]);
  }
  return out;
}

std::optional<Zhegalkin> is_irreducible_direct(const Zhegalkin& f) {
  if (essential_arity(f) < 2) return std::nullopt;
  const std::vector<Zhegalkin> classes = one_step_classes(f);
  // A dominating class has the largest essential arity, and distinct
  // classes of equal essential arity are incomparable.
  int top = -1;
  std::size_t top_count = 0;
  std::size_t top_index = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const int e = essential_arity(classes[k]);
    if (e > top) {
      top = e;
      top_count = 1;
      top_index = k;
    } else if (e == top) {
      ++top_count;
    }
  }
  if (top_count != 1) return std::nullopt;
  const Zhegalkin& candidate = classes[top_index];
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (k != top_index && !is_minor(classes[k], candidate)) return std::nullopt;
  }
  return candidate;
}

}  // namespace irrbool
