#ifndef IRRBOOL_TEXT_FORMAT_HPP
#define IRRBOOL_TEXT_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "irrbool/graph.hpp"
#include "irrbool/hypergraph.hpp"
#include "irrbool/truth_table.hpp"
#include "irrbool/zhegalkin.hpp"

namespace irrbool {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Polynomial text: terms separated by '+', a term is `1` or factors `x<k>`
// separated by '*', variables 1-based, whitespace ignored, `0` is the zero
// polynomial. Repeated monomials cancel. The arity is the largest variable
// index (at least 1) unless `arity` is given, which must cover every
// variable used.
Zhegalkin parse_polynomial(std::string_view text,
                           std::optional<int> arity = std::nullopt);

// Monomials by decreasing degree, then by variable list; the constant last.
std::string format_polynomial(const Zhegalkin& p);

// `tt:<hex> arity=<n>`: hex digits most significant first, index 0 in the
// lowest bit. The arity may come from the text or from `arity`.
TruthTable parse_truth_table(std::string_view text,
                             std::optional<int> arity = std::nullopt);
std::string format_truth_table(const TruthTable& t);
std::string truth_table_hex(const TruthTable& t);

// Either form above, picked by the `tt:` prefix.
Zhegalkin parse_function(std::string_view text,
                         std::optional<int> arity = std::nullopt);

// {"n": 3, "edges": [[], [1, 2]]}; edges sorted by size, then
// lexicographically.
std::string format_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

// `n: i-j, k-l, ...`
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Hypergraph document (leading '{') or edge-list line.
Graph parse_graph(std::string_view text);

}  // namespace irrbool

#endif  // IRRBOOL_TEXT_FORMAT_HPP
