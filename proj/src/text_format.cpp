#include "irrbool/text_format.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "json.hpp"

namespace irrbool {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  long number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 1'000'000) fail("number too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Zhegalkin parse_polynomial(std::string_view text, std::optional<int> arity) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty polynomial");
  std::vector<Monomial> monomials;
  int max_var = 0;
  do {
    const std::size_t term_start = cur.pos();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const long c = cur.number();
      if (c == 1) {
        monomials.push_back(0);
      } else if (c != 0) {
        throw ParseError("a numeric term must be 0 or 1", term_start);
      }
      continue;
    }
    Monomial m = 0;
    do {
      if (cur.peek() != 'x') cur.fail("expected 'x<k>', '1' or '0'");
      cur.accept('x');
      const std::size_t at = cur.pos();
      const long v = cur.number();
      if (v == 0) throw ParseError("variable indices start at 1", at);
      if (v > kMaxPolyArity) {
        throw ParseError("variable index above " + std::to_string(kMaxPolyArity),
                         at);
      }
      max_var = std::max(max_var, static_cast<int>(v));
      m |= variable_bit(static_cast<int>(v));
    } while (cur.accept('*'));
    monomials.push_back(m);
  } while (cur.accept('+'));
  if (!cur.done()) cur.fail("unexpected character");
  if (arity && *arity < max_var) {
    throw ParseError("arity=" + std::to_string(*arity) +
                         " is below the largest variable x" +
                         std::to_string(max_var),
                     0);
  }
  return Zhegalkin(arity.value_or(std::max(max_var, 1)), std::move(monomials));
}

std::string format_polynomial(const Zhegalkin& p) {
  if (p.is_zero()) return "0";
  std::vector<std::vector<int>> terms;
  for (Monomial m : p.monomials()) terms.push_back(variables_of(m));
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (t.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k > 0) out += "*";
      out += "x" + std::to_string(t[k]);
    }
  }
  return out;
}

static std::size_t hex_digits(int arity) {
  return arity <= 2 ? 1 : (std::size_t{1} << arity) / 4;
}

std::string truth_table_hex(const TruthTable& t) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::size_t digits = hex_digits(t.arity());
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t index = d * 4 + b;
      if (index < t.size() && t.at(index)) nibble |= 1 << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::string format_truth_table(const TruthTable& t) {
  return "tt:" + truth_table_hex(t) + " arity=" + std::to_string(t.arity());
}

TruthTable parse_truth_table(std::string_view text, std::optional<int> arity) {
  std::string_view s = trim(text);
  if (s.substr(0, 3) != "tt:") throw ParseError("expected 'tt:' prefix", 0);
  const std::size_t hex_start = text.find("tt:") + 3;
  std::size_t end = 3;
  while (end < s.size() && std::isxdigit(static_cast<unsigned char>(s[end]))) ++end;
  const std::string_view hex = s.substr(3, end - 3);
  if (hex.empty()) throw ParseError("expected hex digits", hex_start);
  std::string_view rest = trim(s.substr(end));
  std::optional<int> inline_arity;
  if (!rest.empty()) {
    if (rest.front() == ';' || rest.front() == ',') rest = trim(rest.substr(1));
    if (rest.substr(0, 6) != "arity=") {
      throw ParseError("expected 'arity=<n>'", text.size() - rest.size());
    }
    Cursor cur(rest.substr(6));
    inline_arity = static_cast<int>(cur.number());
    if (!cur.done()) cur.fail("trailing input after arity");
  }
  if (inline_arity && arity && *inline_arity != *arity) {
    throw ParseError("conflicting arity attributes", 0);
  }
  const std::optional<int> n = inline_arity ? inline_arity : arity;
  if (!n) throw ParseError("truth tables need an explicit arity= attribute", 0);
  if (*n < 1 || *n > kMaxTableArity) {
    throw ParseError("truth-table arity must be in [1, 20]", 0);
  }
  const std::size_t digits = hex_digits(*n);
  if (hex.size() != digits) {
    throw ParseError("arity " + std::to_string(*n) + " needs " +
                         std::to_string(digits) + " hex digits, got " +
                         std::to_string(hex.size()),
                     hex_start);
  }
  std::vector<std::uint8_t> bits(std::size_t{1} << *n);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    const int nibble = std::isdigit(static_cast<unsigned char>(c))
                           ? c - '0'
                           : std::toupper(static_cast<unsigned char>(c)) - 'A' + 10;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t index = d * 4 + b;
      if ((nibble >> b) & 1) {
        if (index >= bits.size()) {
          throw ParseError("hex value exceeds 2^" + std::to_string(bits.size()),
                           hex_start);
        }
        bits[index] = 1;
      }
    }
  }
  return TruthTable(*n, std::move(bits));
}

Zhegalkin parse_function(std::string_view text, std::optional<int> arity) {
  if (trim(text).substr(0, 3) == "tt:") {
    return zhegalkin_from_truth_table(parse_truth_table(text, arity));
  }
  return parse_polynomial(text, arity);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::vector<std::vector<int>> edges;
  for (Edge e : h.edges()) edges.push_back(variables_of(e));
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  nlohmann::ordered_json doc;
  doc["n"] = h.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges) doc["edges"].push_back(e);
  return doc.dump();
}

Hypergraph parse_hypergraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed hypergraph document: ") + e.what(),
                     e.byte);
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto lists = doc.at("edges").get<std::vector<std::vector<int>>>();
    return Hypergraph::from_lists(n, lists);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed hypergraph document: ") + e.what(), 0);
  }
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(i) + "-" + std::to_string(j);
    first = false;
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty graph");
  const long n = cur.number();
  if (n > kMaxHypergraphVertices) cur.fail("too many vertices");
  cur.expect(':');
  std::vector<std::pair<int, int>> edges;
  if (!cur.done()) {
    do {
      const std::size_t at = cur.pos();
      const long i = cur.number();
      cur.expect('-');
      const long j = cur.number();
      if (i < 1 || j < 1 || i > n || j > n) {
        throw ParseError("edge endpoint outside [1, " + std::to_string(n) + "]", at);
      }
      if (i == j) throw ParseError("loops are not allowed", at);
      edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    } while (cur.accept(','));
  }
  if (!cur.done()) cur.fail("unexpected character");
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == '{') {
    return Graph::from_hypergraph(parse_hypergraph(s));
  }
  return parse_edge_list(s);
}

}  // namespace irrbool
