#include "irrbool/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "irrbool/minor.hpp"
#include "irrbool/parallel.hpp"
#include "irrbool/text_format.hpp"
#include "irrbool/truth_table.hpp"
#include "json.hpp"

namespace irrbool {

std::string_view to_string(Block b) {
  switch (b) {
    case Block::Zero: return "Zero";
    case Block::One: return "One";
    case Block::Projection: return "Projection";
    case Block::NegatedProjection: return "NegatedProjection";
  }
  return "?";
}

std::optional<Block> block_from_string(std::string_view s) {
  for (Block b : {Block::Zero, Block::One, Block::Projection,
                  Block::NegatedProjection}) {
    if (to_string(b) == s) return b;
  }
  return std::nullopt;
}

Block block_of(const Zhegalkin& f) {
  const bool odd = f.nonconstant_count() % 2 == 1;
  const bool c = f.constant_term();
  if (odd) return c ? Block::NegatedProjection : Block::Projection;
  return c ? Block::One : Block::Zero;
}

namespace {

bool record_less(int ess_a, const Zhegalkin& a, int ess_b, const Zhegalkin& b) {
  if (ess_a != ess_b) return ess_a < ess_b;
  return a < b;
}

}  // namespace

std::optional<std::size_t> find_class(const ClassUniverse& universe,
                                      const Zhegalkin& canon) {
  const int ess = essential_arity(canon);
  auto it = std::lower_bound(
      universe.begin(), universe.end(), canon,
      [ess](const ClassRecord& r, const Zhegalkin& c) {
        return record_less(r.ess, r.canon, ess, c);
      });
  if (it == universe.end() || it->canon != canon) return std::nullopt;
  return static_cast<std::size_t>(it - universe.begin());
}

std::vector<Zhegalkin> lower_covers(const Zhegalkin& canon,
                                    const ClassUniverse& universe) {
  if (essential_arity(canon) <= 1) return {};
  for (const Zhegalkin& m : one_step_classes(canon)) {
    if (!find_class(universe, m)) {
      throw std::invalid_argument("incomplete universe: minor " +
                                  format_polynomial(m) + " of " +
                                  format_polynomial(canon) + " is missing");
    }
  }
  return maximal_strict_minors(canon);
}

std::vector<std::vector<Zhegalkin>> levels(const ClassUniverse& universe) {
  // Covers have smaller ess, so universe order is a topological order.
  std::vector<int> level(universe.size(), 0);
  std::vector<std::vector<Zhegalkin>> out;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    for (const Zhegalkin& c : universe[k].lower_covers) {
      const auto idx = find_class(universe, c);
      if (!idx || *idx >= k) {
        throw std::invalid_argument("cover " + format_polynomial(c) +
                                    " not found below its class");
      }
      level[k] = std::max(level[k], level[*idx] + 1);
    }
    if (static_cast<std::size_t>(level[k]) >= out.size()) out.resize(level[k] + 1);
    out[level[k]].push_back(universe[k].canon);
  }
  return out;
}

ClassUniverse enumerate_classes(int max_ess) {
  if (max_ess < 0 || max_ess > kMaxPosetEss) {
    throw std::invalid_argument("enumerate_classes: max_ess must be in [0, 4]");
  }
  const int n = std::max(max_ess, 1);
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  const std::size_t shards = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  const std::uint64_t per_shard = total / shards;

  std::vector<std::set<Zhegalkin>> found(shards);
  parallel_for(shards, [&](std::size_t s) {
    for (std::uint64_t bits = s * per_shard; bits < (s + 1) * per_shard; ++bits) {
      const Zhegalkin f = zhegalkin_from_truth_table(TruthTable::from_packed(n, bits));
      if (essential_arity(f) > max_ess) continue;
      found[s].insert(canonical_form(f));
    }
  });
  std::set<Zhegalkin> merged;
  for (auto& part : found) merged.insert(part.begin(), part.end());

  ClassUniverse universe;
  universe.reserve(merged.size());
  for (const Zhegalkin& c : merged) {
    ClassRecord r;
    r.canon = c;
    r.ess = essential_arity(c);
    if (r.ess >= 2) r.gap = arity_gap(c);
    r.block = block_of(c);
    universe.push_back(std::move(r));
  }
  std::sort(universe.begin(), universe.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return record_less(a.ess, a.canon, b.ess, b.canon);
            });

  parallel_for(universe.size(), [&](std::size_t k) {
    universe[k].lower_covers = lower_covers(universe[k].canon, universe);
    universe[k].irreducible = universe[k].lower_covers.size() == 1;
  });
  const auto lv = levels(universe);
  for (std::size_t l = 0; l < lv.size(); ++l) {
    for (const Zhegalkin& c : lv[l]) universe[*find_class(universe, c)].level = static_cast<int>(l);
  }
  return universe;
}

PosetFormat poset_format_from_string(std::string_view s) {
  if (s == "dot") return PosetFormat::Dot;
  if (s == "structured" || s == "json") return PosetFormat::Structured;
  throw std::invalid_argument("unknown poset format '" + std::string(s) +
                              "' (expected dot or structured)");
}

std::string export_poset(const ClassUniverse& universe, PosetFormat format) {
  if (format == PosetFormat::Dot) {
    std::ostringstream out;
    out << "digraph poset {\n";
    for (std::size_t k = 0; k < universe.size(); ++k) {
      const auto& r = universe[k];
      out << "  n" << k << " [label=\"" << format_polynomial(r.canon)
          << "\", ess=" << r.ess << ", level=" << r.level << ", block=\""
          << to_string(r.block) << "\"];\n";
    }
    for (std::size_t k = 0; k < universe.size(); ++k) {
      for (const Zhegalkin& c : universe[k].lower_covers) {
        const auto idx = find_class(universe, c);
        if (!idx) throw std::invalid_argument("cover outside the universe");
        out << "  n" << *idx << " -> n" << k << ";\n";
      }
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["classes"] = nlohmann::json::array();
  for (const auto& r : universe) {
    nlohmann::ordered_json rec;
    rec["canon"] = format_polynomial(r.canon);
    rec["ess"] = r.ess;
    rec["gap"] = r.gap ? nlohmann::ordered_json(*r.gap) : nlohmann::ordered_json();
    rec["block"] = to_string(r.block);
    rec["level"] = r.level;
    rec["irreducible"] = r.irreducible;
    rec["lower_covers"] = nlohmann::json::array();
    for (const auto& c : r.lower_covers) rec["lower_covers"].push_back(format_polynomial(c));
    doc["classes"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

std::string cache_text(const ClassUniverse& universe) {
  std::string out;
  for (const auto& r : universe) {
    out += format_polynomial(r.canon);
    out += '\t' + std::to_string(r.ess);
    out += '\t' + (r.gap ? std::to_string(*r.gap) : std::string("-"));
    out += '\t' + std::string(to_string(r.block));
    out += '\t' + std::to_string(r.level);
    out += '\t';
    for (std::size_t k = 0; k < r.lower_covers.size(); ++k) {
      if (k > 0) out += ';';
      out += format_polynomial(r.lower_covers[k]);
    }
    out += '\n';
  }
  return out;
}

ClassUniverse parse_cache(std::string_view text) {
  ClassUniverse universe;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t p = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', p);
      fields.emplace_back(line.substr(p, tab == std::string_view::npos ? line.size() - p : tab - p));
      if (tab == std::string_view::npos) break;
      p = tab + 1;
    }
    const auto bad = [&](const std::string& why) {
      return std::invalid_argument("cache line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 6) throw bad("expected 6 tab-separated fields");
    ClassRecord r;
    try {
      r.canon = parse_polynomial(fields[0]);
      r.ess = std::stoi(fields[1]);
      if (fields[2] != "-") r.gap = std::stoi(fields[2]);
      r.level = std::stoi(fields[4]);
    } catch (const std::exception& e) {
      throw bad(e.what());
    }
    const auto block = block_from_string(fields[3]);
    if (!block) throw bad("unknown block '" + fields[3] + "'");
    r.block = *block;
    if (!fields[5].empty()) {
      std::size_t q = 0;
      for (;;) {
        const std::size_t semi = fields[5].find(';', q);
        r.lower_covers.push_back(parse_polynomial(
            std::string_view(fields[5]).substr(q, semi == std::string::npos ? std::string::npos : semi - q)));
        if (semi == std::string::npos) break;
        q = semi + 1;
      }
    }
    if (r.canon != canonical_form(r.canon) || r.ess != essential_arity(r.canon)) {
      throw bad("record is not in canonical form");
    }
    r.irreducible = r.lower_covers.size() == 1;
    universe.push_back(std::move(r));
  }
  std::sort(universe.begin(), universe.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return record_less(a.ess, a.canon, b.ess, b.canon);
            });
  return universe;
}

}  // namespace irrbool
