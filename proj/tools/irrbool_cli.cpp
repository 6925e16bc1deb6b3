// irrbool: classification, conversion and exhaustive checks for Boolean
// functions under the simple-minor order.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "irrbool/designs.hpp"
#include "irrbool/graph.hpp"
#include "irrbool/hypergraph.hpp"
#include "irrbool/minor.hpp"
#include "irrbool/poset.hpp"
#include "irrbool/text_format.hpp"
#include "irrbool/verify.hpp"
#include "json.hpp"

using namespace irrbool;
using nlohmann::ordered_json;

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

struct Failure {
  int exit_code;
  std::string kind;
  std::string message;
  std::optional<std::size_t> position;
};

bool g_structured = false;

// Machine-readable failure record on stderr.
int report_failure(const Failure& f) {
  ordered_json rec;
  rec["status"] = "error";
  rec["kind"] = f.kind;
  rec["message"] = f.message;
  if (f.position) rec["position"] = *f.position;
  std::cerr << rec.dump() << "\n";
  return f.exit_code;
}

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitInput, "io", "cannot open " + path, std::nullopt};
  return read_stream(in);
}

// One input per verb: inline argument, --file, or standard input.
struct Input {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* cmd, const std::string& what) {
    cmd->add_option("input", inline_text, what + " (inline)");
    cmd->add_option("--file", file, "read the " + what + " from a file");
  }
  std::string text() const {
    if (!inline_text.empty() && !file.empty()) {
      throw Failure{kExitInput, "usage", "give the input inline or with --file, not both",
                    std::nullopt};
    }
    if (!file.empty()) return read_file(file);
    if (!inline_text.empty()) return inline_text;
    return read_stream(std::cin);
  }
};

Zhegalkin read_function(const std::string& text, std::optional<int> arity) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return polynomial_of(parse_hypergraph(text));
  }
  return parse_function(text, arity);
}

void emit(const ordered_json& doc, const std::string& plain) {
  if (g_structured) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << plain;
  }
}

std::string gap_text(const Zhegalkin& f) {
  if (essential_arity(f) <= 1) return "undefined (ess <= 1)";
  const GapClass c = classify_gap(f);
  std::string out = std::to_string(arity_gap(f));
  if (c.tag != GapTag::GapOne) {
    out += " (" + std::string(to_string(c.tag)) + ", c=" + (*c.constant ? "1" : "0") + ")";
  }
  return out;
}

ordered_json gap_json(const Zhegalkin& f) {
  ordered_json j;
  if (essential_arity(f) <= 1) {
    j["gap"] = nullptr;
    return j;
  }
  const GapClass c = classify_gap(f);
  j["gap"] = arity_gap(f);
  j["family"] = to_string(c.tag);
  j["constant"] = c.constant ? ordered_json(*c.constant ? 1 : 0) : ordered_json();
  return j;
}

int run_convert(const Input& in, std::optional<int> arity, const std::string& to) {
  const Zhegalkin f = read_function(in.text(), arity);
  ordered_json doc;
  std::string plain;
  if (to == "poly" || to == "all") {
    doc["polynomial"] = format_polynomial(f);
    plain += format_polynomial(f) + "\n";
  }
  if (to == "tt" || to == "all") {
    if (f.arity() > kMaxTableArity) {
      if (to == "tt") {
        throw Failure{kExitInput, "input", "truth tables are limited to 20 variables", std::nullopt};
      }
    } else {
      const std::string tt = format_truth_table(truth_table_from_zhegalkin(f));
      doc["truth_table"] = tt;
      plain += tt + "\n";
    }
  }
  if (to == "hypergraph" || to == "all") {
    const std::string h = format_hypergraph(hypergraph_of(f));
    doc["hypergraph"] = ordered_json::parse(h);
    plain += h + "\n";
  }
  emit(doc, plain);
  return 0;
}

int run_classify(const Input& in, std::optional<int> arity) {
  const Zhegalkin f = read_function(in.text(), arity);
  const Zhegalkin canon = canonical_form(f);
  const bool irreducible = is_irreducible_direct(f).has_value();
  ordered_json doc;
  doc["canonical"] = format_polynomial(canon);
  doc["ess"] = essential_arity(f);
  doc.update(gap_json(f));
  doc["block"] = to_string(block_of(f));
  doc["irreducible"] = irreducible;
  std::ostringstream plain;
  plain << "canonical: " << format_polynomial(canon) << "\n"
        << "ess: " << essential_arity(f) << "\n"
        << "gap: " << gap_text(f) << "\n"
        << "block: " << to_string(block_of(f)) << "\n"
        << "irreducible: " << (irreducible ? "yes" : "no") << "\n";
  emit(doc, plain.str());
  return 0;
}

int run_gap(const Input& in, std::optional<int> arity) {
  const Zhegalkin f = read_function(in.text(), arity);
  if (essential_arity(f) <= 1) {
    throw Failure{kExitInput, "domain", "arity gap needs at least two essential variables",
                  std::nullopt};
  }
  emit(gap_json(f), gap_text(f) + "\n");
  return 0;
}

int run_irreducible(const Input& in, std::optional<int> arity) {
  const Zhegalkin f = read_function(in.text(), arity);
  const auto cover = is_irreducible_direct(f);
  const std::vector<Zhegalkin> maximal = maximal_strict_minors(f);
  ordered_json doc;
  doc["irreducible"] = cover.has_value();
  doc["lower_covers"] = ordered_json::array();
  for (const auto& m : maximal) doc["lower_covers"].push_back(format_polynomial(m));
  std::string plain;
  if (cover) {
    plain = "irreducible; unique lower cover: " + format_polynomial(*cover) + "\n";
  } else if (maximal.empty()) {
    plain = "not irreducible; no strict minor\n";
  } else {
    plain = "not irreducible; maximal strict minors:";
    for (std::size_t k = 0; k < maximal.size(); ++k) {
      plain += (k == 0 ? " " : "; ") + format_polynomial(maximal[k]);
    }
    plain += "\n";
  }
  emit(doc, plain);
  return 0;
}

int run_iso(const std::string& a, const std::string& b, std::optional<int> arity) {
  const Zhegalkin f = read_function(a, arity);
  const Zhegalkin g = read_function(b, arity);
  const bool eq = is_equivalent(f, g);
  ordered_json doc;
  doc["equivalent"] = eq;
  doc["canonical"] = {format_polynomial(canonical_form(f)), format_polynomial(canonical_form(g))};
  std::string plain = eq ? "equivalent" : "not equivalent";
  if (eq) plain += "; canonical form " + format_polynomial(canonical_form(f));
  emit(doc, plain + "\n");
  return 0;
}

int run_graph_classify(const Input& in) {
  const Graph g = parse_graph(in.text());
  const JIGraphClass c = classify_join_irreducible(g);
  const bool generic = is_join_irreducible_generic(g);
  ordered_json doc;
  doc["class"] = describe(c);
  doc["join_irreducible"] = c.tag != JITag::NotIrreducible;
  doc["direct_test"] = generic;
  emit(doc, describe(c) + "\n");
  if ((c.tag != JITag::NotIrreducible) != generic) {
    throw Failure{kExitAssertion, "assertion",
                  "structural classifier and direct test disagree on " + format_edge_list(g),
                  std::nullopt};
  }
  return 0;
}

Hypergraph load_design(const std::string& text_or_name) {
  const auto first = text_or_name.find_first_not_of(" \t\r\n");
  const auto last = text_or_name.find_last_not_of(" \t\r\n");
  const std::string name =
      first == std::string::npos ? "" : text_or_name.substr(first, last - first + 1);
  for (const auto& d : builtin_instances()) {
    if (d.name == name) return d.design;
  }
  return parse_hypergraph(text_or_name);
}

int run_steiner(const Input& in) {
  const Hypergraph h = load_design(in.text());
  const SteinerReport r = steiner_report(h);
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  ordered_json doc;
  doc["params"] = {r.params.n, r.params.k, r.params.lambda};
  doc["irreducible"] = r.irreducible;
  if (r.irreducible_direct) doc["irreducible_direct"] = *r.irreducible_direct;
  doc["contractions_isomorphic"] = r.contractions_isomorphic;
  doc["minus2_monomorphic"] = r.minus2_monomorphic;
  doc["two_set_transitive"] =
      r.two_set_transitive ? ordered_json(*r.two_set_transitive) : ordered_json();
  doc["findings"] = r.findings;
  std::ostringstream plain;
  plain << "design: 2-(" << r.params.n << "," << r.params.k << "," << r.params.lambda << ")\n"
        << "irreducible: " << yn(r.irreducible) << "\n"
        << "contractions isomorphic: " << yn(r.contractions_isomorphic) << "\n"
        << "-2-monomorphic: " << yn(r.minus2_monomorphic) << "\n"
        << "2-set transitive: "
        << (r.two_set_transitive ? yn(*r.two_set_transitive) : "not computed") << "\n";
  for (const auto& f : r.findings) plain << "finding: " << f << "\n";
  emit(doc, plain.str());
  if (!r.conditions_agree()) {
    throw Failure{kExitAssertion, "assertion", "Steiner conditions disagree", std::nullopt};
  }
  return 0;
}

int run_poset(int max_ess, const std::string& format, const std::string& out,
              const std::string& cache) {
  const PosetFormat fmt = poset_format_from_string(format);
  ClassUniverse u;
  bool loaded = false;
  if (!cache.empty()) {
    std::ifstream in(cache);
    if (in) {
      ClassUniverse cached = parse_cache(read_stream(in));
      int top = 0;
      for (const auto& r : cached) top = std::max(top, r.ess);
      if (!cached.empty() && top == max_ess) {
        u = std::move(cached);
        loaded = true;
      }
    }
  }
  if (!loaded) {
    u = enumerate_classes(max_ess);
    if (!cache.empty()) {
      std::ofstream c(cache);
      if (!c) throw Failure{kExitInput, "io", "cannot write " + cache, std::nullopt};
      c << cache_text(u);
    }
  }
  const std::string doc = export_poset(u, fmt);
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) throw Failure{kExitInput, "io", "cannot write " + out, std::nullopt};
    o << doc;
    std::cout << u.size() << " classes written to " << out << "\n";
  } else {
    std::cout << doc;
  }
  return 0;
}

int print_sweep(const SweepReport& r) {
  if (g_structured) {
    ordered_json doc;
    doc["sweep"] = r.name;
    doc["status"] = r.ok() ? "ok" : "failed";
    doc["summary"] = r.summary;
    doc["failure_count"] = r.failure_count;
    doc["failures"] = r.failures;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.summary) std::cout << line << "\n";
    for (const auto& f : r.failures) std::cout << "counterexample: " << f << "\n";
    std::cout << r.name << ": " << (r.ok() ? "ok" : "FAILED") << " (" << r.failure_count
              << " failures)\n";
  }
  if (!r.ok()) {
    return report_failure({kExitAssertion, "assertion",
                           r.name + ": " + std::to_string(r.failure_count) + " failures",
                           std::nullopt});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean functions under the simple-minor order"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--structured", g_structured, "emit JSON documents");
  std::string global_format;
  app.add_option("--format", global_format, "plain (default) or structured")
      ->check(CLI::IsMember({"plain", "structured"}));

  std::optional<int> arity;
  const auto add_arity = [&](CLI::App* cmd) {
    cmd->add_option("--arity", arity, "arity override for polynomial or truth-table input");
  };

  Input convert_in, classify_in, gap_in, irr_in, graph_in, steiner_in;
  std::string convert_to = "all";
  auto* convert = app.add_subcommand("convert", "print polynomial, truth table and hypergraph");
  convert_in.attach(convert, "function");
  add_arity(convert);
  convert->add_option("--to", convert_to, "poly, tt, hypergraph or all")
      ->check(CLI::IsMember({"poly", "tt", "hypergraph", "all"}));

  auto* classify = app.add_subcommand("classify", "canonical form, ess, gap, block, irreducibility");
  classify_in.attach(classify, "function");
  add_arity(classify);

  auto* gap = app.add_subcommand("gap", "arity gap and gap-two family");
  gap_in.attach(gap, "function");
  add_arity(gap);

  auto* irreducible = app.add_subcommand("irreducible", "join-irreducibility and lower covers");
  irr_in.attach(irreducible, "function");
  add_arity(irreducible);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "equivalence of two functions or hypergraphs");
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();
  add_arity(iso);

  auto* graph = app.add_subcommand("graph-classify", "join-irreducible graph family");
  graph_in.attach(graph, "graph (edge list or hypergraph document)");

  auto* steiner = app.add_subcommand("steiner-check", "Steiner-system conditions");
  steiner_in.attach(steiner, "design (fano, ag23, sts13 or a hypergraph document)");

  int poset_max_ess = 2;
  std::string poset_format = "dot", poset_out, poset_cache;
  auto* poset = app.add_subcommand("poset", "enumerate the class poset");
  poset->add_option("--max-ess", poset_max_ess, "essential-arity bound (<= 4)");
  poset->add_option("--format", poset_format, "dot or structured");
  poset->add_option("--out", poset_out, "write the document to a file");
  poset->add_option("--cache", poset_cache, "record cache (read if present, else written)");

  auto* verify = app.add_subcommand("verify", "exhaustive and seeded sweeps");
  verify->require_subcommand(1);
  int v_arity = 4, v_corr = 3, v_key = 4, v_graphs = 7, v_ess = 4;
  std::uint64_t v_seed = kDefaultSeed;
  int v_samples = kDefaultSamples;
  auto* v_gap = verify->add_subcommand("gap", "truth-table arity gap sweep");
  v_gap->add_option("--max-arity", v_arity);
  auto* v_correspondence = verify->add_subcommand("correspondence", "quotient maps against minors");
  v_correspondence->add_option("--max-vertices", v_corr);
  auto* v_keylemma = verify->add_subcommand("keylemma", "contraction classes against the direct test");
  v_keylemma->add_option("--max-vertices", v_key);
  for (auto* cmd : {v_correspondence, v_keylemma}) {
    cmd->add_option("--seed", v_seed);
    cmd->add_option("--samples", v_samples);
  }
  auto* v_graph = verify->add_subcommand("graphs", "labeled-graph sweep");
  v_graph->add_option("--max-vertices", v_graphs);
  auto* v_steiner = verify->add_subcommand("steiner", "Steiner catalog report");
  auto* v_poset = verify->add_subcommand("poset", "class poset checks");
  v_poset->add_option("--max-ess", v_ess);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_failure({kExitInput, "usage", e.what(), std::nullopt});
  }
  if (global_format == "structured") g_structured = true;

  try {
    if (*convert) return run_convert(convert_in, arity, convert_to);
    if (*classify) return run_classify(classify_in, arity);
    if (*gap) return run_gap(gap_in, arity);
    if (*irreducible) return run_irreducible(irr_in, arity);
    if (*iso) return run_iso(iso_a, iso_b, arity);
    if (*graph) return run_graph_classify(graph_in);
    if (*steiner) return run_steiner(steiner_in);
    if (*poset) return run_poset(poset_max_ess, poset_format, poset_out, poset_cache);
    if (*v_gap) return print_sweep(verify_gap(v_arity));
    if (*v_correspondence) return print_sweep(verify_correspondence(v_corr, v_seed, v_samples));
    if (*v_keylemma) return print_sweep(verify_keylemma(v_key, v_seed, v_samples));
    if (*v_graph) return print_sweep(verify_graphs(v_graphs));
    if (*v_steiner) return print_sweep(verify_steiner());
    if (*v_poset) return print_sweep(verify_poset(v_ess));
  } catch (const Failure& f) {
    return report_failure(f);
  } catch (const ParseError& e) {
    return report_failure({kExitInput, "parse", e.what(), e.position()});
  } catch (const std::invalid_argument& e) {
    return report_failure({kExitInput, "input", e.what(), std::nullopt});
  } catch (const std::domain_error& e) {
    return report_failure({kExitInput, "domain", e.what(), std::nullopt});
  } catch (const std::exception& e) {
    return report_failure({kExitAssertion, "internal", e.what(), std::nullopt});
  }
  return 0;
}
