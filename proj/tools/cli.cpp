#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "wfg/analysis.hpp"
#include "wfg/error.hpp"
#include "wfg/invariants.hpp"
#include "wfg/io.hpp"
#include "wfg/presentation.hpp"
#include "wfg/vankampen.hpp"

namespace wfg::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  bool json = false;
  std::string tree;  // empty: the supplied tree, else bfs
  std::size_t max_n = 6;
  std::size_t series_order = kDefaultSeriesOrder;
  bool fallback_abelian = false;
  bool simplify = false;
};

template <class T>
T expect(io::Input input, const char* what) {
  if (auto* v = std::get_if<T>(&input)) return std::move(*v);
  throw Error(ErrorKind::SchemaError, std::string("this command expects ") + what);
}

WeightedComplex load_complex(const Options& o) {
  auto k = expect<WeightedComplex>(io::parse_input(o.input), "a complex document");
  require_valid(WeightedComplex{k.vertices, k.edges, k.triangles, std::nullopt});
  const auto strategy = o.tree.empty() ? TreeStrategy::Given : tree_strategy_from_string(o.tree);
  if (strategy == TreeStrategy::Given && o.tree == "given" && !k.tree) {
    throw Error(ErrorKind::MissingTree, "--tree given requested but the input has no \"tree\"");
  }
  k = ensure_tree(k, strategy);
  require_valid(k);
  return k;
}

std::string edge_text(const WeightedComplex& k, EdgeKey e) {
  return "(" + k.vertices[e.a] + "," + k.vertices[e.b] + ")";
}

std::string tree_text(const WeightedComplex& k, const std::vector<EdgeKey>& edges) {
  std::string out;
  for (const auto& e : edges) out += (out.empty() ? "" : " ") + edge_text(k, e);
  return out.empty() ? "{}" : out;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto input = io::parse_input(o.input);
  ValidationReport report;
  if (const auto* k = std::get_if<WeightedComplex>(&input)) {
    report = validate(*k);
  } else if (const auto* c = std::get_if<CoverSpec>(&input)) {
    report = check_hypotheses(*c).report;
  } else {
    const auto& f = std::get<Filtration>(input);
    for (std::size_t i = 0; i < f.stages.size(); ++i) {
      report.merge(validate(f.stages[i]), "stage " + std::to_string(i) + ": ");
      if (i + 1 < f.stages.size() && !is_weighted_inclusion(f.stages[i], f.stages[i + 1])) {
        report.add("filtration", "stage " + std::to_string(i) + " is not contained in stage " + std::to_string(i + 1));
      }
    }
  }
  if (o.json) {
    out << io::to_json(report).dump(2) << '\n';
  } else if (report.ok()) {
    out << "ok\n";
  } else {
    out << "invalid\n";
    for (const auto& v : report.violations) out << "  [" << v.rule << "] " << v.message << '\n';
  }
  return report.ok() ? kExitOk : kExitInputError;
}

int cmd_tree(const Options& o, std::ostream& out) {
  auto k = expect<WeightedComplex>(io::parse_input(o.input), "a complex document");
  require_valid(WeightedComplex{k.vertices, k.edges, k.triangles, std::nullopt});
  const auto strategy = o.tree.empty() ? TreeStrategy::Bfs : tree_strategy_from_string(o.tree);
  const auto tree = compute_maximal_tree(k, strategy);
  if (o.json) {
    json j = io::to_json(tree);
    j["complex"] = io::to_json(with_tree(k, tree.edges));
    out << j.dump(2) << '\n';
  } else {
    out << "tree (" << to_string(tree.strategy) << "): " << tree_text(k, tree.edges) << '\n';
  }
  return kExitOk;
}

int cmd_present(const Options& o, std::ostream& out) {
  const auto k = load_complex(o);
  auto p = present(k);
  if (o.simplify) p = simplify(p);
  if (o.json) {
    out << io::to_json(p).dump(2) << '\n';
  } else {
    out << to_text(p) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto k = load_complex(o);
  const auto f = classify(k);
  if (o.json) {
    out << io::to_json(f).dump(2) << '\n';
  } else {
    out << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_abelianize(const Options& o, std::ostream& out) {
  const auto k = load_complex(o);
  const auto g = abelianization(k);
  if (o.json) {
    out << io::to_json(g).dump(2) << '\n';
  } else {
    out << g.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  auto k = expect<WeightedComplex>(io::parse_input(o.input), "a complex document");
  k.tree.reset();
  require_valid(k);
  const auto h = weighted_homology_graph(k);
  if (o.json) {
    out << io::to_json(h).dump(2) << '\n';
  } else {
    out << "H0 = " << h.h0.to_string() << '\n' << "H1 = " << h.h1.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_lcs(const Options& o, std::ostream& out) {
  const auto k = load_complex(o);
  const auto f = classify(k);
  const auto r = lcs_free_ranks(f, o.max_n, o.series_order);
  if (o.json) {
    json j = io::to_json(r);
    j["factorization"] = io::to_json(f);
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t n = 1; n <= r.ranks.size(); ++n) {
      out << (n > 1 ? " " : "") << 'R' << n << '=' << r.at(n).get_str();
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_vankampen(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = expect<CoverSpec>(io::parse_input(o.input), "a cover document with L, K1, K2, K0");
  const auto r = verify_van_kampen(spec);
  if (o.json) {
    out << io::to_json(r).dump(2) << '\n';
  } else {
    out << "hypotheses: " << (r.hypotheses_ok ? "ok" : "failed") << '\n';
    for (const auto& v : r.hypotheses.report.violations) out << "  [" << v.rule << "] " << v.message << '\n';
    out << "B = A1 ∪ A2: " << (r.lemma.union_of_trees ? "holds" : "fails") << '\n';
    out << "A1 ∩ A2 = A0: " << (r.lemma.intersection_of_trees ? "holds" : "fails") << '\n';
    if (r.hypotheses_ok) {
      out << "amalgamated: " << to_text(r.amalgamated) << '\n';
      out << "direct: " << to_text(r.direct) << '\n';
      out << "Ab(amalgamated) = " << r.amalgamated_abelianization->to_string() << '\n';
      out << "Ab(direct) = " << r.direct_abelianization->to_string() << '\n';
      out << "abelianizations equal: " << (r.abelianizations_equal ? "yes" : "no") << '\n';
      if (r.factorizations) {
        out << "classify(L) = " << r.factorizations->first.to_string() << '\n';
        out << "from generator classes = " << r.factorizations->second.to_string() << '\n';
      }
    }
  }
  if (!r.hypotheses_ok) {
    err << "van Kampen hypotheses do not hold\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

int cmd_filtration(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = expect<Filtration>(io::parse_input(o.input), "a filtration document with \"stages\"");
  const auto r = analyze_filtration(f, {o.fallback_abelian});
  if (r.warning) err << "warning: some stages failed the exactly-two condition; diffed abelianizations instead\n";
  if (o.json) {
    out << io::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < r.stage_factors.size(); ++i) {
    out << "stage " << i << ": " << r.stage_factors[i].to_string()
        << (r.stage_used_abelianization[i] ? "  (abelianization)" : "") << '\n';
  }
  for (const auto& e : r.events) {
    out << "stage " << e.stage << ": " << to_string(e.kind) << ' ' << (e.factor == 0 ? "Z" : "Z/" + std::to_string(e.factor))
        << " (" << e.region << ")\n";
  }
  return kExitOk;
}

int cmd_hamiltonian(const Options& o, std::ostream& out) {
  auto k = expect<WeightedComplex>(io::parse_input(o.input), "a complex document");
  k.tree.reset();
  require_valid(k);
  const auto trees = enumerate_hamiltonian_trees(k);
  const auto r = discriminate_trees(k, trees);
  if (o.json) {
    out << io::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << trees.size() << " Hamiltonian path(s)\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    out << "  " << tree_text(k, trees[i].edges) << "  ->  " << to_string(r.invariants[i]) << '\n';
  }
  out << "distinguishable: " << (r.distinguishable ? "yes" : "no") << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted fundamental groups of weighted simplicial complexes", "wfg"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "JSON input file")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    return sub;
  };
  auto with_tree_flag = [&](CLI::App* sub) {
    sub->add_option("--tree", o.tree, "maximal tree: given|bfs|kruskal-min|kruskal-max")
        ->check(CLI::IsMember({"given", "bfs", "kruskal-min", "kruskal-max"}));
    return sub;
  };

  auto* validate_cmd = add("validate", "check a complex, cover or filtration");
  auto* tree_cmd = with_tree_flag(add("tree", "compute a maximal tree"));
  auto* present_cmd = with_tree_flag(add("present", "print the group presentation"));
  present_cmd->add_flag("--simplify", o.simplify, "apply safe Tietze moves");
  auto* classify_cmd = with_tree_flag(add("classify", "free product of cyclic groups (exactly-two complexes)"));
  auto* abelianize_cmd = with_tree_flag(add("abelianize", "abelianization via Smith normal form"));
  auto* homology_cmd = add("homology", "weighted H0 and H1 of a weighted graph");
  auto* lcs_cmd = with_tree_flag(add("lcs", "free ranks of lower central quotients"));
  lcs_cmd->add_option("--max-n", o.max_n, "largest n")->check(CLI::PositiveNumber);
  lcs_cmd->add_option("--series-order", o.series_order, "power series truncation order");
  auto* vk_cmd = add("vankampen", "check the weighted van Kampen decomposition of a cover");
  auto* filt_cmd = add("filtration", "birth/death events along a filtration");
  filt_cmd->add_flag("--fallback-abelian", o.fallback_abelian, "diff abelianizations where classification fails");
  auto* ham_cmd = add("hamiltonian", "enumerate Hamiltonian paths and compare their invariants");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (tree_cmd->parsed()) return cmd_tree(o, out);
    if (present_cmd->parsed()) return cmd_present(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (abelianize_cmd->parsed()) return cmd_abelianize(o, out);
    if (homology_cmd->parsed()) return cmd_homology(o, out);
    if (lcs_cmd->parsed()) return cmd_lcs(o, out);
    if (vk_cmd->parsed()) return cmd_vankampen(o, out, err);
    if (filt_cmd->parsed()) return cmd_filtration(o, out, err);
    if (ham_cmd->parsed()) return cmd_hamiltonian(o, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return is_precondition_failure(e.kind()) ? kExitPrecondition : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wfg::cli
