#include "wfg/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "wfg/error.hpp"

namespace wfg::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, where + ": " + what);
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer, got " + std::string(j.type_name()));
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    schema_error(where, "integer out of range");
  }
  return j.get<std::int64_t>();
}

std::size_t as_index(const json& j, const std::string& where, std::size_t n_vertices) {
  const auto v = as_int(j, where);
  if (v < 0 || static_cast<std::uint64_t>(v) >= n_vertices) {
    schema_error(where, "vertex index " + std::to_string(v) + " is outside 0.." +
                            (n_vertices == 0 ? std::string("(none)") : std::to_string(n_vertices - 1)));
  }
  return static_cast<std::size_t>(v);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing required key \"") + key + "\"");
  return *it;
}

json edge_pair(EdgeKey e) { return json::array({e.a, e.b}); }

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": malformed JSON at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

WeightedComplex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tetrahedra" || key == "simplices3" || key == "cells") {
      schema_error(where, "simplices of dimension >= 3 are not supported (key \"" + key + "\")");
    }
    if (key != "vertices" && key != "edges" && key != "triangles" && key != "tree" && key != "name") {
      schema_error(where, "unknown key \"" + key + "\"");
    }
  }

  WeightedComplex k;
  const auto& vertices = require(j, "vertices", where);
  if (!vertices.is_array()) schema_error(where + ".vertices", "expected an array of strings");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].is_string()) schema_error(where + ".vertices[" + std::to_string(i) + "]", "expected a string");
    k.vertices.push_back(vertices[i].get<std::string>());
  }
  const std::size_t n = k.vertices.size();

  if (auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array()) schema_error(where + ".edges", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = where + ".edges[" + std::to_string(i) + "]";
      const auto& e = (*it)[i];
      const auto a = as_index(require(e, "a", at), at + ".a", n);
      const auto b = as_index(require(e, "b", at), at + ".b", n);
      const auto w = as_int(require(e, "w", at), at + ".w");
      if (a >= b) schema_error(at, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") must satisfy a < b");
      k.edges.push_back({a, b, w});
    }
  }

  if (auto it = j.find("triangles"); it != j.end()) {
    if (!it->is_array()) schema_error(where + ".triangles", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = where + ".triangles[" + std::to_string(i) + "]";
      const auto& t = (*it)[i];
      if (!t.is_array()) schema_error(at, "expected [a, v, b]");
      if (t.size() > 3) schema_error(at, "simplices of dimension >= 3 are not supported; π1 only needs the 2-skeleton");
      if (t.size() != 3) schema_error(at, "expected exactly three vertex indices");
      const auto a = as_index(t[0], at + "[0]", n);
      const auto v = as_index(t[1], at + "[1]", n);
      const auto b = as_index(t[2], at + "[2]", n);
      if (!(a < v && v < b)) schema_error(at, "triangle must satisfy a < v < b");
      k.triangles.push_back({a, v, b});
    }
  }

  if (auto it = j.find("tree"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) schema_error(where + ".tree", "expected an array of [a, b] pairs");
    std::vector<EdgeKey> tree;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = where + ".tree[" + std::to_string(i) + "]";
      const auto& e = (*it)[i];
      if (!e.is_array() || e.size() != 2) schema_error(at, "expected [a, b]");
      const auto a = as_index(e[0], at + "[0]", n);
      const auto b = as_index(e[1], at + "[1]", n);
      if (a >= b) schema_error(at, "tree edge must satisfy a < b");
      tree.push_back({a, b});
    }
    k.tree = std::move(tree);
  }
  return k;
}

json to_json(const WeightedComplex& k) {
  json j;
  j["vertices"] = k.vertices;
  j["edges"] = json::array();
  for (const auto& e : k.edges) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"w", e.w}});
  j["triangles"] = json::array();
  for (const auto& t : k.triangles) j["triangles"].push_back(json::array({t.a, t.v, t.b}));
  if (k.tree) {
    j["tree"] = json::array();
    for (const auto& e : *k.tree) j["tree"].push_back(edge_pair(e));
  }
  return j;
}

CoverSpec cover_from_json(const json& j) {
  if (!j.is_object()) schema_error("cover", "expected an object");
  return {complex_from_json(require(j, "L", "cover"), "cover.L"),
          complex_from_json(require(j, "K1", "cover"), "cover.K1"),
          complex_from_json(require(j, "K2", "cover"), "cover.K2"),
          complex_from_json(require(j, "K0", "cover"), "cover.K0")};
}

json to_json(const CoverSpec& spec) {
  return {{"L", to_json(spec.L)}, {"K1", to_json(spec.K1)}, {"K2", to_json(spec.K2)}, {"K0", to_json(spec.K0)}};
}

Filtration filtration_from_json(const json& j) {
  Filtration f;
  const auto& stages = require(j, "stages", "filtration");
  if (!stages.is_array()) schema_error("filtration.stages", "expected an array");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    f.stages.push_back(complex_from_json(stages[i], "filtration.stages[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("regions"); it != j.end()) {
    if (!it->is_object()) schema_error("filtration.regions", "expected an object mapping weight to label");
    for (const auto& [key, value] : it->items()) {
      const std::string at = "filtration.regions[\"" + key + "\"]";
      std::uint64_t w = 0;
      try {
        std::size_t used = 0;
        const long long parsed = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        w = static_cast<std::uint64_t>(parsed < 0 ? -parsed : parsed);
      } catch (const std::exception&) {
        schema_error(at, "region keys must be integer weights");
      }
      if (!value.is_string()) schema_error(at, "expected a string label");
      f.regions[w] = value.get<std::string>();
    }
  }
  return f;
}

json to_json(const Filtration& f) {
  json j;
  j["stages"] = json::array();
  for (const auto& s : f.stages) j["stages"].push_back(to_json(s));
  j["regions"] = json::object();
  for (const auto& [w, label] : f.regions) j["regions"][std::to_string(w)] = label;
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  const auto& gens = require(j, "generators", "presentation");
  if (!gens.is_array()) schema_error("presentation.generators", "expected an array of strings");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) schema_error("presentation.generators[" + std::to_string(i) + "]", "expected a string");
    p.generators.push_back(gens[i].get<std::string>());
  }
  const auto& rels = require(j, "relators", "presentation");
  if (!rels.is_array()) schema_error("presentation.relators", "expected an array");
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string at = "presentation.relators[" + std::to_string(r) + "]";
    if (!rels[r].is_array()) schema_error(at, "expected an array of [generator, exponent] pairs");
    Word w;
    for (std::size_t s = 0; s < rels[r].size(); ++s) {
      const std::string sat = at + "[" + std::to_string(s) + "]";
      const auto& syl = rels[r][s];
      if (!syl.is_array() || syl.size() != 2) schema_error(sat, "expected [generator, exponent]");
      const auto g = as_index(syl[0], sat + "[0]", p.generators.size());
      w.append(g, as_int(syl[1], sat + "[1]"));
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

json to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generators;
  j["relators"] = json::array();
  for (const auto& r : p.relators) {
    json word = json::array();
    for (const auto& s : r.syllables()) word.push_back(json::array({s.generator, s.exponent}));
    j["relators"].push_back(std::move(word));
  }
  j["text"] = to_text(p);
  return j;
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) {
    if (d.fits_slong_p()) {
      torsion.push_back(d.get_si());
    } else {
      torsion.push_back(d.get_str());
    }
  }
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

AbelianGroup abelian_group_from_json(const json& j) {
  AbelianGroup g;
  const auto rank = as_int(require(j, "free_rank", "abelian_group"), "abelian_group.free_rank");
  if (rank < 0) schema_error("abelian_group.free_rank", "must be nonnegative");
  g.free_rank = static_cast<std::size_t>(rank);
  const auto& torsion = require(j, "torsion", "abelian_group");
  if (!torsion.is_array()) schema_error("abelian_group.torsion", "expected an array");
  for (const auto& d : torsion) {
    if (d.is_string()) {
      g.torsion.emplace_back(d.get<std::string>());
    } else {
      g.torsion.emplace_back(static_cast<long>(as_int(d, "abelian_group.torsion")));
    }
  }
  return g;
}

json to_json(const CyclicFactorization& f) { return {{"orders", f.orders}, {"text", f.to_string()}}; }

CyclicFactorization factorization_from_json(const json& j) {
  CyclicFactorization f;
  const auto& orders = require(j, "orders", "factorization");
  if (!orders.is_array()) schema_error("factorization.orders", "expected an array");
  std::vector<std::int64_t> raw;
  for (const auto& o : orders) raw.push_back(as_int(o, "factorization.orders"));
  return normalize_factorization(raw);
}

json to_json(const SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back(edge_pair(e));
  return {{"strategy", to_string(t.strategy)}, {"edges", edges}};
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"message", x.message}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const LcsRanks& r) {
  json ranks = json::array();
  for (const auto& x : r.ranks) ranks.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return {{"ranks", ranks}, {"order", r.order}, {"torsion", "not computed"}};
}

json to_json(const WeightedHomology& h) { return {{"h0", to_json(h.h0)}, {"h1", to_json(h.h1)}}; }

json to_json(const BirthDeathEvent& e) {
  return {{"stage", e.stage}, {"kind", to_string(e.kind)}, {"factor", e.factor}, {"region", e.region}};
}

json to_json(const FiltrationReport& r) {
  json stages = json::array();
  for (std::size_t i = 0; i < r.stage_factors.size(); ++i) {
    json s = to_json(r.stage_factors[i]);
    s["abelianization_fallback"] = static_cast<bool>(r.stage_used_abelianization[i]);
    stages.push_back(std::move(s));
  }
  json events = json::array();
  for (const auto& e : r.events) events.push_back(to_json(e));
  return {{"definition", "births/deaths are multiset differences of consecutive cyclic factorizations"},
          {"stages", stages},
          {"events", events},
          {"warning", r.warning}};
}

json to_json(const TreeDiscriminationReport& r) {
  json trees = json::array();
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    json t = to_json(r.trees[i]);
    std::visit([&](const auto& inv) { t["invariant"] = to_json(inv); }, r.invariants[i]);
    t["invariant_kind"] = std::holds_alternative<CyclicFactorization>(r.invariants[i]) ? "factorization" : "abelianization";
    trees.push_back(std::move(t));
  }
  return {{"trees", trees}, {"distinguishable", r.distinguishable}};
}

json to_json(const VanKampenReport& r) {
  json j;
  j["hypotheses_ok"] = r.hypotheses_ok;
  j["hypotheses"] = to_json(r.hypotheses.report);
  j["lemma"] = {{"union_of_trees", r.lemma.union_of_trees}, {"intersection_of_trees", r.lemma.intersection_of_trees}};
  if (!r.hypotheses_ok) return j;
  json part = json::array();
  for (const auto& cls : r.partition) {
    json c = json::array();
    for (const auto& e : cls) c.push_back(edge_pair(e));
    part.push_back(std::move(c));
  }
  j["partition"] = part;
  j["amalgamated"] = to_json(r.amalgamated);
  j["direct"] = to_json(r.direct);
  if (r.amalgamated_abelianization) j["amalgamated_abelianization"] = to_json(*r.amalgamated_abelianization);
  if (r.direct_abelianization) j["direct_abelianization"] = to_json(*r.direct_abelianization);
  j["abelianizations_equal"] = r.abelianizations_equal;
  if (r.factorizations) {
    j["factorizations"] = {{"direct", to_json(r.factorizations->first)},
                           {"from_partition", to_json(r.factorizations->second)},
                           {"equal", r.factorizations->first == r.factorizations->second}};
  }
  return j;
}

Input parse_input(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) schema_error(path.string(), "top-level value must be an object");
  if (j.contains("stages")) return filtration_from_json(j);
  if (j.contains("L") || j.contains("K0") || j.contains("K1") || j.contains("K2")) return cover_from_json(j);
  return complex_from_json(j);
}

}  // namespace wfg::io
