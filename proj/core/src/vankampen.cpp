#include "wfg/vankampen.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "wfg/error.hpp"

namespace wfg {

namespace {

// A piece re-expressed in L's vertex positions.
struct Embedded {
  bool ok = false;
  std::set<VertexIndex> vertices;
  std::map<EdgeKey, Weight> edges;
  std::set<Triangle> triangles;
  std::set<EdgeKey> tree;
};

Embedded embed(const WeightedComplex& piece, const WeightedComplex& whole) {
  Embedded out;
  const auto map = embed_vertices(piece, whole);
  if (!map) return out;
  const auto& pos = *map;
  auto key = [&](VertexIndex x, VertexIndex y) {
    return pos[x] < pos[y] ? EdgeKey{pos[x], pos[y]} : EdgeKey{pos[y], pos[x]};
  };
  out.vertices.insert(pos.begin(), pos.end());
  for (const auto& e : piece.edges) out.edges.emplace(key(e.a, e.b), e.w);
  for (const auto& t : piece.triangles) {
    std::array<VertexIndex, 3> c{pos[t.a], pos[t.v], pos[t.b]};
    std::sort(c.begin(), c.end());
    out.triangles.insert({c[0], c[1], c[2]});
  }
  if (piece.tree)
    for (const auto& e : *piece.tree) out.tree.insert(key(e.a, e.b));
  out.ok = true;
  return out;
}

template <class Set>
Set set_union(const Set& x, const Set& y) {
  Set out = x;
  out.insert(y.begin(), y.end());
  return out;
}

template <class Set>
Set set_intersection(const Set& x, const Set& y) {
  Set out;
  for (const auto& v : x)
    if (y.contains(v)) out.insert(v);
  return out;
}

std::set<EdgeKey> keys(const std::map<EdgeKey, Weight>& edges) {
  std::set<EdgeKey> out;
  for (const auto& [k, w] : edges) out.insert(k);
  return out;
}

struct Pieces {
  Embedded k1, k2, k0;
};

Pieces embed_all(const CoverSpec& spec) {
  return {embed(spec.K1, spec.L), embed(spec.K2, spec.L), embed(spec.K0, spec.L)};
}

}  // namespace

CoverCheck check_hypotheses(const CoverSpec& spec) {
  CoverCheck check;
  auto& report = check.report;

  const std::array<std::pair<const char*, const WeightedComplex*>, 4> named{
      {{"L", &spec.L}, {"K1", &spec.K1}, {"K2", &spec.K2}, {"K0", &spec.K0}}};
  bool trees = true;
  for (const auto& [name, k] : named) {
    report.merge(validate(*k), std::string(name) + ": ");
    if (!k->tree) {
      report.add("missing-tree", std::string(name) + " has no maximal tree");
      trees = false;
    }
  }

  auto subcomplex = [&](const WeightedComplex& inner, const char* inner_name, const WeightedComplex& outer,
                        const char* outer_name) {
    if (!embed_vertices(inner, outer)) {
      report.add("subcomplex", std::string(inner_name) + " has vertices that are not in " + outer_name);
      return;
    }
    const bool holds = trees ? is_weighted_subcomplex(inner, outer) : is_weighted_inclusion(inner, outer);
    if (!holds) {
      report.add("subcomplex", std::string(inner_name) + " is not a weighted subcomplex of " + outer_name);
    }
  };
  subcomplex(spec.K1, "K1", spec.L, "L");
  subcomplex(spec.K2, "K2", spec.L, "L");
  subcomplex(spec.K0, "K0", spec.L, "L");
  subcomplex(spec.K0, "K0", spec.K1, "K1");
  subcomplex(spec.K0, "K0", spec.K2, "K2");

  const auto p = embed_all(spec);
  const auto whole = embed(spec.L, spec.L);
  if (!(p.k1.ok && p.k2.ok && p.k0.ok)) return check;

  if (set_union(p.k1.vertices, p.k2.vertices) != whole.vertices ||
      set_union(keys(p.k1.edges), keys(p.k2.edges)) != keys(whole.edges) ||
      set_union(p.k1.triangles, p.k2.triangles) != whole.triangles) {
    report.add("union", "K1 ∪ K2 differs from L");
  }
  if (set_intersection(p.k1.vertices, p.k2.vertices) != p.k0.vertices ||
      set_intersection(keys(p.k1.edges), keys(p.k2.edges)) != keys(p.k0.edges) ||
      set_intersection(p.k1.triangles, p.k2.triangles) != p.k0.triangles) {
    report.add("intersection", "K1 ∩ K2 differs from K0");
  }

  if (trees) {
    check.lemma.union_of_trees = set_union(p.k1.tree, p.k2.tree) == whole.tree;
    check.lemma.intersection_of_trees = set_intersection(p.k1.tree, p.k2.tree) == p.k0.tree;
  }
  return check;
}

GeneratorPartition generator_partition(const CoverSpec& spec) {
  const auto p = embed_all(spec);
  GeneratorPartition part;
  for (const auto& e : spec.L.edges) {
    const auto k = e.key();
    if (p.k0.edges.contains(k)) {
      part[p.k0.tree.contains(k) ? 0 : 1].push_back(k);
    } else if (p.k1.edges.contains(k)) {
      part[p.k1.tree.contains(k) ? 2 : 3].push_back(k);
    } else if (p.k2.edges.contains(k)) {
      part[p.k2.tree.contains(k) ? 4 : 5].push_back(k);
    }
  }
  return part;
}

Presentation amalgamated_presentation(const CoverSpec& spec) {
  const auto check = check_hypotheses(spec);
  if (!check.ok()) {
    std::string msg = "van Kampen hypotheses fail:";
    for (const auto& v : check.report.violations) msg += "\n  [" + v.rule + "] " + v.message;
    throw Error(ErrorKind::HypothesesFailed, msg);
  }
  const auto p = embed_all(spec);
  const auto& L = spec.L;

  // Generator slots per L edge: K0 edges get a K1-side and a K2-side copy.
  Presentation out;
  std::map<EdgeKey, std::pair<std::size_t, std::size_t>> slot;
  for (const auto& e : L.edges) {
    const auto k = e.key();
    const auto label = generator_label(L, k);
    if (p.k0.edges.contains(k)) {
      out.generators.push_back(label + "'");
      out.generators.push_back(label + "''");
      slot[k] = {out.generators.size() - 2, out.generators.size() - 1};
    } else {
      out.generators.push_back(label);
      slot[k] = {out.generators.size() - 1, out.generators.size() - 1};
    }
  }

  auto side_relators = [&](const Embedded& piece, bool second) {
    auto gen = [&](EdgeKey k) { return second ? slot.at(k).second : slot.at(k).first; };
    for (const auto& k : piece.tree) {
      Word w;
      w.append(gen(k), piece.edges.at(k));
      if (!w.empty()) out.relators.push_back(std::move(w));
    }
    for (const auto& t : piece.triangles) {
      const EdgeKey ab{t.a, t.b}, av{t.a, t.v}, vb{t.v, t.b};
      Word w;
      w.append(gen(ab), -piece.edges.at(ab));
      w.append(gen(av), piece.edges.at(av));
      w.append(gen(vb), piece.edges.at(vb));
      if (!w.empty()) out.relators.push_back(std::move(w));
    }
  };
  side_relators(p.k1, false);
  side_relators(p.k2, true);

  for (const auto& [k, w] : p.k0.edges) {
    Word glue;
    glue.append(slot.at(k).first, 1);
    glue.append(slot.at(k).second, -1);
    out.relators.push_back(std::move(glue));
  }
  return out;
}

VanKampenReport verify_van_kampen(const CoverSpec& spec) {
  VanKampenReport report;
  report.hypotheses = check_hypotheses(spec);
  report.hypotheses_ok = report.hypotheses.ok();
  report.lemma = report.hypotheses.lemma;
  if (!report.hypotheses_ok) return report;

  report.partition = generator_partition(spec);

  auto amalgamated = std::async(std::launch::async, [&] { return amalgamated_presentation(spec); });
  report.direct = present(spec.L);
  report.amalgamated = amalgamated.get();

  report.amalgamated_abelianization = abelian_group_from_matrix(
      abelianized_relation_matrix(report.amalgamated), report.amalgamated.generators.size());
  report.direct_abelianization =
      abelian_group_from_matrix(abelianized_relation_matrix(report.direct), report.direct.generators.size());
  report.abelianizations_equal = *report.amalgamated_abelianization == *report.direct_abelianization;

  if (satisfies_exactly_two(spec.L)) {
    std::set<EdgeKey> faces;
    for (const auto& t : spec.L.triangles) {
      faces.insert({t.a, t.v});
      faces.insert({t.v, t.b});
      faces.insert({t.a, t.b});
    }
    std::vector<std::int64_t> raw;
    for (std::size_t cls = 0; cls < report.partition.size(); ++cls) {
      const bool tree_class = cls % 2 == 0;
      for (const auto& k : report.partition[cls]) {
        const auto w = *spec.L.weight(k.a, k.b);
        raw.push_back(tree_class || faces.contains(k) ? w : 0);
      }
    }
    report.factorizations = std::make_pair(classify(spec.L), normalize_factorization(raw));
  }
  return report;
}

}  // namespace wfg
