#pragma once

#include <string>

#include "wfg/complex.hpp"
#include "wfg/io.hpp"

namespace wfg::test {

inline std::string figure_path(const std::string& name) { return std::string(WFG_DATA_DIR) + "/figures/" + name; }

inline WeightedComplex load_figure(const std::string& name) {
  return io::complex_from_json(io::read_json_file(figure_path(name)));
}

inline CoverSpec load_cover(const std::string& name) { return io::cover_from_json(io::read_json_file(figure_path(name))); }

inline Filtration load_filtration(const std::string& name) {
  return io::filtration_from_json(io::read_json_file(figure_path(name)));
}

// Figure 1 triangle boundary v0 v1 v2 with tree {01, 12}.
inline WeightedComplex circle(Weight w01, Weight w02, Weight w12) {
  WeightedComplex k;
  k.vertices = {"v0", "v1", "v2"};
  k.edges = {{0, 1, w01}, {0, 2, w02}, {1, 2, w12}};
  k.tree = std::vector<EdgeKey>{{0, 1}, {1, 2}};
  return k;
}

// Figure 2: the filled 2-simplex with tree {01, 12}.
inline WeightedComplex filled_simplex(Weight w01, Weight w02, Weight w12) {
  auto k = circle(w01, w02, w12);
  k.triangles = {{0, 1, 2}};
  return k;
}

// Figure 3 (wedge of two circles with one filled triangle), all weights w.
inline WeightedComplex wedge_with_triangle(Weight w) {
  WeightedComplex k;
  k.vertices = {"v0", "v1", "v2", "v3", "v4"};
  k.edges = {{0, 1, w}, {0, 3, w}, {1, 2, w}, {1, 3, w}, {1, 4, w}, {2, 4, w}, {3, 4, w}};
  k.triangles = {{1, 3, 4}};
  k.tree = std::vector<EdgeKey>{{0, 1}, {0, 3}, {1, 2}, {2, 4}};
  return k;
}

inline WeightedComplex path_graph(std::size_t n, Weight w = 1) {
  WeightedComplex k;
  for (std::size_t i = 0; i < n; ++i) k.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) k.edges.push_back({i, i + 1, w});
  return k;
}

inline WeightedComplex four_cycle(Weight w = 1) {
  WeightedComplex k;
  k.vertices = {"v0", "v1", "v2", "v3"};
  k.edges = {{0, 1, w}, {0, 3, w}, {1, 2, w}, {2, 3, w}};
  return k;
}

}  // namespace wfg::test
