#pragma once

#include "cjac/graph.hpp"
#include "cjac/multidegree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace cjac::testing {

/// Random connected multigraph: a random spanning tree plus extra edges (loops allowed).
inline DualGraph random_graph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges, int max_genus) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<Vertex> vertices;
  std::uniform_int_distribution<int> genus(0, max_genus);
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), genus(rng)});
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.push_back({parent(rng), i});
  }
  const std::size_t budget = std::max(max_edges, edges.size());
  std::uniform_int_distribution<std::size_t> extra(0, budget - edges.size());
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = extra(rng); k > 0; --k) edges.push_back({pick(rng), pick(rng)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return DualGraph(std::move(vertices), std::move(edges));
}

/// Relabels vertex i as perm[i].
inline DualGraph permute(const DualGraph& g, const std::vector<VertexIndex>& perm) {
  std::vector<Vertex> vertices(g.vertex_count());
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) vertices[perm[i]] = g.vertex(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return DualGraph(std::move(vertices), std::move(edges));
}

inline std::vector<VertexIndex> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<VertexIndex> p(n);
  std::iota(p.begin(), p.end(), VertexIndex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline DualGraph triangle() { return DualGraph({{"a", 0}, {"b", 0}, {"c", 0}}, {{0, 1}, {1, 2}, {2, 0}}); }

inline DualGraph path3() { return DualGraph({{"a", 0}, {"b", 0}, {"c", 0}}, {{0, 1}, {1, 2}}); }

inline DualGraph complete4() {
  return DualGraph({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace cjac::testing

namespace cjac {

// readable gtest failure output
inline void PrintTo(const Multidegree& d, std::ostream* os) { *os << d.to_string(); }

}  // namespace cjac
