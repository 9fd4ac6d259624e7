#pragma once

// Dual graph of a nodal curve: components are vertices weighted by geometric genus,
// nodes are edges. Loops are self-nodes of a component.

#include "cjac/error.hpp"
#include "cjac/linalg.hpp"
#include "cjac/multidegree.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cjac {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
  std::string name;
  int genus = 0;  // geometric genus of the normalized component

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;

  bool is_loop() const noexcept { return u == v; }
  VertexIndex other(VertexIndex w) const noexcept { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Nonempty set of components, stored as sorted vertex indices.
struct Subcurve {
  std::vector<VertexIndex> vertices;

  friend bool operator==(const Subcurve&, const Subcurve&) = default;
  friend auto operator<=>(const Subcurve&, const Subcurve&) = default;
};

/// Set of nodes, stored as sorted edge indices. Parallel edges are distinct.
struct NodeSet {
  std::vector<EdgeIndex> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;
};

struct Counts {
  std::int64_t gamma = 0;  // components
  std::int64_t delta = 0;  // nodes
  std::int64_t b1 = 0;     // first Betti number of the dual graph
  std::int64_t genus = 0;  // arithmetic genus of the curve

  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Limits guarding the exponential enumerations.
struct EnumerationLimits {
  std::size_t max_vertices = 20;       // connected-subcurve enumeration
  std::size_t max_edges = 16;          // node-subset enumeration for strata
  std::uint64_t max_box = 20'000'000;  // multidegree box scan
  std::uint64_t max_classes = 100'000; // explicit class representatives
};

/// Connected vertex-weighted multigraph. Immutable after construction.
class DualGraph {
 public:
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw InvalidInput("dual graph needs at least one vertex");
    std::set<std::string> names;
    for (const auto& v : vertices_) {
      if (v.genus < 0) throw InvalidInput("negative genus on vertex '" + v.name + "'");
      if (!names.insert(v.name).second) throw InvalidInput("duplicate vertex name '" + v.name + "'");
    }
    for (const auto& e : edges_)
      if (e.u >= vertices_.size() || e.v >= vertices_.size())
        throw InvalidInput("edge references unknown vertex");
    adjacency_.resize(vertices_.size());
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
      adjacency_[edges_[i].u].push_back(i);
      if (!edges_[i].is_loop()) adjacency_[edges_[i].v].push_back(i);
    }
    if (!is_connected()) throw InvalidInput("curve must be connected");
  }

  /// Builds from names; edges are (name, name) pairs.
  static DualGraph from_names(std::vector<Vertex> vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, VertexIndex> index;
    for (VertexIndex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].name, i);
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end()) throw InvalidInput("unknown vertex '" + a + "'");
      if (ib == index.end()) throw InvalidInput("unknown vertex '" + b + "'");
      es.push_back({ia->second, ib->second});
    }
    return DualGraph(std::move(vertices), std::move(es));
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Edge indices incident to v; a loop appears once.
  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return adjacency_.at(v); }

  std::optional<VertexIndex> find(const std::string& name) const {
    for (VertexIndex i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].name == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  bool is_connected() const {
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<VertexIndex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexIndex w = stack.back();
      stack.pop_back();
      for (EdgeIndex e : adjacency_[w]) {
        VertexIndex x = edges_[e].other(w);
        if (!seen[x]) {
          seen[x] = true;
          ++reached;
          stack.push_back(x);
        }
      }
    }
    return reached == vertices_.size();
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Builders for the standard families.

/// Two smooth components of genera g1, g2 meeting in delta nodes.
inline DualGraph make_vine(int g1, int g2, int delta) {
  std::vector<Edge> edges(static_cast<std::size_t>(delta), Edge{0, 1});
  return DualGraph({{"C1", g1}, {"C2", g2}}, std::move(edges));
}

/// One component of geometric genus g with `nodes` self-nodes.
inline DualGraph make_irreducible(int geometric_genus, int nodes) {
  std::vector<Edge> edges(static_cast<std::size_t>(nodes), Edge{0, 0});
  return DualGraph({{"C", geometric_genus}}, std::move(edges));
}

// ---------------------------------------------------------------------------
// Counting.

inline Counts counts(const DualGraph& g) {
  Counts c;
  c.gamma = static_cast<std::int64_t>(g.vertex_count());
  c.delta = static_cast<std::int64_t>(g.edge_count());
  c.b1 = c.delta - c.gamma + 1;
  std::int64_t geometric = 0;
  for (const auto& v : g.vertices()) geometric += v.genus;
  c.genus = geometric + c.b1;
  return c;
}

inline std::int64_t loop_count(const DualGraph& g, VertexIndex v) {
  std::int64_t n = 0;
  for (EdgeIndex e : g.incident(v)) n += g.edge(e).is_loop() ? 1 : 0;
  return n;
}

inline void require_vertex(const DualGraph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw PreconditionError("unknown vertex index " + std::to_string(v));
}

/// Arithmetic genus of the component: geometric genus plus its self-nodes.
inline std::int64_t component_arithmetic_genus(const DualGraph& g, VertexIndex v) {
  require_vertex(g, v);
  return g.vertex(v).genus + loop_count(g, v);
}

/// Number of nodes joining the component to the rest of the curve.
inline std::int64_t component_codegree(const DualGraph& g, VertexIndex v) {
  require_vertex(g, v);
  return static_cast<std::int64_t>(g.incident(v).size()) - loop_count(g, v);
}

/// Graph Laplacian, loops ignored.
inline IntMatrix laplacian(const DualGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix lap(n, n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    lap(e.u, e.u) += 1;
    lap(e.v, e.v) += 1;
    lap(e.u, e.v) -= 1;
    lap(e.v, e.u) -= 1;
  }
  return lap;
}

/// Laplacian with the row and column of vertex 0 removed.
inline IntMatrix reduced_laplacian(const DualGraph& g) {
  const IntMatrix lap = laplacian(g);
  const std::size_t n = g.vertex_count() - 1;
  IntMatrix red(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) red(i, j) = lap(i + 1, j + 1);
  return red;
}

/// Number of spanning trees (matrix-tree theorem).
inline BigInt complexity(const DualGraph& g) { return bareiss_determinant(to_big(reduced_laplacian(g))); }

/// True iff the graph is a tree once loops are removed.
inline bool is_tree_like(const DualGraph& g) {
  std::size_t non_loops = 0;
  for (const auto& e : g.edges()) non_loops += e.is_loop() ? 0 : 1;
  return non_loops + 1 == g.vertex_count();
}

/// Bridges (separating nodes) as a per-edge flag. Loops and parallel edges are never bridges.
inline std::vector<bool> bridges(const DualGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> is_bridge(g.edge_count(), false);
  std::vector<int> order(n, -1), low(n, 0);
  int clock = 0;
  std::function<void(VertexIndex, std::optional<EdgeIndex>)> dfs = [&](VertexIndex v,
                                                                        std::optional<EdgeIndex> via) {
    order[v] = low[v] = clock++;
    for (EdgeIndex e : g.incident(v)) {
      if (g.edge(e).is_loop() || (via && *via == e)) continue;
      VertexIndex w = g.edge(e).other(v);
      if (order[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) is_bridge[e] = true;
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  dfs(0, std::nullopt);
  return is_bridge;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // smallest index is the root
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Deletes loops and contracts every bridge. Merged vertices sum their genera and join names with '+'.
inline DualGraph essential_graph(const DualGraph& g) {
  const auto is_bridge = bridges(g);
  detail::DisjointSets sets(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (is_bridge[e]) sets.unite(g.edge(e).u, g.edge(e).v);

  std::map<std::size_t, VertexIndex> class_index;
  std::vector<Vertex> vertices;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::size_t root = sets.find(v);
    auto [it, inserted] = class_index.emplace(root, vertices.size());
    if (inserted) {
      vertices.push_back(g.vertex(v));
    } else {
      vertices[it->second].name += "+" + g.vertex(v).name;
      vertices[it->second].genus += g.vertex(v).genus;
    }
  }
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.is_loop() || is_bridge[e]) continue;
    edges.push_back({class_index.at(sets.find(ed.u)), class_index.at(sets.find(ed.v))});
  }
  return DualGraph(std::move(vertices), std::move(edges));
}

/// Edge connectivity value that may be infinite (a single-vertex graph cannot be disconnected).
class Connectivity {
 public:
  static Connectivity infinite() { return Connectivity(); }
  static Connectivity finite(std::int64_t v) { return Connectivity(v); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  std::int64_t value() const { return value_.value(); }

  /// d >= connectivity
  bool at_most(std::int64_t d) const noexcept { return value_ && *value_ <= d; }

  std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

  friend bool operator==(const Connectivity&, const Connectivity&) = default;

 private:
  Connectivity() = default;
  explicit Connectivity(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

/// Global min cut with unit capacity per edge, loops ignored.
inline std::int64_t edge_connectivity(const DualGraph& g) {
  if (g.vertex_count() < 2) throw PreconditionError("edge connectivity needs two vertices");
  using WeightProperty = boost::property<boost::edge_weight_t, std::int64_t>;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                      WeightProperty>;
  std::map<std::pair<VertexIndex, VertexIndex>, std::int64_t> multiplicity;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    ++multiplicity[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  }
  Graph bg(g.vertex_count());
  for (const auto& [ends, count] : multiplicity) boost::add_edge(ends.first, ends.second, count, bg);
  return boost::stoer_wagner_min_cut(bg, boost::get(boost::edge_weight, bg));
}

inline Connectivity essential_connectivity(const DualGraph& g) {
  const DualGraph ess = essential_graph(g);
  if (ess.vertex_count() == 1) return Connectivity::infinite();
  return Connectivity::finite(edge_connectivity(ess));
}

// ---------------------------------------------------------------------------
// Subcurves.

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbour_masks(const DualGraph& g) {
  std::vector<Mask> nb(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    nb[e.u] |= Mask{1} << e.v;
    nb[e.v] |= Mask{1} << e.u;
  }
  return nb;
}

inline bool mask_connected(Mask set, const std::vector<Mask>& nb) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nb[static_cast<std::size_t>(__builtin_ctzll(f))];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

inline Subcurve to_subcurve(Mask set) {
  Subcurve z;
  for (Mask f = set; f; f &= f - 1) z.vertices.push_back(static_cast<VertexIndex>(__builtin_ctzll(f)));
  return z;
}

inline Mask to_mask(const DualGraph& g, const Subcurve& z) {
  Mask m = 0;
  for (VertexIndex v : z.vertices) {
    require_vertex(g, v);
    m |= Mask{1} << v;
  }
  return m;
}

/// Nonempty proper connected vertex sets, ordered by size then lexicographically.
inline std::vector<Mask> connected_subcurve_masks(const DualGraph& g, const EnumerationLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices || n > 62)
    throw CapExceeded("subcurve enumeration: " + std::to_string(n) + " components exceeds cap " +
                      std::to_string(limits.max_vertices));
  const auto nb = neighbour_masks(g);
  std::vector<Mask> out;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m = 1; m < full; ++m)
    if (mask_connected(m, nb)) out.push_back(m);
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return to_subcurve(a).vertices < to_subcurve(b).vertices;
  });
  return out;
}

}  // namespace detail

inline std::vector<Subcurve> connected_subcurves(const DualGraph& g, const EnumerationLimits& limits = {}) {
  std::vector<Subcurve> out;
  for (auto m : detail::connected_subcurve_masks(g, limits)) out.push_back(detail::to_subcurve(m));
  return out;
}

/// Arithmetic genus of the subcurve, counting its own nodes (loops included).
inline std::int64_t subcurve_pa(const DualGraph& g, const Subcurve& z) {
  if (z.vertices.empty()) throw PreconditionError("subcurve must be nonempty");
  std::vector<bool> inside(g.vertex_count(), false);
  for (VertexIndex v : z.vertices) {
    require_vertex(g, v);
    inside[v] = true;
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{z.vertices.front()};
  seen[z.vertices.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexIndex w = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident(w)) {
      VertexIndex x = g.edge(e).other(w);
      if (inside[x] && !seen[x]) {
        seen[x] = true;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  if (reached != z.vertices.size()) throw PreconditionError("subcurve is not connected");
  std::int64_t genus = 0, internal = 0;
  for (VertexIndex v : z.vertices) genus += g.vertex(v).genus;
  for (const auto& e : g.edges())
    if (inside[e.u] && inside[e.v]) ++internal;
  return genus + internal - static_cast<std::int64_t>(z.vertices.size()) + 1;
}

// ---------------------------------------------------------------------------
// Partial normalization.

/// A connected component of a partial normalization, with maps back to the parent graph.
struct Piece {
  DualGraph graph;
  std::vector<VertexIndex> vertex_map;  // piece vertex -> parent vertex
  std::vector<EdgeIndex> edge_map;      // piece edge -> parent edge
};

inline NodeSet make_node_set(const DualGraph& g, std::vector<EdgeIndex> edges) {
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw PreconditionError("node set lists an edge twice");
  for (EdgeIndex e : edges)
    if (e >= g.edge_count()) throw PreconditionError("unknown edge index " + std::to_string(e));
  return NodeSet{std::move(edges)};
}

/// Normalizes the nodes in S; components ordered by their smallest parent vertex.
inline std::vector<Piece> partial_normalization(const DualGraph& g, const NodeSet& s) {
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeIndex e : s.edges) {
    if (e >= g.edge_count()) throw PreconditionError("unknown edge index " + std::to_string(e));
    removed[e] = true;
  }
  detail::DisjointSets sets(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!removed[e]) sets.unite(g.edge(e).u, g.edge(e).v);

  std::map<std::size_t, std::size_t> piece_of_root;
  std::vector<std::vector<VertexIndex>> piece_vertices;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = piece_of_root.emplace(sets.find(v), piece_vertices.size());
    if (inserted) piece_vertices.emplace_back();
    piece_vertices[it->second].push_back(v);
  }
  std::vector<Piece> pieces;
  pieces.reserve(piece_vertices.size());
  for (const auto& pv : piece_vertices) {
    std::map<VertexIndex, VertexIndex> local;
    std::vector<Vertex> vertices;
    for (VertexIndex v : pv) {
      local.emplace(v, vertices.size());
      vertices.push_back(g.vertex(v));
    }
    std::vector<Edge> edges;
    std::vector<EdgeIndex> edge_map;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (removed[e]) continue;
      auto it = local.find(g.edge(e).u);
      if (it == local.end()) continue;
      edges.push_back({it->second, local.at(g.edge(e).v)});
      edge_map.push_back(e);
    }
    pieces.push_back(Piece{DualGraph(std::move(vertices), std::move(edges)), pv, std::move(edge_map)});
  }
  return pieces;
}

}  // namespace cjac
