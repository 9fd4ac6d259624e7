#pragma once

// Brute-force reference implementations for cross-checking. Everything here reads only
// the raw vertex and edge lists of a DualGraph and re-derives what it needs; nothing is
// shared with the main computation paths. Exponential on purpose.

#include "cjac/error.hpp"
#include "cjac/graph.hpp"
#include "cjac/linalg.hpp"
#include "cjac/multidegree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cjac::oracle {

struct OracleConfig {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 10;
  int box_radius = 4;
  int coset_depth = 6;
};

enum class Equivalence {
  equivalent,              // explicit twister found
  distinct_totals,         // definitely not equivalent
  not_found_within_depth,  // no twister with coefficients in [-depth, depth]
  inconclusive,            // input outside the oracle bounds
};

inline std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::distinct_totals: return "distinct_totals";
    case Equivalence::not_found_within_depth: return "not_found_within_depth";
    case Equivalence::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace impl {

inline void check_bounds(const DualGraph& g, const OracleConfig& cfg) {
  if (g.vertices().size() > cfg.max_vertices || g.edges().size() > cfg.max_edges)
    throw CapExceeded("graph outside oracle bounds");
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x];
  return x;
}

/// Is the vertex set (bit i = vertex i) connected using only edges inside it?
inline bool induced_connected(const DualGraph& g, unsigned set) {
  const int n = static_cast<int>(g.vertices().size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  for (const auto& e : g.edges()) {
    const int a = static_cast<int>(e.u), b = static_cast<int>(e.v);
    if (!((set >> a) & 1u) || !((set >> b) & 1u)) continue;
    parent[find_root(parent, a)] = find_root(parent, b);
  }
  int root = -1;
  for (int i = 0; i < n; ++i) {
    if (!((set >> i) & 1u)) continue;
    const int r = find_root(parent, i);
    if (root < 0) root = r;
    else if (r != root) return false;
  }
  return root >= 0;
}

struct Constraint {
  unsigned set;
  std::int64_t bound;  // need sum over set >= bound
};

/// For each connected proper subset Z: bound = (genera + inner edges - |Z| + 1) - 1.
inline std::vector<Constraint> subcurve_constraints(const DualGraph& g) {
  const int n = static_cast<int>(g.vertices().size());
  std::vector<Constraint> out;
  const unsigned full = (1u << n) - 1;
  for (unsigned set = 1; set < full; ++set) {
    if (!induced_connected(g, set)) continue;
    std::int64_t genera = 0, inner = 0, size = 0;
    for (int i = 0; i < n; ++i)
      if ((set >> i) & 1u) {
        genera += g.vertices()[i].genus;
        ++size;
      }
    for (const auto& e : g.edges())
      if (((set >> e.u) & 1u) && ((set >> e.v) & 1u)) ++inner;
    out.push_back({set, genera + inner - size});
  }
  // Singletons first so out-of-box points are rejected quickly.
  std::stable_partition(out.begin(), out.end(), [](const Constraint& c) { return (c.set & (c.set - 1)) == 0; });
  return out;
}

inline std::int64_t genus_of(const DualGraph& g) {
  std::int64_t s = 0;
  for (const auto& v : g.vertices()) s += v.genus;
  return s + static_cast<std::int64_t>(g.edges().size()) - static_cast<std::int64_t>(g.vertices().size()) + 1;
}

}  // namespace impl

/// Counts spanning trees by testing every (gamma-1)-subset of non-loop edges.
inline BigInt spanning_trees_bruteforce(const DualGraph& g, const OracleConfig& cfg = {}) {
  impl::check_bounds(g, cfg);
  const int n = static_cast<int>(g.vertices().size());
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    if (e.u != e.v) edges.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
  const int m = static_cast<int>(edges.size());
  BigInt count = 0;
  for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
    if (__builtin_popcount(pick) != n - 1) continue;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    bool acyclic = true;
    for (int k = 0; k < m && acyclic; ++k) {
      if (!((pick >> k) & 1u)) continue;
      const int a = impl::find_root(parent, edges[k].first), b = impl::find_root(parent, edges[k].second);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) ++count;  // n-1 acyclic edges on n vertices span
  }
  return count;
}

/// Searches n in [-depth, depth]^gamma with n_0 = 0 such that d - d2 = -L n.
inline Equivalence equivalent_bruteforce(const DualGraph& g, const Multidegree& d, const Multidegree& d2,
                                         const OracleConfig& cfg = {}) {
  if (g.vertices().size() > cfg.max_vertices || g.edges().size() > cfg.max_edges) return Equivalence::inconclusive;
  const std::size_t n = g.vertices().size();
  if (d.size() != n || d2.size() != n) throw PreconditionError("multidegree length does not match the graph");
  std::int64_t t1 = 0, t2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    t1 += d[i];
    t2 += d2[i];
  }
  if (t1 != t2) return Equivalence::distinct_totals;

  // adjacency counts, loops dropped
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges())
    if (e.u != e.v) {
      ++adj[e.u][e.v];
      ++adj[e.v][e.u];
    }
  std::vector<std::int64_t> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = d[i] - d2[i];

  const int depth = cfg.coset_depth;
  std::vector<std::int64_t> coeff(n, 0);
  if (n == 1) return target[0] == 0 ? Equivalence::equivalent : Equivalence::not_found_within_depth;
  for (std::size_t i = 1; i < n; ++i) coeff[i] = -depth;
  for (;;) {
    // (-L n)_i = sum_j adj[i][j] (n_j - n_i)
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < n; ++j) v += adj[i][j] * (coeff[j] - coeff[i]);
      match = v == target[i];
    }
    if (match) return Equivalence::equivalent;
    std::size_t i = 1;
    while (i < n && coeff[i] == depth) coeff[i++] = -depth;
    if (i == n) break;
    ++coeff[i];
  }
  return Equivalence::not_found_within_depth;
}

struct BruteforceStability {
  std::vector<Multidegree> semistable;
  std::vector<Multidegree> stable;
};

/// Scans an enlarged box around the per-component bounds with an independent predicate.
inline BruteforceStability semistable_bruteforce(const DualGraph& g, const OracleConfig& cfg = {}) {
  impl::check_bounds(g, cfg);
  const std::size_t n = g.vertices().size();
  const std::int64_t total = impl::genus_of(g) - 1;
  std::vector<std::int64_t> lower(n);
  std::int64_t sum_lower = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t loops = 0;
    for (const auto& e : g.edges()) loops += (e.u == i && e.v == i) ? 1 : 0;
    lower[i] = g.vertices()[i].genus + loops - 1;
    sum_lower += lower[i];
  }
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = lower[i] - cfg.box_radius;
    hi[i] = total - (sum_lower - lower[i]) + cfg.box_radius;
  }
  const auto constraints = impl::subcurve_constraints(g);

  BruteforceStability out;
  std::vector<std::int64_t> d(lo);
  for (;;) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) partial += d[i];
    d[n - 1] = total - partial;
    if (d[n - 1] >= lo[n - 1] && d[n - 1] <= hi[n - 1]) {
      bool semistable = true, stable = true;
      for (const auto& c : constraints) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
          if ((c.set >> i) & 1u) s += d[i];
        if (s < c.bound) {
          semistable = stable = false;
          break;
        }
        if (s == c.bound) stable = false;
      }
      if (semistable) out.semistable.emplace_back(d);
      if (stable) out.stable.emplace_back(d);
    }
    if (n == 1) break;
    std::size_t i = n - 1;
    // odometer on coordinates 0..n-2, last fastest among them
    bool carry = true;
    while (carry && i > 0) {
      --i;
      if (d[i] < hi[i]) {
        ++d[i];
        carry = false;
      } else {
        d[i] = lo[i];
      }
    }
    if (carry) break;
  }
  std::sort(out.semistable.begin(), out.semistable.end());
  std::sort(out.stable.begin(), out.stable.end());
  return out;
}

/// Global min cut by trying every bipartition; loops ignored.
inline std::int64_t min_cut_bruteforce(const DualGraph& g, const OracleConfig& cfg = {}) {
  impl::check_bounds(g, cfg);
  const std::size_t n = g.vertices().size();
  if (n < 2) throw PreconditionError("min cut needs two vertices");
  std::int64_t best = -1;
  for (unsigned side = 1; side < (1u << (n - 1)); ++side) {
    std::int64_t cut = 0;
    for (const auto& e : g.edges()) cut += (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) ? 1 : 0;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

}  // namespace cjac::oracle
