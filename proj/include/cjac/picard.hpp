#pragma once

// Combinatorics of the canonical degree-(g-1) compactified Jacobian: its strata are
// indexed by a node set S together with a stable multidegree on the partial
// normalization at S; the Neron fiber has one component per degree class.

#include "cjac/classgroup.hpp"
#include "cjac/graph.hpp"
#include "cjac/stability.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cjac {

struct Stratum {
  NodeSet nodes;
  Multidegree multidegree;   // on the partial normalization, parent vertex order
  std::int64_t dim = 0;      // g - |S| + (#pieces - 1)
  std::size_t pieces = 1;    // connected components of the partial normalization

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

namespace detail {

/// Calls visit(NodeSet) for every subset of {0..m-1}, by size then lexicographically.
template <typename Visit>
void for_each_subset(std::size_t m, Visit&& visit) {
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<EdgeIndex> pick(k);
    std::iota(pick.begin(), pick.end(), EdgeIndex{0});
    for (;;) {
      visit(NodeSet{pick});
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace detail

/// All strata, ordered by |S|, then S lexicographically, then multidegree.
inline std::vector<Stratum> strata(const DualGraph& g, const EnumerationLimits& limits = {}) {
  if (g.edge_count() > limits.max_edges)
    throw CapExceeded("strata enumeration: " + std::to_string(g.edge_count()) + " nodes exceeds cap " +
                      std::to_string(limits.max_edges));
  const auto genus = counts(g).genus;
  std::vector<Stratum> out;
  detail::for_each_subset(g.edge_count(), [&](const NodeSet& s) {
    const auto pieces = partial_normalization(g, s);
    const std::int64_t dim =
        genus - static_cast<std::int64_t>(s.size()) + static_cast<std::int64_t>(pieces.size()) - 1;
    for (auto& d : enumerate_stable_disconnected(pieces, limits))
      out.push_back(Stratum{s, std::move(d), dim, pieces.size()});
  });
  return out;
}

struct ComponentAnalysis {
  std::vector<Stratum> components;
  /// False when the maximality rule has not been checked against a closed form for this shape.
  bool validated = false;
};

/// Two components, all nodes joining them.
inline bool is_vine(const DualGraph& g) {
  if (g.vertex_count() != 2 || g.edge_count() == 0) return false;
  for (const auto& e : g.edges())
    if (e.is_loop()) return false;
  return true;
}

/// Irreducible components: the strata of maximal dimension.
inline ComponentAnalysis irreducible_components(const DualGraph& g, const std::vector<Stratum>& all) {
  ComponentAnalysis result;
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (const auto& s : all) top = std::max(top, s.dim);
  for (const auto& s : all)
    if (s.dim == top) result.components.push_back(s);
  result.validated = g.vertex_count() == 1 || is_tree_like(g) || is_vine(g);
  return result;
}

inline ComponentAnalysis irreducible_components(const DualGraph& g, const EnumerationLimits& limits = {}) {
  return irreducible_components(g, strata(g, limits));
}

enum class PicardType { n_type, d_type };

inline std::string to_string(PicardType t) { return t == PicardType::n_type ? "N-type" : "D-type"; }

struct TypeClassification {
  PicardType type = PicardType::n_type;
  std::size_t components = 0;
  BigInt complexity;
};

/// N-type exactly for tree-like curves; otherwise the compactification has fewer
/// components than the Neron fiber.
inline TypeClassification classify_type_g_minus_1(const DualGraph& g, const EnumerationLimits& limits = {}) {
  TypeClassification c;
  c.type = is_tree_like(g) ? PicardType::n_type : PicardType::d_type;
  c.components = irreducible_components(g, limits).components.size();
  c.complexity = complexity(g);
  return c;
}

struct NeronComponent {
  ClassLabel label;
  Multidegree representative;

  friend bool operator==(const NeronComponent&, const NeronComponent&) = default;
};

struct NeronFiber {
  Degree degree = 0;
  std::vector<NeronComponent> components;
  BigInt count;
};

inline NeronFiber neron_fiber(const DualGraph& g, Degree d, const EnumerationLimits& limits = {}) {
  const DegreeClassGroup dcg(g);
  NeronFiber fiber{d, {}, dcg.order()};
  for (auto& rep : dcg.class_representatives(d, limits)) fiber.components.push_back({dcg.class_of(rep), rep});
  return fiber;
}

enum class DGenerality { all_curves, tree_like_only, unknown };

inline std::string to_string(DGenerality v) {
  switch (v) {
    case DGenerality::all_curves: return "all_curves";
    case DGenerality::tree_like_only: return "tree_like_only";
    case DGenerality::unknown: return "unknown";
  }
  return "?";
}

/// Whether a Neron-type compactified Picard scheme in degree d exists: for every curve of
/// genus g when gcd(d-g+1, 2g-2) = 1, otherwise guaranteed only for tree-like curves.
inline DGenerality d_general_verdict(std::int64_t genus, std::int64_t d, const DualGraph* g = nullptr) {
  if (genus < 2) throw PreconditionError("d-generality needs genus >= 2");
  if (std::gcd(d - genus + 1, 2 * genus - 2) == 1) return DGenerality::all_curves;
  if (g && is_tree_like(*g)) return DGenerality::tree_like_only;
  return DGenerality::unknown;
}

struct BoundaryPoint {
  Stratum stratum;                       // deepest stratum, S = all nodes
  VertexIndex twisted_vertex = 0;        // component whose branch points are subtracted
  std::vector<EdgeIndex> branch_points;  // one per node, on the twisted component
  std::string description;
};

/// Limit in the deepest stratum of a strictly semistable multidegree on a vine curve.
/// The component carrying the excess degree loses all of its branch points.
inline BoundaryPoint specialize_two_component(const DualGraph& g, const Multidegree& d) {
  if (!is_vine(g)) throw PreconditionError("specialization rule needs a two-component curve without self-nodes");
  const auto delta = static_cast<Degree>(g.edge_count());
  if (delta < 2) throw PreconditionError("a vine with one node has no strictly semistable boundary limit");
  if (d.size() != 2) throw PreconditionError("multidegree length does not match the graph");
  const Degree g1 = g.vertex(0).genus, g2 = g.vertex(1).genus;
  VertexIndex twisted;
  if (d == Multidegree{g1 - 1, g2 - 1 + delta}) twisted = 1;
  else if (d == Multidegree{g1 - 1 + delta, g2 - 1}) twisted = 0;
  else throw PreconditionError(d.to_string() + " is not strictly semistable");

  BoundaryPoint p;
  std::vector<EdgeIndex> all(g.edge_count());
  std::iota(all.begin(), all.end(), EdgeIndex{0});
  p.stratum = Stratum{NodeSet{all}, Multidegree{g1 - 1, g2 - 1}, g1 + g2, 2};
  p.twisted_vertex = twisted;
  p.branch_points = all;
  const char branch = twisted == 0 ? 'p' : 'q';
  std::string sum;
  for (Degree i = 1; i <= delta; ++i) sum += "-" + std::string(1, branch) + std::to_string(i);
  const std::string l1 = "L_" + g.vertex(0).name, l2 = "L_" + g.vertex(1).name;
  p.description = twisted == 0 ? "(" + l1 + "(" + sum + "), " + l2 + ")" : "(" + l1 + ", " + l2 + "(" + sum + "))";
  return p;
}

}  // namespace cjac
