#pragma once

// Dimension bookkeeping for W-loci (line bundles with a nonzero section) and the
// symbolic stratification of the theta divisor along the strata of the compactified
// Jacobian. Only dimensions and descriptors are computed, never point sets.

#include "cjac/graph.hpp"
#include "cjac/picard.hpp"
#include "cjac/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cjac {

/// Dimension of a locus: known, empty, or not determined by the available statements.
class LocusDim {
 public:
  static LocusDim known(std::int64_t d) { return LocusDim(Kind::known, d); }
  static LocusDim empty() { return LocusDim(Kind::empty, -1); }
  static LocusDim unknown() { return LocusDim(Kind::unknown, 0); }

  bool is_known() const noexcept { return kind_ == Kind::known; }
  bool is_empty() const noexcept { return kind_ == Kind::empty; }
  bool is_unknown() const noexcept { return kind_ == Kind::unknown; }
  std::int64_t value() const {
    if (!is_known()) throw PreconditionError("dimension is not known");
    return value_;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::known: return std::to_string(value_);
      case Kind::empty: return "empty";
      case Kind::unknown: return "unknown";
    }
    return "?";
  }

  friend bool operator==(const LocusDim&, const LocusDim&) = default;

 private:
  enum class Kind { known, empty, unknown };
  LocusDim(Kind k, std::int64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::int64_t value_;
};

/// Which dimension statement fired.
enum class WClause {
  excess_component_degree,  // some d_i >= g_i + delta_i: W is everything
  not_semistable,           // |d| = g-1, d unstable: W is everything
  semistable,               // |d| = g-1, d semistable: W and the Abel image have dim g-1
};

inline std::string to_string(WClause c) {
  switch (c) {
    case WClause::excess_component_degree: return "excess_component_degree";
    case WClause::not_semistable: return "not_semistable";
    case WClause::semistable: return "semistable";
  }
  return "?";
}

struct WComponent {
  std::string description;
  LocusDim dim = LocusDim::unknown();
  bool empty = false;
  std::string translate;  // branch points added to a theta divisor, if any
};

struct WAnalysis {
  Multidegree multidegree;
  LocusDim w_dim = LocusDim::unknown();
  std::optional<std::int64_t> abel_dim;  // bound, or exact value when abel_exact
  bool abel_exact = false;
  std::vector<WClause> clauses;
  std::vector<WComponent> components;

  std::size_t nonempty_components() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.empty ? 0 : 1;
    return n;
  }
};

/// Dimension of W_d(X) and of the image of the Abel map for a multidegree with |d| >= 1.
/// Valid for genus >= 2; lower genus yields an unknown result.
inline WAnalysis w_dimension(const DualGraph& g, const Multidegree& d, const EnumerationLimits& limits = {}) {
  if (d.size() != g.vertex_count()) throw PreconditionError("multidegree length does not match the graph");
  const Degree total = d.total();
  if (total < 1) throw PreconditionError("W-locus analysis needs total degree >= 1");
  const auto genus = counts(g).genus;
  WAnalysis w{d, LocusDim::unknown(), std::nullopt, false, {}, {}};
  if (genus < 2) return w;

  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    if (d[i] >= component_arithmetic_genus(g, i) + component_codegree(g, i)) {
      w.clauses.push_back(WClause::excess_component_degree);
      w.w_dim = LocusDim::known(genus);
      w.abel_dim = total - 1;
      break;
    }
  }
  if (total == genus - 1) {
    if (check_stability(g, d, limits).semistable()) {
      w.clauses.push_back(WClause::semistable);
      w.w_dim = LocusDim::known(genus - 1);
      w.abel_dim = genus - 1;
      w.abel_exact = true;
    } else {
      w.clauses.push_back(WClause::not_semistable);
      w.w_dim = LocusDim::known(genus);
      w.abel_dim = std::min(w.abel_dim.value_or(genus - 2), genus - 2);
    }
  }
  return w;
}

struct ThetaStratum {
  Stratum base;
  std::string description;
  LocusDim dim = LocusDim::unknown();
};

namespace detail {

inline std::string degree_label(const Multidegree& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  return d.to_string();
}

inline bool smooth_single(const DualGraph& g) { return g.vertex_count() == 1 && g.edge_count() == 0; }

inline std::string piece_label(const DualGraph& parent, const Piece& piece, const NodeSet& s,
                               std::size_t piece_count) {
  if (smooth_single(piece.graph)) return piece.graph.vertex(0).name;
  std::string base = s.empty() ? "X" : "X_S";
  if (piece_count == 1) return base;
  std::string names;
  for (VertexIndex v : piece.vertex_map) names += (names.empty() ? "" : ",") + parent.vertex(v).name;
  return base + "[" + names + "]";
}

inline std::string theta_label(const Piece& piece, const std::string& label, const Multidegree& local) {
  if (smooth_single(piece.graph)) return "Theta(" + label + ")";
  return "W_{" + degree_label(local) + "}(" + label + ")";
}

/// Theta dimension of one connected piece carrying a stable multidegree of degree h - 1.
inline LocusDim piece_theta_dim(const Piece& piece, const Multidegree& local, const EnumerationLimits& limits) {
  const auto h = counts(piece.graph).genus;
  if (h == 0) return LocusDim::empty();
  if (h == 1) return LocusDim::known(0);
  return w_dimension(piece.graph, local, limits).w_dim;
}

}  // namespace detail

/// One theta stratum per stratum of the compactified Jacobian: the W-locus of the
/// partial normalization in the stratum's multidegree.
inline std::vector<ThetaStratum> theta_strata(const DualGraph& g, const std::vector<Stratum>& all,
                                              const EnumerationLimits& limits = {}) {
  std::vector<ThetaStratum> out;
  for (const auto& st : all) {
    const auto pieces = partial_normalization(g, st.nodes);
    std::vector<std::string> labels;
    std::vector<Multidegree> locals;
    std::vector<std::int64_t> genera;
    std::vector<LocusDim> dims;
    for (const auto& p : pieces) {
      Multidegree local = Multidegree::zero(p.graph.vertex_count());
      for (std::size_t i = 0; i < p.vertex_map.size(); ++i) local[i] = st.multidegree[p.vertex_map[i]];
      labels.push_back(detail::piece_label(g, p, st.nodes, pieces.size()));
      genera.push_back(counts(p.graph).genus);
      dims.push_back(detail::piece_theta_dim(p, local, limits));
      locals.push_back(std::move(local));
    }

    ThetaStratum ts{st, {}, LocusDim::empty()};
    std::int64_t total_genus = 0;
    for (auto h : genera) total_genus += h;
    bool unknown = false;
    std::optional<std::int64_t> best;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (dims[j].is_unknown()) unknown = true;
      if (!dims[j].is_known()) continue;
      const std::int64_t dim = dims[j].value() + (total_genus - genera[j]);
      best = best ? std::max(*best, dim) : dim;
    }
    if (unknown) ts.dim = LocusDim::unknown();
    else if (best) ts.dim = LocusDim::known(*best);

    if (pieces.size() == 1) {
      ts.description = detail::theta_label(pieces[0], labels[0], locals[0]);
    } else {
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        std::string term = detail::theta_label(pieces[j], labels[j], locals[j]);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
          if (k == j) continue;
          term += " x Pic^{" + detail::degree_label(locals[k]) + "}(" + labels[k] + ")";
        }
        ts.description += (j ? " u " : "") + term;
      }
    }
    out.push_back(std::move(ts));
  }
  return out;
}

inline std::vector<ThetaStratum> theta_strata(const DualGraph& g, const EnumerationLimits& limits = {}) {
  return theta_strata(g, strata(g, limits), limits);
}

/// Which component of a vine carries the excess degree delta in a strictly semistable multidegree.
enum class ExcessSide { first, second };

/// W-locus of the strictly semistable multidegree (g1-1, g2-1+delta) on a vine (or its mirror
/// (g1-1+delta, g2-1) for ExcessSide::first). It is the union of a pullback of
/// Theta(C_low) x Pic(C_high) and a pullback of Pic(C_low) x (translate of Theta(C_high)).
inline WAnalysis w_components_vine_strictly_ss(int g1, int g2, int delta, ExcessSide side = ExcessSide::second) {
  if (delta < 1) throw PreconditionError("vine needs at least one node");
  if (g1 < 0 || g2 < 0) throw PreconditionError("negative genus");
  const DualGraph vine = make_vine(g1, g2, delta);
  const std::int64_t genus = counts(vine).genus;
  const bool second = side == ExcessSide::second;
  const Multidegree d = second ? Multidegree{g1 - 1, g2 - 1 + delta} : Multidegree{g1 - 1 + delta, g2 - 1};

  WAnalysis w{d, LocusDim::unknown(), std::nullopt, false, {}, {}};
  if (d.total() >= 1) w = w_dimension(vine, d);

  const int low_genus = second ? g1 : g2;
  const int high_genus = second ? g2 : g1;
  const std::string low = second ? "C1" : "C2";
  const std::string high = second ? "C2" : "C1";
  const char branch = second ? 'q' : 'p';
  std::string translate;
  for (int i = 1; i <= delta; ++i) translate += (i > 1 ? "+" : "") + std::string(1, branch) + std::to_string(i);

  auto pic = [](const std::string& c, std::int64_t k) { return "Pic^{" + std::to_string(k) + "}(" + c + ")"; };
  auto ordered = [&](const std::string& low_factor, const std::string& high_factor) {
    return second ? low_factor + " x " + high_factor : high_factor + " x " + low_factor;
  };

  const auto component_dim = [&](bool empty) { return empty ? LocusDim::empty() : LocusDim::known(genus - 1); };
  WComponent w1{"(nu^*)^{-1}(" + ordered("Theta(" + low + ")", pic(high, high_genus - 1 + delta)) + ")",
                component_dim(low_genus == 0), low_genus == 0, ""};
  WComponent w2{"(nu^*)^{-1}(" + ordered(pic(low, low_genus - 1), "(Theta(" + high + ")+" + translate + ")") + ")",
                component_dim(high_genus == 0), high_genus == 0, translate};
  w.components = {std::move(w1), std::move(w2)};
  if (w.nonempty_components() == 0) {
    // both sides rational: no line bundle of this multidegree has a section, whatever
    // the semistable clause says; the Abel map is undefined (a negative entry)
    w.w_dim = LocusDim::empty();
    w.abel_dim.reset();
    w.abel_exact = false;
  }
  return w;
}

}  // namespace cjac
