#pragma once

// Abel-map predicates: naturality in degree g-1 on vine curves, the necessary
// connectivity bound in arbitrary degree, the correction profile a(l) that moves
// (l, g-1-l) into the semistable range, and the degree-1 embedding criterion.

#include "cjac/classgroup.hpp"
#include "cjac/graph.hpp"
#include "cjac/picard.hpp"
#include "cjac/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cjac {

enum class Naturality { natural, not_natural, possibly_natural };

inline std::string to_string(Naturality n) {
  switch (n) {
    case Naturality::natural: return "natural";
    case Naturality::not_natural: return "not_natural";
    case Naturality::possibly_natural: return "possibly_natural";
  }
  return "?";
}

struct NaturalityVerdict {
  Naturality status = Naturality::natural;
  std::string reason;
  std::optional<Multidegree> offending;          // unstable (l, g-1-l) witnessing a twist
  std::optional<Connectivity> epsilon;           // essential connectivity, for the degree-d test
  std::optional<DGenerality> neron_type_exists;  // d-generality of (g, d), when g >= 2

  friend bool operator==(const NaturalityVerdict&, const NaturalityVerdict&) = default;
};

namespace detail {

inline void require_vine_parameters(int g1, int g2, int delta) {
  if (delta < 1) throw PreconditionError("vine needs at least one node");
  if (g1 < 0 || g2 < 0) throw PreconditionError("negative genus");
  if (g1 + g2 + delta - 1 < 2) throw PreconditionError("naturality in degree g-1 needs genus >= 2");
}

}  // namespace detail

/// Degree-(g-1) Abel map of the vine X_delta: natural when delta = 1, otherwise natural
/// iff both components have genus at most 1.
inline NaturalityVerdict natural_g_minus_1_vine(int g1, int g2, int delta) {
  detail::require_vine_parameters(g1, g2, delta);
  NaturalityVerdict v;
  if (delta == 1) {
    v.status = Naturality::natural;
    v.reason = "one node: twisters are determined by their multidegree";
    return v;
  }
  if (g1 <= 1 && g2 <= 1) {
    v.status = Naturality::natural;
    v.reason = "every (l, g-1-l) is semistable";
    return v;
  }
  v.status = Naturality::not_natural;
  const DualGraph vine = make_vine(g1, g2, delta);
  const std::int64_t genus = counts(vine).genus;
  const StabilityChecker checker(vine);
  for (std::int64_t l = genus - 1; l >= 0; --l) {
    Multidegree d{l, genus - 1 - l};
    if (!checker.check(d).semistable()) {
      v.offending = d;
      break;
    }
  }
  const bool exceptional = (g1 == 0 && g2 == 2) || (g1 == 2 && g2 == 0);
  const std::string witness = v.offending ? v.offending->to_string() : std::string("(l, g-1-l)");
  v.reason = exceptional ? "genera {0,2}: " + witness + " is unstable"
                         : "a component of genus >= 2 forces an unstable " + witness;
  return v;
}

/// Only a necessary condition: a natural degree-d Abel map needs d < essential connectivity.
inline NaturalityVerdict naturality_necessary(const DualGraph& g, std::int64_t d) {
  if (d < 1) throw PreconditionError("Abel map degree must be >= 1");
  NaturalityVerdict v;
  v.epsilon = essential_connectivity(g);
  const auto genus = counts(g).genus;
  if (genus >= 2) v.neron_type_exists = d_general_verdict(genus, d, &g);
  if (v.epsilon->at_most(d)) {
    v.status = Naturality::not_natural;
    v.reason = "d = " + std::to_string(d) + " >= essential connectivity " + v.epsilon->to_string();
  } else {
    v.status = Naturality::possibly_natural;
    v.reason = "d = " + std::to_string(d) + " < essential connectivity " + v.epsilon->to_string();
  }
  return v;
}

struct CorrectionEntry {
  std::int64_t l = 0;
  std::int64_t a = 0;
  Multidegree corrected;  // (l - a delta, g-1-l + a delta)

  friend bool operator==(const CorrectionEntry&, const CorrectionEntry&) = default;
};

struct CorrectionProfile {
  std::vector<CorrectionEntry> entries;

  bool all_zero() const {
    for (const auto& e : entries)
      if (e.a != 0) return false;
    return true;
  }
};

/// For l = 0..g-1, the shift a(l) such that (l, g-1-l) + (-a delta, a delta) is semistable.
inline CorrectionProfile correction_profile_vine(int g1, int g2, int delta) {
  detail::require_vine_parameters(g1, g2, delta);
  const DualGraph vine = make_vine(g1, g2, delta);
  const std::int64_t genus = counts(vine).genus;
  CorrectionProfile profile;
  for (std::int64_t l = 0; l <= genus - 1; ++l) {
    const Multidegree d{l, genus - 1 - l};
    auto s = semistabilize(vine, d);
    profile.entries.push_back({l, s.twist[0] - s.twist[1], std::move(s.multidegree)});
  }
  return profile;
}

struct EmbeddingVerdict {
  bool embedding = true;
  std::vector<VertexIndex> offenders;  // rational components attached only through separating nodes
};

/// The degree-1 Abel map fails to be an embedding exactly when some smooth rational
/// component meets the rest of the curve only in separating nodes.
inline EmbeddingVerdict degree1_abel_is_embedding(const DualGraph& g) {
  const auto is_bridge = bridges(g);
  EmbeddingVerdict v;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    if (g.vertex(x).genus != 0 || loop_count(g, x) != 0) continue;
    bool all_bridges = true;
    for (EdgeIndex e : g.incident(x)) all_bridges = all_bridges && is_bridge[e];
    if (all_bridges) v.offenders.push_back(x);
  }
  v.embedding = v.offenders.empty();
  return v;
}

}  // namespace cjac
