#pragma once

// Semistable and stable multidegrees of total degree g-1: d is semistable when
// d_Z >= p_a(Z) - 1 for every connected proper subcurve Z, stable when the
// inequality is strict.

#include "cjac/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cjac {

enum class StabilityStatus { stable, strictly_semistable, unstable };

inline std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable: return "stable";
    case StabilityStatus::strictly_semistable: return "strictly_semistable";
    case StabilityStatus::unstable: return "unstable";
  }
  return "?";
}

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::stable;
  /// Violating subcurves when unstable, saturating subcurves when strictly semistable.
  std::vector<Subcurve> witnesses;

  bool semistable() const noexcept { return status != StabilityStatus::unstable; }
  bool stable() const noexcept { return status == StabilityStatus::stable; }
};

/// Precomputed subcurve thresholds for repeated stability checks on one connected graph.
class StabilityChecker {
 public:
  explicit StabilityChecker(const DualGraph& g, const EnumerationLimits& limits = {})
      : gamma_(g.vertex_count()), genus_(counts(g).genus) {
    for (auto mask : detail::connected_subcurve_masks(g, limits)) {
      auto z = detail::to_subcurve(mask);
      thresholds_.push_back(subcurve_pa(g, z) - 1);
      members_.push_back(std::move(z.vertices));
    }
  }

  std::int64_t genus() const noexcept { return genus_; }
  std::size_t vertex_count() const noexcept { return gamma_; }

  /// Smallest slack d_Z - (p_a(Z) - 1) over all connected proper Z, without witnesses.
  /// Requires |d| = g - 1 (unchecked). Returns 1 when there is no proper subcurve.
  std::int64_t min_slack(std::span<const Degree> d) const {
    std::int64_t best = 1;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      std::int64_t dz = 0;
      for (VertexIndex v : members_[k]) dz += d[v];
      best = std::min(best, dz - thresholds_[k]);
    }
    return best;
  }

  StabilityVerdict check(const Multidegree& d) const {
    if (d.size() != gamma_) throw PreconditionError("multidegree length does not match the graph");
    if (d.total() != genus_ - 1)
      throw DegreeMismatch("total degree " + std::to_string(d.total()) + " differs from g-1 = " +
                           std::to_string(genus_ - 1));
    StabilityVerdict verdict;
    std::vector<Subcurve> saturated;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      std::int64_t dz = 0;
      for (VertexIndex v : members_[k]) dz += d[v];
      if (dz < thresholds_[k]) verdict.witnesses.push_back(Subcurve{members_[k]});
      else if (dz == thresholds_[k]) saturated.push_back(Subcurve{members_[k]});
    }
    if (!verdict.witnesses.empty()) {
      verdict.status = StabilityStatus::unstable;
    } else if (!saturated.empty()) {
      verdict.status = StabilityStatus::strictly_semistable;
      verdict.witnesses = std::move(saturated);
    }
    return verdict;
  }

  /// Index of the first violated subcurve in enumeration order, if any.
  std::optional<Subcurve> first_violation(std::span<const Degree> d) const {
    for (std::size_t k = 0; k < members_.size(); ++k) {
      std::int64_t dz = 0;
      for (VertexIndex v : members_[k]) dz += d[v];
      if (dz < thresholds_[k]) return Subcurve{members_[k]};
    }
    return std::nullopt;
  }

 private:
  std::size_t gamma_;
  std::int64_t genus_;
  std::vector<std::vector<VertexIndex>> members_;
  std::vector<std::int64_t> thresholds_;
};

inline StabilityVerdict check_stability(const DualGraph& g, const Multidegree& d,
                                        const EnumerationLimits& limits = {}) {
  return StabilityChecker(g, limits).check(d);
}

/// Stability on a disconnected curve given by its connected pieces. `d` is indexed by
/// the parent vertex order; each piece must carry total degree genus(piece) - 1.
/// Witnesses are reported in parent vertex indices.
inline StabilityVerdict check_stability(const std::vector<Piece>& pieces, const Multidegree& d,
                                        const EnumerationLimits& limits = {}) {
  StabilityVerdict combined;
  std::vector<Subcurve> violating, saturated;
  for (const auto& piece : pieces) {
    Multidegree local = Multidegree::zero(piece.graph.vertex_count());
    for (std::size_t i = 0; i < piece.vertex_map.size(); ++i) {
      if (piece.vertex_map[i] >= d.size()) throw PreconditionError("multidegree too short for pieces");
      local[i] = d[piece.vertex_map[i]];
    }
    auto verdict = check_stability(piece.graph, local, limits);
    for (auto& w : verdict.witnesses) {
      for (auto& v : w.vertices) v = piece.vertex_map[v];
      std::sort(w.vertices.begin(), w.vertices.end());
      (verdict.status == StabilityStatus::unstable ? violating : saturated).push_back(std::move(w));
    }
  }
  if (!violating.empty()) {
    combined.status = StabilityStatus::unstable;
    combined.witnesses = std::move(violating);
  } else if (!saturated.empty()) {
    combined.status = StabilityStatus::strictly_semistable;
    combined.witnesses = std::move(saturated);
  }
  return combined;
}

namespace detail {

/// Per-vertex lower bounds p_a(C_i) - 1 and the total g - 1 defining the search box.
struct DegreeBox {
  std::vector<Degree> lower;
  std::vector<Degree> upper;
  Degree total = 0;
};

inline DegreeBox semistable_box(const DualGraph& g) {
  DegreeBox box;
  box.total = counts(g).genus - 1;
  Degree sum_lower = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    box.lower.push_back(component_arithmetic_genus(g, v) - 1);
    sum_lower += box.lower.back();
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    box.upper.push_back(box.total - (sum_lower - box.lower[v]));
  return box;
}

/// Visits every integer vector in the box with the prescribed total, lexicographically.
template <typename Visit>
void scan_box(const DegreeBox& box, const EnumerationLimits& limits, Visit&& visit) {
  const std::size_t n = box.lower.size();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto width = static_cast<std::uint64_t>(box.upper[i] - box.lower[i] + 1);
    if (width == 0 || points > limits.max_box / width)
      throw CapExceeded("multidegree box exceeds cap " + std::to_string(limits.max_box));
    points *= width;
  }
  std::vector<Degree> d(box.lower);
  Degree prefix = 0;
  // Odometer over the first n-1 coordinates; the last one is fixed by the total.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i + 1 == n) {
      Degree last = box.total - prefix;
      if (last < box.lower[i] || last > box.upper[i]) return;
      d[i] = last;
      visit(std::span<const Degree>(d));
      return;
    }
    for (Degree x = box.lower[i]; x <= box.upper[i]; ++x) {
      d[i] = x;
      prefix += x;
      rec(i + 1);
      prefix -= x;
    }
  };
  rec(0);
}

inline std::vector<Multidegree> enumerate_by_slack(const DualGraph& g, std::int64_t min_slack,
                                                   const EnumerationLimits& limits) {
  StabilityChecker checker(g, limits);
  std::vector<Multidegree> out;
  scan_box(semistable_box(g), limits, [&](std::span<const Degree> d) {
    if (checker.min_slack(d) >= min_slack) out.emplace_back(std::vector<Degree>(d.begin(), d.end()));
  });
  return out;
}

}  // namespace detail

/// All semistable multidegrees of total degree g-1, lexicographic order.
inline std::vector<Multidegree> enumerate_semistable(const DualGraph& g, const EnumerationLimits& limits = {}) {
  return detail::enumerate_by_slack(g, 0, limits);
}

/// All stable multidegrees of total degree g-1, lexicographic order. May be empty.
inline std::vector<Multidegree> enumerate_stable(const DualGraph& g, const EnumerationLimits& limits = {}) {
  return detail::enumerate_by_slack(g, 1, limits);
}

/// Stable multidegrees of a disconnected curve: the product of the per-piece stable
/// sets, reassembled in parent vertex order and sorted lexicographically.
inline std::vector<Multidegree> enumerate_stable_disconnected(const std::vector<Piece>& pieces,
                                                              const EnumerationLimits& limits = {}) {
  std::size_t parent_size = 0;
  for (const auto& p : pieces)
    for (VertexIndex v : p.vertex_map) parent_size = std::max(parent_size, v + 1);
  std::vector<Multidegree> out{Multidegree::zero(parent_size)};
  for (const auto& piece : pieces) {
    const auto local = enumerate_stable(piece.graph, limits);
    if (local.empty()) return {};
    if (out.size() > limits.max_box / local.size())
      throw CapExceeded("stable multidegree product exceeds cap " + std::to_string(limits.max_box));
    std::vector<Multidegree> next;
    next.reserve(out.size() * local.size());
    for (const auto& partial : out)
      for (const auto& l : local) {
        Multidegree d = partial;
        for (std::size_t i = 0; i < piece.vertex_map.size(); ++i) d[piece.vertex_map[i]] = l[i];
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cjac
