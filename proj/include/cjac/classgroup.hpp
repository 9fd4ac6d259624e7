#pragma once

// Twister lattice (image of the Laplacian) and the degree class group: multidegrees
// of fixed total degree modulo twister multidegrees.

#include "cjac/graph.hpp"
#include "cjac/linalg.hpp"
#include "cjac/stability.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cjac {

/// Multidegree of the twister sum n_i C_i, namely -L n.
inline Multidegree twister_multidegree(const DualGraph& g, std::span<const Degree> n) {
  if (n.size() != g.vertex_count()) throw PreconditionError("coefficient vector length does not match the graph");
  const IntMatrix lap = laplacian(g);
  Multidegree out = Multidegree::zero(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) out[i] -= lap(i, j) * n[j];
  return out;
}

inline Multidegree twister_multidegree(const DualGraph& g, const std::vector<Degree>& n) {
  return twister_multidegree(g, std::span<const Degree>(n));
}

/// Basis of the twister lattice: -L e_i for i = 1..gamma-1 (the column of vertex 0 is
/// the negated sum of the others).
struct TwisterLattice {
  std::vector<Multidegree> basis;
  std::size_t rank = 0;
};

inline TwisterLattice twister_lattice(const DualGraph& g) {
  TwisterLattice lattice;
  for (VertexIndex i = 1; i < g.vertex_count(); ++i) {
    std::vector<Degree> e(g.vertex_count(), 0);
    e[i] = 1;
    lattice.basis.push_back(twister_multidegree(g, e));
  }
  lattice.rank = lattice.basis.size();
  return lattice;
}

/// Canonical coset label: residues modulo the nontrivial invariant factors.
struct ClassLabel {
  std::vector<BigInt> residues;
  Degree total_degree = 0;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
    if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
    return a.residues < b.residues;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (i) s += ",";
      s += residues[i].str();
    }
    return s + "]@" + std::to_string(total_degree);
  }
};

/// Smith-normal-form presentation of the degree class group.
///
/// Dropping the coordinate of vertex 0 identifies total-degree-0 multidegrees with
/// Z^{gamma-1}; the twister lattice becomes the column span of the reduced Laplacian R.
/// With U R V = diag(s), the class of d is (U d')_i mod s_i where d' drops vertex 0.
/// Representatives lift residue vectors through U^{-1} and put the remaining degree on
/// vertex 0.
class DegreeClassGroup {
 public:
  explicit DegreeClassGroup(const DualGraph& g) : gamma_(g.vertex_count()) {
    if (gamma_ > 1) {
      reduced_ = to_big(reduced_laplacian(g));
      snf_ = smith_normal_form(reduced_);
    }
    order_ = 1;
    for (std::size_t i = 0; i < snf_.diagonal.size(); ++i) {
      if (snf_.diagonal[i] == 0) throw PreconditionError("degenerate Laplacian (graph not connected?)");
      if (snf_.diagonal[i] != 1) {
        nontrivial_.push_back(i);
        invariant_factors_.push_back(snf_.diagonal[i]);
      }
      order_ *= snf_.diagonal[i];
    }
  }

  std::size_t vertex_count() const noexcept { return gamma_; }
  const std::vector<BigInt>& invariant_factors() const noexcept { return invariant_factors_; }
  const BigInt& order() const noexcept { return order_; }
  const SmithForm& smith_form() const noexcept { return snf_; }

  ClassLabel class_of(const Multidegree& d) const {
    check_length(d);
    ClassLabel label{{}, d.total()};
    for (std::size_t k : nontrivial_) {
      BigInt y = 0;
      for (std::size_t j = 0; j + 1 < gamma_; ++j) y += snf_.u(k, j) * BigInt(d[j + 1]);
      const BigInt& s = snf_.diagonal[k];
      BigInt r = y % s;
      if (r < 0) r += s;
      label.residues.push_back(r);
    }
    return label;
  }

  bool equivalent(const Multidegree& a, const Multidegree& b) const {
    return a.total() == b.total() && class_of(a) == class_of(b);
  }

  /// Representative of a label: residues lifted through U^{-1}, remainder on vertex 0.
  Multidegree representative(const ClassLabel& label) const {
    if (label.residues.size() != nontrivial_.size()) throw PreconditionError("label does not belong to this group");
    std::vector<BigInt> y(gamma_ > 0 ? gamma_ - 1 : 0, BigInt{0});
    for (std::size_t i = 0; i < nontrivial_.size(); ++i) y[nontrivial_[i]] = label.residues[i];
    Multidegree d = Multidegree::zero(gamma_);
    Degree rest = label.total_degree;
    for (std::size_t r = 0; r + 1 < gamma_; ++r) {
      BigInt x = 0;
      for (std::size_t c = 0; c + 1 < gamma_; ++c) x += snf_.u_inverse(r, c) * y[c];
      d[r + 1] = x.convert_to<Degree>();
      rest -= d[r + 1];
    }
    d[0] = rest;
    return d;
  }

  /// One representative per class of the given total degree, ordered by residue vector.
  std::vector<Multidegree> class_representatives(Degree total_degree, const EnumerationLimits& limits = {}) const {
    if (order_ > BigInt(limits.max_classes))
      throw CapExceeded("class group of order " + order_.str() + " exceeds cap " +
                        std::to_string(limits.max_classes));
    std::vector<Multidegree> out;
    ClassLabel label{std::vector<BigInt>(nontrivial_.size(), BigInt{0}), total_degree};
    for (;;) {
      out.push_back(representative(label));
      // Mixed-radix increment, last residue fastest.
      std::size_t i = label.residues.size();
      while (i > 0) {
        --i;
        if (++label.residues[i] < invariant_factors_[i]) break;
        label.residues[i] = 0;
        if (i == 0) return out;
      }
      if (label.residues.empty()) return out;
    }
  }

  /// Coefficients n (normalized to min entry 0) with -L n = t, if t lies in the twister lattice.
  std::optional<std::vector<Degree>> twister_coefficients(const Multidegree& t) const {
    check_length(t);
    if (t.total() != 0) return std::nullopt;
    std::vector<Degree> n(gamma_, 0);
    if (gamma_ == 1) return n;
    // R n' = -t'  with  U R V = D:  D z = U(-t'),  n' = V z.
    const std::size_t m = gamma_ - 1;
    std::vector<BigInt> z(m);
    for (std::size_t i = 0; i < m; ++i) {
      BigInt rhs = 0;
      for (std::size_t j = 0; j < m; ++j) rhs -= snf_.u(i, j) * BigInt(t[j + 1]);
      if (rhs % snf_.diagonal[i] != 0) return std::nullopt;
      z[i] = rhs / snf_.diagonal[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
      BigInt x = 0;
      for (std::size_t j = 0; j < m; ++j) x += snf_.v(i, j) * z[j];
      n[i + 1] = x.convert_to<Degree>();
    }
    const Degree lo = *std::min_element(n.begin(), n.end());
    for (auto& x : n) x -= lo;
    return n;
  }

 private:
  void check_length(const Multidegree& d) const {
    if (d.size() != gamma_) throw PreconditionError("multidegree length does not match the graph");
  }

  std::size_t gamma_;
  BigMatrix reduced_;
  SmithForm snf_;
  std::vector<std::size_t> nontrivial_;
  std::vector<BigInt> invariant_factors_;
  BigInt order_;
};

inline DegreeClassGroup degree_class_group(const DualGraph& g) { return DegreeClassGroup(g); }

inline ClassLabel class_of(const DegreeClassGroup& dcg, const Multidegree& d) { return dcg.class_of(d); }

inline bool equivalent(const DegreeClassGroup& dcg, const Multidegree& a, const Multidegree& b) {
  return dcg.equivalent(a, b);
}

inline std::vector<Multidegree> class_representatives(const DegreeClassGroup& dcg, Degree total_degree,
                                                      const EnumerationLimits& limits = {}) {
  return dcg.class_representatives(total_degree, limits);
}

struct Semistabilization {
  Multidegree multidegree;        // semistable, equivalent to the input
  std::vector<Degree> twist;      // n with output = input + (-L n), min entry 0
  bool used_fallback = false;     // chip-firing hit its cap and the coset scan was used
};

/// Moves a degree-(g-1) multidegree into the semistable range by chip-firing: while some
/// connected subcurve Z has d_Z < p_a(Z) - 1, fire the complement of Z. If the firing
/// budget runs out the semistable set is scanned for the matching class.
inline Semistabilization semistabilize(const DualGraph& g, const Multidegree& d,
                                       const EnumerationLimits& limits = {}, std::size_t max_firings = 10'000) {
  if (d.size() != g.vertex_count()) throw PreconditionError("multidegree length does not match the graph");
  const auto genus = counts(g).genus;
  if (d.total() != genus - 1)
    throw DegreeMismatch("semistabilize needs total degree g-1 = " + std::to_string(genus - 1) + ", got " +
                         std::to_string(d.total()));

  const StabilityChecker checker(g, limits);
  const IntMatrix lap = laplacian(g);
  const std::size_t n = g.vertex_count();
  Semistabilization result{d, std::vector<Degree>(n, 0), false};

  for (std::size_t step = 0; step < max_firings; ++step) {
    auto violated = checker.first_violation(result.multidegree.view());
    if (!violated) {
      const Degree lo = *std::min_element(result.twist.begin(), result.twist.end());
      for (auto& x : result.twist) x -= lo;
      return result;
    }
    std::vector<bool> inside(n, false);
    for (VertexIndex v : violated->vertices) inside[v] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (inside[j]) continue;
      result.twist[j] += 1;
      for (std::size_t i = 0; i < n; ++i) result.multidegree[i] -= lap(i, j);
    }
  }

  const DegreeClassGroup dcg(g);
  const ClassLabel target = dcg.class_of(d);
  for (const auto& candidate : enumerate_semistable(g, limits)) {
    if (!(dcg.class_of(candidate) == target)) continue;
    auto twist = dcg.twister_coefficients(candidate - d);
    if (!twist) break;
    return Semistabilization{candidate, std::move(*twist), true};
  }
  throw Error("semistabilize: no semistable representative found for " + d.to_string() +
              " (implementation bug)");
}

}  // namespace cjac
