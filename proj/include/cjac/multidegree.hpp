#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace cjac {

using Degree = std::int64_t;

/// Integer vector indexed by the vertex order of a dual graph.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<Degree> entries) : entries_(std::move(entries)) {}
  Multidegree(std::initializer_list<Degree> entries) : entries_(entries) {}

  static Multidegree zero(std::size_t n) { return Multidegree(std::vector<Degree>(n, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  Degree operator[](std::size_t i) const { return entries_[i]; }
  Degree& operator[](std::size_t i) { return entries_[i]; }

  Degree total() const { return std::accumulate(entries_.begin(), entries_.end(), Degree{0}); }

  const std::vector<Degree>& entries() const noexcept { return entries_; }
  std::span<const Degree> view() const noexcept { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Multidegree& operator+=(const Multidegree& o) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Multidegree& operator-=(const Multidegree& o) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Degree> entries_;
};

}  // namespace cjac
