#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omegalex/kset.hpp"

namespace omegalex {

// A subset of [1, n] of any size.
using CoverSet = KSet;

// deg(x) = number of members containing x, for x in [1, n].
class DegreeVector {
 public:
  explicit DegreeVector(int universe) : degrees_(static_cast<std::size_t>(universe), 0) {}

  int universe() const noexcept { return static_cast<int>(degrees_.size()); }
  std::uint64_t operator[](int x) const { return degrees_.at(static_cast<std::size_t>(x - 1)); }
  std::uint64_t& operator[](int x) { return degrees_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<std::uint64_t>& values() const noexcept { return degrees_; }

  std::uint64_t total() const;
  std::uint64_t sum_of_squares() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<std::uint64_t> degrees_;
};

DegreeVector degree_vector(const Family& f);

// Sum of |A ∩ B| over unordered pairs of distinct members, by pair
// enumeration.
std::uint64_t omega(const Family& f);
// Same quantity as sum over x of C(deg(x), 2).
std::uint64_t omega_via_degrees(const Family& f);
std::uint64_t omega_from_degrees(const DegreeVector& deg);

// Sum of |A ∩ B| over ordered pairs (A in f, B in g). Throws
// Error{compatibility} when the families differ in n or k.
std::uint64_t cross_omega(const Family& f, const Family& g);
// Single-set form; s need not belong to g.
std::uint64_t cross_omega(const KSet& s, const Family& g);

std::uint64_t disjoint_pairs(const Family& f);
std::uint64_t intersecting_pairs(const Family& f);

// Elements x whose star in f is complete, i.e. deg(x) = C(n-1, k-1).
CoverSet full_stars(const Family& f);

bool is_cover(const Family& f, const CoverSet& x);

// Smallest cover of size <= size_limit, lex-least among equal sizes.
std::optional<CoverSet> minimum_cover(const Family& f, int size_limit);

struct MinElementClass {
  int element;
  Family members;
};
// Members grouped by their minimum element, classes in increasing element
// order; empty classes are omitted.
std::vector<MinElementClass> min_element_classes(const Family& f);

}  // namespace omegalex
