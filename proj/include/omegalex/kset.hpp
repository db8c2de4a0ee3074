#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace omegalex {

inline constexpr int kMaxUniverse = 64;

// Bit mask of [1, n]; element x occupies bit x - 1.
constexpr std::uint64_t universe_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A subset of [1, n] stored as a machine word. Used both for the k-sets that
// make up families and for element sets such as covers.
class KSet {
 public:
  KSet() = default;

  // Throws Error{validation} unless elements are strictly increasing and
  // inside [1, universe], with 1 <= universe <= 64.
  KSet(int universe, std::span<const int> elements);
  KSet(int universe, std::initializer_list<int> elements)
      : KSet(universe, std::span<const int>(elements.begin(), elements.size())) {}

  static KSet from_bits(int universe, std::uint64_t bits);

  int universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int x) const noexcept {
    return x >= 1 && x <= universe_ && ((bits_ >> (x - 1)) & 1u) != 0;
  }
  // 0 for the empty set.
  int min_element() const noexcept {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  std::vector<int> elements() const;

  friend bool operator==(const KSet&, const KSet&) = default;

 private:
  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

inline int intersection_size(const KSet& a, const KSet& b) noexcept {
  return std::popcount(a.bits() & b.bits());
}

// A < B iff min(A \ B) < min(B \ A). For equal-size sets this coincides with
// comparing the sorted element sequences.
inline bool lex_less(const KSet& a, const KSet& b) noexcept {
  const std::uint64_t diff = a.bits() ^ b.bits();
  return diff != 0 && (a.bits() & (diff & (~diff + 1))) != 0;
}

// "{1 2 5}"
std::string to_string(const KSet& s);

// Ordered collection of distinct k-subsets of [n]. Insertion order is kept;
// equality ignores it.
class Family {
 public:
  // Throws Error{validation} unless 1 <= universe <= 64 and 0 <= arity <= universe.
  Family(int universe, int arity);
  // Also throws Error{validation} on a member of the wrong universe or size,
  // or on a duplicate member.
  Family(int universe, int arity, std::vector<KSet> members);

  int universe() const noexcept { return universe_; }
  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const KSet> members() const noexcept { return members_; }
  const KSet& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const KSet& s) const;
  bool same_shape(const Family& other) const noexcept {
    return universe_ == other.universe_ && arity_ == other.arity_;
  }

  // Copies with one member appended or removed.
  Family with(const KSet& s) const;
  Family without(const KSet& s) const;

  friend bool operator==(const Family& a, const Family& b);

 private:
  int universe_;
  int arity_;
  std::vector<KSet> members_;
  std::vector<std::uint64_t> sorted_bits_;
};

}  // namespace omegalex
