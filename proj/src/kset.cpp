#include "omegalex/kset.hpp"

#include <algorithm>

#include "omegalex/errors.hpp"

namespace omegalex {

namespace {

void check_universe(int universe) {
  if (universe < 1 || universe > kMaxUniverse)
    throw Error(ErrorKind::validation,
                "universe size " + std::to_string(universe) + " outside [1, 64]");
}

}  // namespace

KSet::KSet(int universe, std::span<const int> elements) : universe_(universe) {
  check_universe(universe);
  int prev = 0;
  for (int x : elements) {
    if (x < 1 || x > universe)
      throw Error(ErrorKind::validation,
                  "element " + std::to_string(x) + " outside [1, " + std::to_string(universe) + "]");
    if (x <= prev) throw Error(ErrorKind::validation, "elements must be strictly increasing");
    bits_ |= std::uint64_t{1} << (x - 1);
    prev = x;
  }
}

KSet KSet::from_bits(int universe, std::uint64_t bits) {
  check_universe(universe);
  if ((bits & ~universe_mask(universe)) != 0)
    throw Error(ErrorKind::validation, "bit mask exceeds universe");
  KSet s;
  s.universe_ = universe;
  s.bits_ = bits;
  return s;
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string to_string(const KSet& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ' ';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

Family::Family(int universe, int arity) : universe_(universe), arity_(arity) {
  check_universe(universe);
  if (arity < 0 || arity > universe)
    throw Error(ErrorKind::validation,
                "arity " + std::to_string(arity) + " outside [0, " + std::to_string(universe) + "]");
}

Family::Family(int universe, int arity, std::vector<KSet> members) : Family(universe, arity) {
  for (const KSet& s : members) {
    if (s.universe() != universe || s.size() != arity)
      throw Error(ErrorKind::validation, "member " + to_string(s) + " does not match (n, k) = (" +
                                             std::to_string(universe) + ", " + std::to_string(arity) + ")");
  }
  sorted_bits_.reserve(members.size());
  for (const KSet& s : members) sorted_bits_.push_back(s.bits());
  std::sort(sorted_bits_.begin(), sorted_bits_.end());
  const auto dup = std::adjacent_find(sorted_bits_.begin(), sorted_bits_.end());
  if (dup != sorted_bits_.end())
    throw Error(ErrorKind::validation,
                "duplicate member " + to_string(KSet::from_bits(universe, *dup)));
  members_ = std::move(members);
}

bool Family::contains(const KSet& s) const {
  return s.universe() == universe_ &&
         std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

Family Family::with(const KSet& s) const {
  std::vector<KSet> next = members_;
  next.push_back(s);
  return Family(universe_, arity_, std::move(next));
}

Family Family::without(const KSet& s) const {
  std::vector<KSet> next;
  next.reserve(members_.size());
  for (const KSet& t : members_)
    if (!(t == s)) next.push_back(t);
  return Family(universe_, arity_, std::move(next));
}

bool operator==(const Family& a, const Family& b) {
  return a.universe_ == b.universe_ && a.arity_ == b.arity_ && a.sorted_bits_ == b.sorted_bits_;
}

}  // namespace omegalex
