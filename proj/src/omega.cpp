#include "omegalex/omega.hpp"

#include <stdexcept>

#include "omegalex/binomial.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"

namespace omegalex {

namespace {

std::uint64_t choose2(std::uint64_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

void require_same_shape(const Family& f, const Family& g) {
  if (!f.same_shape(g))
    throw Error(ErrorKind::compatibility, "families over (n, k) = (" + std::to_string(f.universe()) + ", " +
                                              std::to_string(f.arity()) + ") and (" + std::to_string(g.universe()) +
                                              ", " + std::to_string(g.arity()) + ") cannot be combined");
}

}  // namespace

std::uint64_t DegreeVector::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t d : degrees_) sum += d;
  return sum;
}

std::uint64_t DegreeVector::sum_of_squares() const {
  std::uint64_t sum = 0;
  for (std::uint64_t d : degrees_) sum += d * d;
  return sum;
}

DegreeVector degree_vector(const Family& f) {
  DegreeVector deg(f.universe());
  for (const KSet& s : f.members())
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) ++deg[std::countr_zero(b) + 1];
  return deg;
}

std::uint64_t omega(const Family& f) {
  const auto members = f.members();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      sum += static_cast<std::uint64_t>(intersection_size(members[i], members[j]));
  return sum;
}

std::uint64_t omega_from_degrees(const DegreeVector& deg) {
  std::uint64_t sum = 0;
  for (std::uint64_t d : deg.values()) sum += choose2(d);
  return sum;
}

std::uint64_t omega_via_degrees(const Family& f) { return omega_from_degrees(degree_vector(f)); }

std::uint64_t cross_omega(const Family& f, const Family& g) {
  require_same_shape(f, g);
  std::uint64_t sum = 0;
  for (const KSet& a : f.members())
    for (const KSet& b : g.members()) sum += static_cast<std::uint64_t>(intersection_size(a, b));
  return sum;
}

std::uint64_t cross_omega(const KSet& s, const Family& g) {
  if (s.universe() != g.universe() || s.size() != g.arity())
    throw Error(ErrorKind::compatibility, "set " + to_string(s) + " does not match the family's (n, k)");
  std::uint64_t sum = 0;
  for (const KSet& b : g.members()) sum += static_cast<std::uint64_t>(intersection_size(s, b));
  return sum;
}

std::uint64_t intersecting_pairs(const Family& f) {
  const auto members = f.members();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if ((members[i].bits() & members[j].bits()) != 0) ++count;
  return count;
}

std::uint64_t disjoint_pairs(const Family& f) {
  const std::uint64_t m = f.size();
  return choose2(m) - intersecting_pairs(f);
}

CoverSet full_stars(const Family& f) {
  const std::uint64_t star = binomial64(f.universe() - 1, f.arity() - 1);
  const DegreeVector deg = degree_vector(f);
  std::uint64_t bits = 0;
  for (int x = 1; x <= f.universe(); ++x)
    if (star > 0 && deg[x] == star) bits |= std::uint64_t{1} << (x - 1);
  return CoverSet::from_bits(f.universe(), bits);
}

bool is_cover(const Family& f, const CoverSet& x) {
  for (const KSet& s : f.members())
    if ((s.bits() & x.bits()) == 0) return false;
  // Every member then lies in a star of some element of x.
  std::size_t covered = 0;
  for (const KSet& s : f.members())
    for (int e : x.elements())
      if (s.contains(e)) {
        ++covered;
        break;
      }
  if (covered != f.size()) throw std::logic_error("cover does not reassemble the family from stars");
  return true;
}

std::optional<CoverSet> minimum_cover(const Family& f, int size_limit) {
  const int n = f.universe();
  if (size_limit > n) size_limit = n;
  for (int size = 0; size <= size_limit; ++size) {
    KSet candidate = lex_segment(n, size, 1)[0];
    do {
      if (is_cover(f, candidate)) return candidate;
    } while (next_lex(candidate));
  }
  return std::nullopt;
}

std::vector<MinElementClass> min_element_classes(const Family& f) {
  std::vector<std::vector<KSet>> buckets(static_cast<std::size_t>(f.universe()) + 1);
  for (const KSet& s : f.members()) buckets[static_cast<std::size_t>(s.min_element())].push_back(s);
  std::vector<MinElementClass> out;
  for (std::size_t x = 0; x < buckets.size(); ++x) {
    if (buckets[x].empty()) continue;
    out.push_back({static_cast<int>(x), Family(f.universe(), f.arity(), std::move(buckets[x]))});
  }
  std::size_t total = 0;
  for (const auto& c : out) total += c.members.size();
  if (total != f.size()) throw std::logic_error("minimum-element classes do not partition the family");
  return out;
}

}  // namespace omegalex
