#include "omegalex/lex.hpp"

#include <unordered_set>

#include "omegalex/binomial.hpp"
#include "omegalex/errors.hpp"

namespace omegalex {

std::uint64_t lex_rank(const KSet& s) {
  if (s.universe() < 1) throw Error(ErrorKind::validation, "k-set has no universe");
  const int n = s.universe();
  const int k = s.size();
  // Count the sets that agree with s on the first i-1 elements and have a
  // smaller i-th element.
  std::uint64_t before = 0;
  int prev = 0;
  int i = 0;
  for (int e : s.elements()) {
    ++i;
    for (int v = prev + 1; v < e; ++v) before += binomial64(n - v, k - i);
    prev = e;
  }
  return before + 1;
}

KSet lex_unrank(int n, int k, std::uint64_t rank) {
  if (n < 1 || n > kMaxUniverse || k < 0 || k > n)
    throw Error(ErrorKind::validation, "invalid (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  const std::uint64_t total = binomial64(n, k);
  if (rank < 1 || rank > total)
    throw Error(ErrorKind::range, "rank " + std::to_string(rank) + " outside [1, " + std::to_string(total) + "]");
  std::uint64_t rest = rank - 1;
  std::vector<int> elems;
  elems.reserve(static_cast<std::size_t>(k));
  int v = 1;
  for (int i = 1; i <= k; ++i) {
    while (binomial64(n - v, k - i) <= rest) {
      rest -= binomial64(n - v, k - i);
      ++v;
    }
    elems.push_back(v);
    ++v;
  }
  return KSet(n, elems);
}

bool next_lex(KSet& s) {
  const int n = s.universe();
  const int k = s.size();
  std::vector<int> e = s.elements();
  int i = k - 1;
  while (i >= 0 && e[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++e[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] + 1;
  s = KSet(n, e);
  return true;
}

namespace {

KSet first_kset(int n, int k) {
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return KSet(n, e);
}

}  // namespace

Family lex_segment(int n, int k, std::uint64_t m) {
  Family shape(n, k);
  const std::uint64_t total = binomial64(n, k);
  if (m > total)
    throw Error(ErrorKind::range, "m = " + std::to_string(m) + " exceeds C(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") = " + std::to_string(total));
  std::vector<KSet> members;
  members.reserve(m);
  if (m > 0) {
    KSet s = first_kset(n, k);
    members.push_back(s);
    while (members.size() < m && next_lex(s)) members.push_back(s);
  }
  return Family(n, k, std::move(members));
}

std::vector<KSet> all_ksets(int n, int k) {
  const Family all = lex_segment(n, k, binomial64(n, k));
  return {all.members().begin(), all.members().end()};
}

Family complement_family(const Family& f) {
  std::unordered_set<std::uint64_t> present;
  for (const KSet& s : f.members()) present.insert(s.bits());
  std::vector<KSet> rest;
  for (const KSet& s : all_ksets(f.universe(), f.arity()))
    if (!present.contains(s.bits())) rest.push_back(s);
  return Family(f.universe(), f.arity(), std::move(rest));
}

}  // namespace omegalex
