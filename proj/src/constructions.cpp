#include "omegalex/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"
#include "omegalex/omega.hpp"

namespace omegalex {

namespace {

i128 gcd_i128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr u128 kI128Max = (~u128{0}) >> 1;

void require_graph_size(int n, std::uint64_t m) {
  const std::uint64_t total = binomial64(n, 2);
  if (m > total)
    throw Error(ErrorKind::range,
                "m = " + std::to_string(m) + " exceeds C(" + std::to_string(n) + ", 2) = " + std::to_string(total));
}

}  // namespace

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorKind::argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd_i128(num, den);
  num_ = g == 0 ? num : num / g;
  den_ = g == 0 ? den : den / g;
}

std::string to_string(const Rational& r) { return to_string(r.num()) + "/" + to_string(r.den()); }

Family full_star_family(int n, int k, int x) {
  if (x < 1 || x > n)
    throw Error(ErrorKind::argument, "element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
  std::vector<KSet> members;
  for (const KSet& s : all_ksets(n, k))
    if (s.contains(x)) members.push_back(s);
  return Family(n, k, std::move(members));
}

CliqueShape clique_shape(std::uint64_t m) {
  std::uint64_t a = 1;
  while ((a + 1) * a / 2 <= m) ++a;
  return {a, m - a * (a - 1) / 2};
}

Family quasi_complete(int n, std::uint64_t m) {
  Family shape(n, 2);
  require_graph_size(n, m);
  const CliqueShape cs = clique_shape(m);
  const int a = static_cast<int>(cs.a);
  const int b = static_cast<int>(cs.b);
  std::vector<KSet> edges;
  edges.reserve(m);
  for (int i = 1; i <= a; ++i)
    for (int j = i + 1; j <= a; ++j) edges.push_back(KSet(n, {i, j}));
  for (int i = 1; i <= b; ++i) edges.push_back(KSet(n, {i, a + 1}));
  return Family(n, 2, std::move(edges));
}

Family quasi_star(int n, std::uint64_t m) {
  Family shape(n, 2);
  require_graph_size(n, m);
  return complement_family(quasi_complete(n, binomial64(n, 2) - m));
}

const char* to_string(GraphWinner w) {
  switch (w) {
    case GraphWinner::quasi_complete: return "quasi_complete";
    case GraphWinner::quasi_star: return "quasi_star";
    case GraphWinner::tie: return "tie";
  }
  return "?";
}

GraphBest graph_best(int n, std::uint64_t m) {
  const std::uint64_t c = omega(quasi_complete(n, m));
  const std::uint64_t s = omega(quasi_star(n, m));
  const GraphWinner which = c > s ? GraphWinner::quasi_complete : s > c ? GraphWinner::quasi_star : GraphWinner::tie;
  return {std::max(c, s), which, c, s};
}

Rational bey_bound(int n, int k, std::uint64_t m) {
  Family shape(n, k);
  const std::uint64_t total = binomial64(n, k);
  if (m < 1 || m > total)
    throw Error(ErrorKind::range, "m = " + std::to_string(m) + " outside [1, " + std::to_string(total) + "]");
  // For k = 1 both non-quadratic terms cancel and the quadratic one vanishes.
  if (k == 1) return Rational(0);
  const u128 mm = m;
  const u128 nm1 = static_cast<u128>(n - 1);
  const u128 kk = static_cast<u128>(k);
  const u128 positive = checked_add(checked_mul(checked_mul(kk * (kk - 1), mm), mm),
                                    checked_mul(checked_mul(nm1, binomial64(n - 2, k - 1)), mm));
  const u128 negative = checked_mul(checked_mul(nm1, kk), mm);
  if (positive > kI128Max || negative > kI128Max) throw Error(ErrorKind::overflow, "bound numerator overflow");
  return Rational(static_cast<i128>(positive) - static_cast<i128>(negative), static_cast<i128>(2 * nm1));
}

std::vector<Family> bey_equality_catalog(int n, int k, std::uint64_t m) {
  const Rational bound = bey_bound(n, k, m);

  std::vector<Family> base;
  base.push_back(lex_segment(n, k, binomial64(n, k)));
  base.push_back(full_star_family(n, k, 1));
  if (n == k + 1) {
    for (int r = 2; r <= (k + 1) / 2; ++r) {
      const std::uint64_t prefix = universe_mask(r);
      std::vector<KSet> members;
      for (const KSet& s : all_ksets(n, k))
        if ((s.bits() & prefix) == prefix) members.push_back(s);
      base.push_back(Family(n, k, std::move(members)));
    }
  }
  std::vector<Family> candidates = base;
  for (const Family& f : base) candidates.push_back(complement_family(f));

  std::vector<Family> out;
  for (Family& f : candidates) {
    if (f.size() != m) continue;
    if (std::find(out.begin(), out.end(), f) != out.end()) continue;
    if (!(bound == omega(f)))
      throw std::logic_error("catalog family of size " + std::to_string(m) + " has omega " +
                             std::to_string(omega(f)) + " below the bound " + to_string(bound));
    out.push_back(std::move(f));
  }
  return out;
}

BoundReport bound_report(int n, int k, std::uint64_t m) {
  std::vector<Family> catalog = bey_equality_catalog(n, k, m);
  BoundReport report{n, k, m, bey_bound(n, k, m), !catalog.empty(), std::nullopt};
  if (!catalog.empty()) report.witness = std::move(catalog.front());
  return report;
}

}  // namespace omegalex
