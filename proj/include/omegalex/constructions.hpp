#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegalex/binomial.hpp"
#include "omegalex/kset.hpp"

namespace omegalex {

// Exact rational in lowest terms, positive denominator.
class Rational {
 public:
  Rational(i128 num, i128 den);
  explicit Rational(i128 value) : num_(value), den_(1) {}

  i128 num() const noexcept { return num_; }
  i128 den() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  // Comparisons against an integer, by cross multiplication.
  friend bool operator==(const Rational& r, std::uint64_t v) { return r.den_ * static_cast<i128>(v) == r.num_; }
  friend bool operator<=(std::uint64_t v, const Rational& r) { return static_cast<i128>(v) * r.den_ <= r.num_; }

 private:
  i128 num_;
  i128 den_;
};

std::string to_string(const Rational& r);  // "num/den"

// All k-sets containing x.
Family full_star_family(int n, int k, int x);

// m = C(a, 2) + b with 0 <= b < a.
struct CliqueShape {
  std::uint64_t a;
  std::uint64_t b;
};
CliqueShape clique_shape(std::uint64_t m);

// Clique on [a] plus edges {i, a + 1} for i in [b]. Throws Error{range} when
// m > C(n, 2).
Family quasi_complete(int n, std::uint64_t m);
// Complement of quasi_complete(n, C(n, 2) - m).
Family quasi_star(int n, std::uint64_t m);

enum class GraphWinner { quasi_complete, quasi_star, tie };
const char* to_string(GraphWinner w);

struct GraphBest {
  std::uint64_t value;
  GraphWinner which;
  std::uint64_t omega_quasi_complete;
  std::uint64_t omega_quasi_star;
};
// Larger of omega(quasi_complete) and omega(quasi_star), both recomputed
// from the constructed graphs.
GraphBest graph_best(int n, std::uint64_t m);

// k(k-1)/(2(n-1)) m^2 + C(n-2, k-1) m / 2 - k m / 2, the degree-square upper
// bound on omega over size-m k-uniform families. Throws Error{range} unless
// 0 < m <= C(n, k).
Rational bey_bound(int n, int k, std::uint64_t m);

// The families known to meet bey_bound with equality, restricted to those of
// size m: C([n], k), the full star at 1, and when n = k + 1 the families
// {F in C([k+1], k) : [r] ⊂ F}, r = 2..floor((k+1)/2), plus complements of
// all of these. Duplicates are dropped. Throws std::logic_error if a listed
// family misses the bound.
std::vector<Family> bey_equality_catalog(int n, int k, std::uint64_t m);

struct BoundReport {
  int n;
  int k;
  std::uint64_t m;
  Rational bound;
  bool attained;
  std::optional<Family> witness;
};
BoundReport bound_report(int n, int k, std::uint64_t m);

}  // namespace omegalex
