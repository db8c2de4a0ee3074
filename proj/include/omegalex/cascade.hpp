#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omegalex/kset.hpp"

namespace omegalex {

// One summand C(top, bottom) of a cascade.
struct CascadeTerm {
  int top;
  int bottom;

  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

// C(n, k) - m written as C(a_1, k) + C(a_2, k - 1) + ... + C(a_s, k - s + 1)
// with a_1 > a_2 > ... > a_s >= 1. The offsets r_i = n - a_i are increasing;
// the last one is the cascade end (0 when the expansion is empty, i.e. when
// m = C(n, k)).
struct CascadeForm {
  int n = 0;
  int k = 0;
  std::uint64_t m = 0;
  std::vector<CascadeTerm> terms;
  std::vector<int> offsets;

  int end() const noexcept { return offsets.empty() ? 0 : offsets.back(); }
  std::size_t length() const noexcept { return terms.size(); }
};

// Greedy expansion: each step takes the largest top whose binomial still fits
// in the remainder. Throws Error{range} unless 1 <= m <= C(n, k).
CascadeForm cascade_decompose(int n, int k, std::uint64_t m);
int cascade_end(int n, int k, std::uint64_t m);

// {r_1, ..., r_s} together with the tail {n - k + s + 1, ..., n}. Agrees with
// lex_unrank(n, k, m).
KSet last_lex_set(int n, int k, std::uint64_t m);

// Parameters of a smaller instance obtained from (n, k, m).
struct ReducedInstance {
  int n;
  int k;
  std::uint64_t m;

  friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

// Peeling a full star off a family of size m leaves m - C(n-1, k-1) sets on
// n - 1 points. Defined when r_1 >= 2; the reduced cascade has offsets
// r_i - 1.
std::optional<ReducedInstance> star_peeling_reduction(const CascadeForm& form);

// With cover [r_1], the sets of the cover family missing from the family
// number C(n,k) - C(n-r_1,k) - m; their complement inside a star gives
// (n - 1, k - 1, C(n-1,k-1) - that count). Defined when k >= 2 and the
// cascade is nonempty; the reduced cascade has offsets r_2 - 1, ..., r_s - 1.
std::optional<ReducedInstance> cover_reduction(const CascadeForm& form);

// Growth condition n > 36 k (2k + 1)(k + r) r under which lex segments with
// cascade end at most r are proved optimal. Evaluated exactly.
bool lex_optimality_hypothesis_holds(int n, int k, int r);

}  // namespace omegalex
