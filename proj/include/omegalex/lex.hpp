#pragma once

#include <cstdint>
#include <vector>

#include "omegalex/kset.hpp"

namespace omegalex {

// Ranks are 1-based: the first set of C([n], k) has rank 1.
std::uint64_t lex_rank(const KSet& s);
// Throws Error{range} unless 1 <= rank <= C(n, k).
KSet lex_unrank(int n, int k, std::uint64_t rank);

// Advances s to its lex successor among sets of the same size. Returns false
// (leaving s unchanged) when s is the last one.
bool next_lex(KSet& s);

// The first m sets of C([n], k) in lex order. Throws Error{range} when
// m > C(n, k).
Family lex_segment(int n, int k, std::uint64_t m);

// All of C([n], k) in lex order.
std::vector<KSet> all_ksets(int n, int k);

Family complement_family(const Family& f);

}  // namespace omegalex
