#pragma once

#include <cstdint>
#include <string>

namespace omegalex {

using u128 = unsigned __int128;
using i128 = __int128;

// Exact non-negative integer; every operation producing one is overflow
// checked and throws Error{ErrorKind::overflow} instead of wrapping.
using BinomialValue = u128;

u128 checked_add(u128 a, u128 b);
u128 checked_sub(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);

// Narrowing that throws on loss.
std::uint64_t to_u64(u128 v);

std::string to_string(u128 v);
std::string to_string(i128 v);

// C(n, k). Returns 0 for k > n and 1 for k == 0.
BinomialValue binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) for n <= 64, which always fits in 64 bits. Table lookup.
std::uint64_t binomial64(int n, int k);

}  // namespace omegalex
