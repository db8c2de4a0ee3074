#include "omegalex/binomial.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "omegalex/errors.hpp"

namespace omegalex {

namespace {

constexpr u128 kU128Max = ~u128{0};

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

using Row = std::array<std::uint64_t, 65>;

std::array<Row, 65> build_table() {
  std::array<Row, 65> t{};
  for (int n = 0; n <= 64; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

const std::array<Row, 65>& table() {
  static const std::array<Row, 65> t = build_table();
  return t;
}

}  // namespace

u128 checked_add(u128 a, u128 b) {
  if (a > kU128Max - b) throw Error(ErrorKind::overflow, "128-bit addition overflow");
  return a + b;
}

u128 checked_sub(u128 a, u128 b) {
  if (b > a) throw Error(ErrorKind::overflow, "128-bit subtraction underflow");
  return a - b;
}

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) throw Error(ErrorKind::overflow, "128-bit multiplication overflow");
  return a * b;
}

std::uint64_t to_u64(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::overflow, "value " + to_string(v) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 v) {
  if (v >= 0) return to_string(static_cast<u128>(v));
  return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
}

BinomialValue binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // C(n, i) = C(n, i-1) * (n-i+1) / i. After dividing acc by g = gcd(acc, i),
  // i/g is coprime to acc/g and so divides n-i+1 exactly; no intermediate
  // exceeds C(n, i).
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const u128 g = gcd128(acc, i);
    const u128 factor = (n - i + 1) / (i / g);
    acc = checked_mul(acc / g, factor);
  }
  return acc;
}

std::uint64_t binomial64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 64) return to_u64(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
  return table()[n][k];
}

}  // namespace omegalex
