#include <random>

#include "doctest.h"
#include "omegalex/binomial.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"
#include "oracles.hpp"

using namespace omegalex;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an omegalex::Error");
  return ErrorKind::io;
}

}  // namespace

TEST_CASE("binomial small values") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(to_string(binomial(64, 32)) == "1832624140942590534");
  CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 80") {
  for (std::uint64_t n = 1; n <= 80; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial overflow is an error") {
  CHECK(kind_of([] { (void)binomial(200, 100); }) == ErrorKind::overflow);
  CHECK(kind_of([] { (void)to_u64(binomial(80, 40)); }) == ErrorKind::overflow);
  CHECK(kind_of([] { (void)checked_add(~u128{0}, 1); }) == ErrorKind::overflow);
}

TEST_CASE("binomial64 table agrees with the exact routine") {
  for (int n = 0; n <= 64; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial64(n, k) == to_u64(binomial(n, k)));
  CHECK(binomial64(3, -1) == 0);
  CHECK(binomial64(-1, 0) == 0);
}

TEST_CASE("KSet validation") {
  CHECK(kind_of([] { KSet(5, {2, 1}); }) == ErrorKind::validation);
  CHECK(kind_of([] { KSet(5, {1, 6}); }) == ErrorKind::validation);
  CHECK(kind_of([] { KSet(65, {1}); }) == ErrorKind::validation);
  CHECK(kind_of([] { KSet(5, {0}); }) == ErrorKind::validation);
  const KSet s(64, {1, 64});
  CHECK(s.size() == 2);
  CHECK(s.min_element() == 1);
  CHECK(s.elements() == std::vector<int>{1, 64});
}

TEST_CASE("Family rejects duplicates and mismatched members") {
  CHECK(kind_of([] { Family(5, 2, {KSet(5, {1, 2}), KSet(5, {1, 2})}); }) == ErrorKind::validation);
  CHECK(kind_of([] { Family(5, 2, {KSet(5, {1, 2, 3})}); }) == ErrorKind::validation);
  CHECK(kind_of([] { Family(5, 2, {KSet(6, {1, 2})}); }) == ErrorKind::validation);
}

TEST_CASE("Family equality ignores order") {
  const Family a(5, 2, {KSet(5, {1, 2}), KSet(5, {3, 4})});
  const Family b(5, 2, {KSet(5, {3, 4}), KSet(5, {1, 2})});
  CHECK(a == b);
  CHECK(a[0] == KSet(5, {1, 2}));
  CHECK_FALSE(a == Family(5, 2, {KSet(5, {1, 2})}));
}

TEST_CASE("lex order comparison matches the minimum of the symmetric difference") {
  CHECK(lex_less(KSet(5, {1, 5}), KSet(5, {2, 3})));
  CHECK_FALSE(lex_less(KSet(5, {2, 3}), KSet(5, {1, 5})));
  CHECK_FALSE(lex_less(KSet(5, {2, 3}), KSet(5, {2, 3})));
}

TEST_CASE("lex_rank examples") {
  CHECK(lex_rank(KSet(5, {1, 2})) == 1);
  CHECK(lex_rank(KSet(5, {2, 3})) == 5);
  CHECK(lex_rank(KSet(5, {4, 5})) == 10);
}

TEST_CASE("lex_unrank examples and range errors") {
  CHECK(lex_unrank(5, 2, 1) == KSet(5, {1, 2}));
  CHECK(lex_unrank(5, 2, 5) == KSet(5, {2, 3}));
  CHECK(lex_unrank(5, 2, 10) == KSet(5, {4, 5}));
  CHECK(kind_of([] { (void)lex_unrank(5, 2, 0); }) == ErrorKind::range);
  CHECK(kind_of([] { (void)lex_unrank(5, 2, 11); }) == ErrorKind::range);
}

TEST_CASE("rank and unrank agree with direct enumeration for n <= 10, k <= 4") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= std::min(n, 4); ++k) {
      const oracle::Sets all = oracle::combos(n, k);
      REQUIRE(all.size() == binomial64(n, k));
      for (std::size_t r = 1; r <= all.size(); ++r) {
        const KSet s = lex_unrank(n, k, r);
        CHECK(s.elements() == all[r - 1]);
        CHECK(lex_rank(s) == r);
      }
    }
}

TEST_CASE("rank round trip at the 64-bit edge") {
  const KSet last = lex_unrank(64, 32, binomial64(64, 32));
  CHECK(lex_rank(last) == binomial64(64, 32));
  CHECK(last.min_element() == 33);
}

TEST_CASE("lex_segment examples") {
  CHECK(lex_segment(5, 2, 0).empty());
  CHECK(oracle::sets_of(lex_segment(5, 2, 4)) == oracle::Sets{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(oracle::sets_of(lex_segment(5, 2, 5)) == oracle::Sets{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}});
  CHECK(kind_of([] { (void)lex_segment(5, 2, 11); }) == ErrorKind::range);
}

TEST_CASE("lex_segment is the m smallest sets, consecutive members ordered") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const oracle::Sets all = oracle::combos(n, k);
      for (std::size_t m = 0; m <= all.size(); ++m) {
        const Family seg = lex_segment(n, k, m);
        CHECK(oracle::sets_of(seg) == oracle::Sets(all.begin(), all.begin() + static_cast<long>(m)));
        for (std::size_t i = 1; i < seg.size(); ++i) CHECK(lex_less(seg[i - 1], seg[i]));
      }
    }
}

TEST_CASE("complement_family examples") {
  CHECK(oracle::sets_of(complement_family(Family(4, 2))) ==
        oracle::Sets{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(oracle::sets_of(complement_family(oracle::family(4, 2, {{1, 2}}))) ==
        oracle::Sets{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const Family l = lex_segment(5, 2, 4);
  CHECK(complement_family(complement_family(l)) == l);
}

TEST_CASE("complement sizes and disjointness on seeded random families") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = oracle::to_family(oracle::random_family(rng, 10, 4, 80));
    const Family g = complement_family(f);
    CHECK(f.size() + g.size() == binomial64(f.universe(), f.arity()));
    for (const KSet& s : g.members()) CHECK_FALSE(f.contains(s));
    CHECK(complement_family(g) == f);
  }
}
