#include "doctest.h"
#include "omegalex/binomial.hpp"
#include "omegalex/constructions.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"
#include "omegalex/omega.hpp"
#include "oracles.hpp"

using namespace omegalex;
using oracle::family;

namespace {

// Bound times 2(n-1), straight from the formula.
std::int64_t scaled_bound(std::int64_t n, std::int64_t k, std::int64_t m) {
  return k * (k - 1) * m * m + (n - 1) * static_cast<std::int64_t>(oracle::choose(n - 2, k - 1)) * m -
         (n - 1) * k * m;
}

bool same_value(const Rational& r, std::int64_t num, std::int64_t den) {
  return r.num() * den == static_cast<i128>(num) * r.den();
}

}  // namespace

TEST_CASE("full_star_family examples") {
  CHECK(oracle::sets_of(full_star_family(5, 2, 1)) == oracle::Sets{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(oracle::sets_of(full_star_family(3, 3, 2)) == oracle::Sets{{1, 2, 3}});
  CHECK(oracle::sets_of(full_star_family(5, 2, 5)) == oracle::Sets{{1, 5}, {2, 5}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS((void)full_star_family(5, 2, 6), Error);
}

TEST_CASE("quasi_complete examples") {
  CHECK(quasi_complete(5, 3) == family(5, 2, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(quasi_complete(5, 4) == family(5, 2, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
  CHECK(quasi_complete(5, 0).empty());
  CHECK_THROWS_AS((void)quasi_complete(5, 11), Error);
}

TEST_CASE("clique shape is the unique C(a,2) + b with 0 <= b < a") {
  for (std::uint64_t m = 0; m <= 300; ++m) {
    const CliqueShape s = clique_shape(m);
    CHECK(s.b < s.a);
    CHECK(s.a * (s.a - 1) / 2 + s.b == m);
  }
}

TEST_CASE("quasi_star examples") {
  CHECK(quasi_star(5, 4) == family(5, 2, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  CHECK(quasi_star(5, 10) == lex_segment(5, 2, 10));
  CHECK(quasi_star(4, 3) == family(4, 2, {{1, 4}, {2, 4}, {3, 4}}));
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t m = 0; m <= binomial64(n, 2); ++m) {
      CHECK(quasi_star(n, m).size() == m);
      CHECK(quasi_star(n, m) == complement_family(quasi_complete(n, binomial64(n, 2) - m)));
    }
}

TEST_CASE("graph_best examples") {
  const GraphBest a = graph_best(5, 4);
  CHECK(a.value == 6);
  CHECK(a.which == GraphWinner::quasi_star);
  CHECK(a.omega_quasi_complete == 5);
  CHECK(a.omega_quasi_star == 6);
  CHECK(oracle::omega_pairs(oracle::sets_of(quasi_complete(5, 4))) == 5);

  const GraphBest b = graph_best(4, 3);
  CHECK(b.value == 3);
  CHECK(b.which == GraphWinner::tie);

  const GraphBest c = graph_best(5, 10);
  CHECK(c.value == 30);
  CHECK(c.which == GraphWinner::tie);
}

TEST_CASE("bey_bound examples") {
  CHECK(bey_bound(5, 2, 4) == Rational(6));
  CHECK(bey_bound(5, 2, 10) == Rational(30));
  CHECK(bey_bound(5, 2, 1) == Rational(3, 4));
  CHECK(to_string(bey_bound(5, 2, 5)) == "35/4");
  CHECK_THROWS_AS((void)bey_bound(5, 2, 0), Error);
  CHECK_THROWS_AS((void)bey_bound(5, 2, 11), Error);
}

TEST_CASE("bey_bound agrees with the scaled formula") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k)
      for (std::uint64_t m = 1; m <= binomial64(n, k); ++m) {
        CHECK(same_value(bey_bound(n, k, m), scaled_bound(n, k, static_cast<std::int64_t>(m)), 2 * (n - 1)));
      }
}

TEST_CASE("complete families and full stars meet the bound") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const Family all = lex_segment(n, k, binomial64(n, k));
      CHECK(bey_bound(n, k, all.size()) == omega(all));
      const Family star = full_star_family(n, k, 1);
      CHECK(bey_bound(n, k, star.size()) == omega(star));
      const Family rest = complement_family(star);
      if (!rest.empty()) CHECK(bey_bound(n, k, rest.size()) == omega(rest));
    }
}

TEST_CASE("bey_equality_catalog examples") {
  const auto a = bey_equality_catalog(5, 2, 4);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == full_star_family(5, 2, 1));

  const auto b = bey_equality_catalog(5, 4, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == family(5, 4, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}}));
  CHECK(bey_bound(5, 4, 3) == omega(b[0]));
  CHECK(omega(b[0]) == 9);

  CHECK(bey_equality_catalog(6, 2, 1).empty());
}

TEST_CASE("bound_report") {
  const BoundReport hit = bound_report(5, 2, 4);
  CHECK(hit.attained);
  CHECK(hit.bound == Rational(6));
  REQUIRE(hit.witness.has_value());
  CHECK(omega(*hit.witness) == 6);

  const BoundReport miss = bound_report(5, 2, 5);
  CHECK_FALSE(miss.attained);
  CHECK_FALSE(miss.witness.has_value());
}
