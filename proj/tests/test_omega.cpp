#include <random>

#include "doctest.h"
#include "omegalex/binomial.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"
#include "omegalex/omega.hpp"
#include "oracles.hpp"

using namespace omegalex;
using oracle::family;

namespace {

const Family& star4() {
  static const Family f = lex_segment(5, 2, 4);
  return f;
}

Family k4() { return lex_segment(4, 2, 6); }

}  // namespace

TEST_CASE("degree_vector examples") {
  CHECK(degree_vector(star4()).values() == std::vector<std::uint64_t>{4, 1, 1, 1, 1});
  CHECK(degree_vector(Family(5, 2)).values() == std::vector<std::uint64_t>{0, 0, 0, 0, 0});
  CHECK(degree_vector(k4()).values() == std::vector<std::uint64_t>{3, 3, 3, 3});
}

TEST_CASE("omega examples") {
  CHECK(omega(family(5, 2, {{2, 4}})) == 0);
  CHECK(omega(star4()) == 6);
  CHECK(omega(family(3, 2, {{1, 2}, {1, 3}, {2, 3}})) == 3);
  CHECK(omega(family(7, 2, {{1, 2}, {1, 3}, {2, 3}})) == 3);
}

TEST_CASE("omega_via_degrees examples") {
  CHECK(omega_via_degrees(star4()) == 6);
  CHECK(omega_via_degrees(Family(6, 3)) == 0);
  CHECK(omega_via_degrees(k4()) == 12);
}

TEST_CASE("cross_omega examples") {
  CHECK(cross_omega(star4(), star4()) == 20);
  CHECK(oracle::cross_pairs(oracle::sets_of(star4()), oracle::sets_of(star4())) == 20);
  CHECK(cross_omega(star4(), Family(5, 2)) == 0);
  CHECK(cross_omega(family(3, 2, {{1, 2}}), family(3, 2, {{1, 3}})) == 1);
  CHECK_THROWS_AS((void)cross_omega(star4(), Family(6, 2)), Error);
  try {
    (void)cross_omega(star4(), Family(5, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::compatibility);
  }
}

TEST_CASE("disjoint_pairs examples") {
  CHECK(disjoint_pairs(star4()) == 0);
  CHECK(disjoint_pairs(family(6, 2, {{1, 2}, {3, 4}, {5, 6}})) == 3);
  CHECK(disjoint_pairs(family(6, 2, {{1, 2}})) == 0);
}

TEST_CASE("full_stars examples") {
  CHECK(full_stars(star4()).elements() == std::vector<int>{1});
  CHECK(full_stars(lex_segment(5, 2, 3)).empty());
  CHECK(full_stars(k4()).elements() == std::vector<int>{1, 2, 3, 4});
  CHECK(full_stars(Family(4, 2)).empty());
}

TEST_CASE("is_cover examples") {
  const Family l5 = lex_segment(5, 2, 5);
  CHECK(is_cover(l5, KSet(5, {1, 2})));
  CHECK_FALSE(is_cover(l5, KSet(5, {1})));
  CHECK(is_cover(Family(5, 2), KSet::from_bits(5, 0)));
}

TEST_CASE("minimum_cover examples") {
  CHECK(minimum_cover(star4(), 2)->elements() == std::vector<int>{1});
  CHECK(minimum_cover(family(6, 2, {{1, 2}, {3, 4}, {5, 6}}), 3)->elements() == std::vector<int>{1, 3, 5});
  CHECK_FALSE(minimum_cover(lex_segment(5, 2, 5), 1).has_value());
  CHECK(minimum_cover(Family(5, 2), 0)->empty());
  CHECK_FALSE(minimum_cover(family(6, 2, {{1, 2}, {3, 4}, {5, 6}}), 2).has_value());
}

TEST_CASE("minimum_cover is minimal and lex-least against subset enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Family f = oracle::to_family(oracle::random_family(rng, 8, 3, 12));
    const auto cover = minimum_cover(f, f.universe());
    REQUIRE(cover.has_value());
    const oracle::Sets sets = oracle::sets_of(f);
    // Reference: first covering subset by size, then lex.
    oracle::Set expected;
    bool found = false;
    for (int size = 0; size <= f.universe() && !found; ++size)
      for (const oracle::Set& x : oracle::combos(f.universe(), size)) {
        bool ok = true;
        for (const oracle::Set& s : sets) ok = ok && oracle::inter(s, x) > 0;
        if (ok) {
          expected = x;
          found = true;
          break;
        }
      }
    CHECK(cover->elements() == expected);
  }
}

TEST_CASE("min_element_classes examples") {
  const auto classes = min_element_classes(lex_segment(5, 2, 5));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].element == 1);
  CHECK(oracle::sets_of(classes[0].members) == oracle::Sets{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(classes[1].element == 2);
  CHECK(oracle::sets_of(classes[1].members) == oracle::Sets{{2, 3}});
  CHECK(min_element_classes(Family(5, 2)).empty());
  const auto single = min_element_classes(family(5, 2, {{2, 3}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].element == 2);
}

TEST_CASE("identities on 1000 seeded random families") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 1000; ++trial) {
    const oracle::RandomFamily r = oracle::random_family(rng, 12, 4, 60);
    const Family f = oracle::to_family(r);
    const std::uint64_t m = f.size();
    const std::uint64_t k = static_cast<std::uint64_t>(f.arity());
    const DegreeVector deg = degree_vector(f);

    CHECK(deg.total() == k * m);
    CHECK(omega(f) == oracle::omega_pairs(r.sets));
    CHECK(omega(f) == omega_via_degrees(f));
    CHECK(2 * omega(f) == deg.sum_of_squares() - k * m);
    CHECK(cross_omega(f, f) == 2 * omega(f) + k * m);
    CHECK(disjoint_pairs(f) + intersecting_pairs(f) == m * (m > 0 ? m - 1 : 0) / 2);
    for (const KSet& s : f.members()) {
      std::uint64_t degree_sum = 0;
      for (int x : s.elements()) degree_sum += deg[x];
      CHECK(cross_omega(s, f) == degree_sum);
    }
    for (int x = 1; x <= f.universe(); ++x) CHECK(deg[x] <= binomial64(f.universe() - 1, f.arity() - 1));
  }
}
