#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cantor/evp.hpp"
#include "cantor/ground.hpp"
#include "cantor/oracle.hpp"
#include "support.hpp"

using namespace cantor;
using oracle_support::expand_bits;

namespace {

ev_periodic_set evens() { return ev_periodic_set::multiples(2); }
ev_periodic_set odds() { return set_complement(evens()); }
ev_periodic_set mult4() { return ev_periodic_set::multiples(4); }

}  // namespace

TEST_CASE("canonicalize collapses repeated blocks and absorbable prefixes") {
  CHECK(ev_periodic_set::raw({1}, {1, 1}).canonical() == ev_periodic_set::parse("|1"));
  CHECK(ev_periodic_set::raw({}, {1, 0, 1, 0}).canonical() ==
        ev_periodic_set::parse("|10"));

  // (10|10) and (|10) describe the same set: compare by expansion.
  const auto a = ev_periodic_set::raw({1, 0}, {1, 0});
  const auto b = ev_periodic_set::parse("|10");
  CHECK(expand_bits(a, 9) == expand_bits(b, 9));
  CHECK(a.canonical() == b);
}

TEST_CASE("canonicalize is idempotent and preserves membership") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t plen = rng() % 8;
    const std::size_t blen = 1 + rng() % 8;
    bitvec p(plen), b(blen);
    for (auto& v : p) v = rng() & 1;
    for (auto& v : b) v = rng() & 1;
    const auto raw = ev_periodic_set::raw(p, b);
    const auto c = raw.canonical();
    CHECK(c.is_canonical());
    CHECK(c.canonical() == c);
    for (std::uint64_t pos = 0; pos < 256; ++pos) CHECK(raw.bit(pos) == c.bit(pos));
  }
}

TEST_CASE("malformed descriptions are rejected") {
  CHECK_THROWS_AS(ev_periodic_set::raw({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ev_periodic_set::parse("01"), std::invalid_argument);
  CHECK_THROWS_AS(ev_periodic_set::parse("0|"), std::invalid_argument);
  CHECK_THROWS_AS(ev_periodic_set::parse("0|1|0"), std::invalid_argument);
  CHECK_THROWS_AS(ev_periodic_set::parse("0x|1"), std::invalid_argument);
}

TEST_CASE("literals round trip canonically") {
  for (const char* lit : {"|0", "|1", "|10", "0111|10", "1|01"}) {
    const auto x = ev_periodic_set::parse(lit);
    CHECK(x.is_canonical());
    CHECK(ev_periodic_set::parse(x.to_string()) == x);
  }
  CHECK(ev_periodic_set::parse("0111|10").to_string() == "0111|10");
}

TEST_CASE("boolean operations on named sets") {
  CHECK(set_union(evens(), odds()) == ev_periodic_set::universe());
  CHECK(set_complement(evens()) == ev_periodic_set::parse("|01"));

  // intersect(evens, mult4) == mult4: check by expansion to 17.
  const auto both = set_intersect(evens(), mult4());
  CHECK(expand_bits(both, 17) == expand_bits(mult4(), 17));
  CHECK(both == mult4());
}

TEST_CASE("boolean operations agree with direct bitwise expansion") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    const auto y = random_ev_periodic(rng, 6, 8);
    const std::uint64_t horizon = 4 * std::lcm(x.block().size(), y.block().size()) +
                                  x.prefix().size() + y.prefix().size();
    const auto u = set_union(x, y);
    const auto v = set_intersect(x, y);
    const auto d = set_diff(x, y);
    const auto c = set_complement(x);
    for (std::uint64_t p = 0; p < horizon; ++p) {
      CHECK(u.bit(p) == (x.bit(p) || y.bit(p)));
      CHECK(v.bit(p) == (x.bit(p) && y.bit(p)));
      CHECK(d.bit(p) == (x.bit(p) && !y.bit(p)));
      CHECK(c.bit(p) == !x.bit(p));
    }
  }
}

TEST_CASE("De Morgan holds exactly") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    const auto y = random_ev_periodic(rng, 6, 8);
    CHECK(set_complement(set_union(x, y)) ==
          set_intersect(set_complement(x), set_complement(y)));
  }
}

TEST_CASE("almost inclusion") {
  CHECK(almost_subset(mult4(), evens()));
  CHECK_FALSE(almost_subset(evens(), mult4()));
  CHECK(classify_finiteness(set_diff(evens(), mult4())) == finiteness::bi_infinite);
  CHECK(almost_equal(evens(), set_diff(evens(), ev_periodic_set::from_elements({0}))));

  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    const auto y = random_ev_periodic(rng, 6, 8);
    CHECK(almost_subset(x, y) == oracle_support::brute_almost_subset(x, y));
  }
}

TEST_CASE("finiteness classification") {
  CHECK(classify_finiteness(ev_periodic_set::raw({1, 1, 1}, {0})) == finiteness::finite);
  CHECK(classify_finiteness(ev_periodic_set::raw({0}, {1})) == finiteness::cofinite);
  CHECK(classify_finiteness(evens()) == finiteness::bi_infinite);
}

TEST_CASE("rank and select") {
  const ground_set ge(evens());
  const ground_set go(odds());
  CHECK(ge.select(3) == 6);
  CHECK(ge.rank(7) == 4);
  CHECK(go.select(go.rank(9)) == 9);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    auto carrier = random_ev_periodic(rng, 6, 8);
    if (classify_finiteness(carrier) == finiteness::finite)
      carrier = set_union(carrier, evens());
    const ground_set g(carrier);
    for (std::uint64_t k = 0; k < 1000; ++k) CHECK(g.rank(g.select(k)) == k);
    for (std::uint64_t n = 0; n < 1000; ++n)
      if (g.contains(n)) CHECK(g.select(g.rank(n)) == n);
  }
}

TEST_CASE("finite carriers are rejected") {
  CHECK_THROWS_AS(ground_set(ev_periodic_set::from_elements({0, 1, 2})),
                  std::domain_error);
}

TEST_CASE("prefix agreement across exact and lazy points") {
  CHECK(prefix_agree(lazy_point::of(evens()), evens(), 512));
  CHECK_FALSE(prefix_agree(evens(), odds(), 1));
  // (1|10) and (|10) first disagree at position 1.
  const auto a = ev_periodic_set::raw({1}, {1, 0});
  const auto b = ev_periodic_set::parse("|10");
  CHECK(a.bit(0) == b.bit(0));
  CHECK(a.bit(1) != b.bit(1));
  CHECK_FALSE(prefix_agree(a, b, 64));
  CHECK(prefix_agree(a, b, 1));
}

TEST_CASE("oracle points count distinct queries and detect impurity") {
  const auto x = evens();
  oracle_point o = oracle_point::of(x);
  CHECK(o.distinct_queries() == 0);
  o.query(4);
  o.query(4);
  o.query(9);
  CHECK(o.distinct_queries() == 2);
  CHECK(o.max_queried() == 9);
  o.recheck(4);
  CHECK_FALSE(o.purity_violated());

  int flips = 0;
  oracle_point bad([&flips](std::uint64_t) { return flips++ % 2 == 0; });
  bad.query(0);
  bad.recheck(0);
  CHECK(bad.purity_violated());
}
