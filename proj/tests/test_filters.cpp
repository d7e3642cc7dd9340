#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cantor/filters.hpp"
#include "cantor/homeo.hpp"
#include "support.hpp"

using namespace cantor;

namespace {

ev_periodic_set evens() { return ev_periodic_set::multiples(2); }
ev_periodic_set odds() { return set_complement(evens()); }
ev_periodic_set mult4() { return ev_periodic_set::multiples(4); }

}  // namespace

TEST_CASE("frechet decides cofiniteness") {
  const auto f = frechet();
  CHECK(mem_filter(f, set_diff(ev_periodic_set::universe(),
                               ev_periodic_set::from_elements({0, 2}))));
  CHECK_FALSE(mem_filter(f, evens()));
  CHECK(f.principal);
}

TEST_CASE("principal filters decide almost inclusion of the generator") {
  const auto f = principal_filter(evens());
  const auto member = set_union(set_diff(evens(), ev_periodic_set::from_elements({0})),
                                ev_periodic_set::from_elements({1}));
  CHECK(mem_filter(f, member));
  CHECK_FALSE(mem_filter(f, mult4()));
  CHECK_THROWS_AS(principal_filter(ev_periodic_set::from_elements({1, 2})),
                  std::domain_error);
}

TEST_CASE("dyadic membership on named sets") {
  const auto f = dyadic_chain();
  CHECK(mem_filter(f, evens()));
  CHECK_FALSE(mem_filter(f, odds()));
  CHECK_FALSE(oracle_support::brute_dyadic_member(odds()));
  const auto wobbled = set_union(set_diff(mult4(), ev_periodic_set::from_elements({0})),
                                 ev_periodic_set::from_elements({1}));
  CHECK(mem_filter(f, wobbled));
  CHECK(oracle_support::brute_dyadic_member(wobbled));
}

TEST_CASE("dyadic closed form agrees with the brute-force oracle") {
  const auto f = dyadic_chain();
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_ev_periodic(rng, 8, 12);
    CHECK(f.decide(x) == oracle_support::brute_dyadic_member(x));
  }
  // and on members by construction
  for (int i = 0; i < 200; ++i) {
    const auto x = f.sample_member(rng);
    CHECK(f.decide(x));
    CHECK(oracle_support::brute_dyadic_member(x));
  }
}

TEST_CASE("dyadic chain descends strictly") {
  const auto f = dyadic_chain();
  for (int n = 0; n <= 10; ++n) {
    const auto coarse = ev_periodic_set::multiples(std::uint64_t{1} << n);
    const auto fine = ev_periodic_set::multiples(std::uint64_t{1} << (n + 1));
    CHECK(mem_filter(f, fine));
    CHECK_FALSE(almost_subset(coarse, fine));
  }
}

TEST_CASE("dyadic witnesses satisfy their side conditions") {
  const auto f = dyadic_chain();
  REQUIRE(f.omega.has_value());
  REQUIRE(f.omega_star.has_value());
  CHECK(f.decide(f.omega->carrier()));
  CHECK(f.decide(f.omega_star->carrier()));
  CHECK(classify_finiteness(f.omega->carrier()) == finiteness::bi_infinite);
  CHECK(is_subset(f.omega_star->carrier(), f.omega->carrier()));
  CHECK(classify_finiteness(set_diff(f.omega->carrier(), f.omega_star->carrier())) ==
        finiteness::bi_infinite);
}

TEST_CASE("semifilter membership and decomposition") {
  const auto t = semifilter_t();
  CHECK(t_decompose(evens()) == t_part::complete_part);
  const auto low_noise = set_union(ev_periodic_set::from_elements({0}), odds());
  CHECK(t_decompose(low_noise) == t_part::countable_part);
  CHECK(t_decompose(ev_periodic_set::from_elements({0, 1, 3})) == t_part::non_member);
  CHECK(t.decide(evens()));
  CHECK(t.decide(low_noise));
  CHECK_FALSE(t.decide(ev_periodic_set::from_elements({0, 1, 3})));

  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    CHECK(t.decide(x) == (t_decompose(x) != t_part::non_member));
  }
}

TEST_CASE("semifilter satisfies the first three conditions but not intersection") {
  const auto t = semifilter_t();
  CHECK_FALSE(t.decide(ev_periodic_set::empty_set()));
  CHECK(t.decide(ev_periodic_set::universe()));

  std::mt19937_64 rng(33);
  int members_seen = 0;
  for (int i = 0; i < 500; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    if (!t.decide(x)) continue;
    ++members_seen;
    // superset closure
    CHECK(t.decide(set_union(x, random_ev_periodic(rng, 6, 8))));
    // finite modification closure
    const auto probe = ev_periodic_set::from_elements({std::uint64_t(i % 64)});
    CHECK(t.decide(set_diff(x, probe)));
    CHECK(t.decide(set_union(x, probe)));
  }
  CHECK(members_seen > 100);

  // the recorded counterexample to intersection closure
  const auto a = evens();
  const auto b = set_union(ev_periodic_set::from_elements({0}), odds());
  CHECK(t.decide(a));
  CHECK(t.decide(b));
  CHECK(set_intersect(a, b) == ev_periodic_set::from_elements({0}));
  CHECK_FALSE(t.decide(set_intersect(a, b)));
}

TEST_CASE("distinguished subspaces sit inside the semifilter") {
  const auto rep = closed_subspace_checks(100, 5);
  CHECK(rep.all_pass());
  CHECK(rep.cofinite_samples == 100);
  CHECK(rep.superset_samples == 100);
  CHECK(semifilter_t().decide(set_diff(odds(), ev_periodic_set::from_elements({1}))));
  CHECK(semifilter_t().decide(set_union(evens(), ev_periodic_set::from_elements({1}))));
}

TEST_CASE("principal classification") {
  CHECK(principal_classify(frechet()) == principal_class::q_tag);
  CHECK(principal_classify(principal_filter(evens())) ==
        principal_class::q_times_cantor_tag);
  const auto cofinite_gen = set_diff(ev_periodic_set::universe(),
                                     ev_periodic_set::from_elements({0, 1}));
  CHECK(principal_classify(principal_filter(cofinite_gen)) == principal_class::q_tag);
  CHECK_THROWS_AS(principal_classify(dyadic_chain()), std::domain_error);
}

TEST_CASE("principal decomposition splits along the generator") {
  const auto f = principal_filter(evens());
  const homeo h = principal_decompose(f);
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    const auto split = h.forward({x});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == set_intersect(x, evens()));
    CHECK(split[1] == set_diff(x, evens()));
    CHECK(h.backward(split) == exact_tuple{x});
  }
  CHECK_THROWS_AS(principal_decompose(frechet()), std::domain_error);
}

TEST_CASE("prefilter normalization") {
  const auto two_points = supersets_of(ev_periodic_set::from_elements({0, 1}));
  const auto r1 = prefilter_normalize(two_points);
  REQUIRE(std::holds_alternative<cantor_tag>(r1));
  CHECK(std::get<cantor_tag>(r1).core == ev_periodic_set::from_elements({0, 1}));

  const auto above_evens = supersets_of(evens());
  const auto r2 = prefilter_normalize(above_evens);
  REQUIRE(std::holds_alternative<cantor_tag>(r2));
  CHECK(std::get<cantor_tag>(r2).core == evens());

  const auto fre = filter_as_prefilter(frechet());
  const auto r3 = prefilter_normalize(fre);
  REQUIRE(std::holds_alternative<filter_spec>(r3));
  const auto& back = std::get<filter_spec>(r3);
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_ev_periodic(rng, 6, 8);
    CHECK(back.decide(x) == frechet().decide(x));
  }

  // supersets of a cofinite core form a finite prefilter
  const auto tiny = supersets_of(set_diff(ev_periodic_set::universe(),
                                          ev_periodic_set::from_elements({0})));
  CHECK_THROWS_AS(prefilter_normalize(tiny), std::domain_error);
}
