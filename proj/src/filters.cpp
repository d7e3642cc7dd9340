#include "cantor/filters.hpp"

#include <numeric>
#include <stdexcept>

namespace cantor {

namespace {

ev_periodic_set random_finite(std::mt19937_64& rng, std::uint32_t span) {
  bitvec p(span, 0);
  for (auto& v : p) v = rng() & 1;
  return ev_periodic_set::make(std::move(p), {0});
}

}  // namespace

filter_spec frechet() {
  filter_spec f;
  f.name = "frechet";
  f.decide = [](const ev_periodic_set& x) {
    return classify_finiteness(x) == finiteness::cofinite;
  };
  f.principal = true;
  f.generator = ev_periodic_set::universe();
  f.sample_member = [](std::mt19937_64& rng) {
    return set_diff(ev_periodic_set::universe(), random_finite(rng, 12));
  };
  return f;
}

filter_spec principal_filter(const ev_periodic_set& a) {
  const auto gen = a.canonical();
  if (classify_finiteness(gen) == finiteness::finite)
    throw std::domain_error("principal generator must be infinite: " + gen.to_string());
  filter_spec f;
  f.name = "principal:" + gen.to_string();
  f.decide = [gen](const ev_periodic_set& x) { return almost_subset(gen, x); };
  f.principal = true;
  f.generator = gen;
  f.sample_member = [gen](std::mt19937_64& rng) {
    auto noise = random_ev_periodic(rng, 6, 8);
    return set_union(set_diff(gen, random_finite(rng, 12)), noise);
  };
  return f;
}

namespace {

// X contains a tail of the multiples of some power of two iff it
// contains a tail of the multiples of 2^a, where 2^a is the largest
// power of two dividing X's canonical period: the residues hit by
// multiples of 2^n modulo the period stabilize from n = a on.
bool dyadic_decide(const ev_periodic_set& x) {
  const auto c = x.is_canonical() ? x : x.canonical();
  const std::uint64_t period = c.block().size();
  const std::uint64_t plen = c.prefix().size();
  std::uint64_t step = 1;
  while ((period / step) % 2 == 0) step *= 2;
  for (std::uint64_t r = 0; r < period; r += step) {
    const std::uint64_t idx = (r + period - (plen % period)) % period;
    if (!c.block()[idx]) return false;
  }
  return true;
}

}  // namespace

filter_spec dyadic_chain() {
  filter_spec f;
  f.name = "dyadic";
  f.decide = dyadic_decide;
  f.principal = false;
  f.omega = ground_set(ev_periodic_set::multiples(2));
  f.omega_star = ground_set(ev_periodic_set::multiples(4));
  f.sample_member = [](std::mt19937_64& rng) {
    const std::uint64_t k = rng() % 6;
    auto base = ev_periodic_set::multiples(std::uint64_t{1} << k);
    auto noise = random_ev_periodic(rng, 6, 8);
    return set_union(set_diff(base, random_finite(rng, 12)), noise);
  };
  return f;
}

bool mem_filter(const filter_spec& f, const ev_periodic_set& x) {
  return f.decide(x.is_canonical() ? x : x.canonical());
}

semifilter_spec semifilter_t() {
  const auto evens = ev_periodic_set::multiples(2);
  const auto odds = set_complement(evens);
  semifilter_spec t{
      "semifilter-T",
      [evens, odds](const ev_periodic_set& x) {
        const bool trace1_infinite =
            classify_finiteness(set_intersect(x, evens)) != finiteness::finite;
        const bool trace2_cofinite =
            classify_finiteness(set_diff(odds, x)) == finiteness::finite;
        return trace1_infinite || trace2_cofinite;
      },
      ground_set(evens),
      ground_set(odds),
  };
  return t;
}

t_part t_decompose(const ev_periodic_set& x) {
  const auto evens = ev_periodic_set::multiples(2);
  const auto odds = set_complement(evens);
  if (classify_finiteness(set_intersect(x, evens)) != finiteness::finite)
    return t_part::complete_part;
  if (classify_finiteness(set_diff(odds, x)) == finiteness::finite)
    return t_part::countable_part;
  return t_part::non_member;
}

subspace_report closed_subspace_checks(std::uint64_t samples, std::uint64_t seed) {
  const auto t = semifilter_t();
  const auto evens = t.omega1.carrier();
  const auto odds = t.omega2.carrier();
  std::mt19937_64 rng(seed);
  subspace_report rep;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto in_cof = set_diff(odds, random_finite(rng, 16));
    ++rep.cofinite_samples;
    if (t.decide(in_cof)) ++rep.cofinite_members;
    const auto sup = set_union(evens, random_ev_periodic(rng, 8, 8));
    ++rep.superset_samples;
    if (t.decide(sup)) ++rep.superset_members;
  }
  return rep;
}

prefilter_spec supersets_of(const ev_periodic_set& c) {
  const auto core = c.canonical();
  prefilter_spec g;
  g.name = "supersets:" + core.to_string();
  g.decide = [core](const ev_periodic_set& x) { return is_subset(core, x); };
  g.core = core;
  return g;
}

prefilter_spec filter_as_prefilter(const filter_spec& f) {
  prefilter_spec g;
  g.name = f.name;
  g.decide = f.decide;
  g.core = ev_periodic_set::empty_set();
  return g;
}

}  // namespace cantor
