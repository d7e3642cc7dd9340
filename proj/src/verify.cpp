#include "cantor/verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "cantor/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cantor {

gen_constraint gen_constraint::subset_of(ev_periodic_set s) {
  gen_constraint c;
  c.k = kind::subset_of;
  c.set = std::move(s);
  return c;
}

gen_constraint gen_constraint::member_of(filter_spec f) {
  gen_constraint c;
  c.k = kind::member_of;
  c.filter = std::move(f);
  return c;
}

gen_constraint gen_constraint::non_member_of(filter_spec f) {
  gen_constraint c;
  c.k = kind::non_member_of;
  c.filter = std::move(f);
  return c;
}

gen_constraint gen_constraint::disjoint_from(ev_periodic_set s) {
  gen_constraint c;
  c.k = kind::disjoint_from;
  c.set = std::move(s);
  return c;
}

evp_gen::evp_gen(std::uint64_t seed, std::uint32_t max_prefix, std::uint32_t max_block,
                 gen_constraint c)
    : rng_(seed), max_prefix_(max_prefix), max_block_(max_block),
      constraint_(std::move(c)) {
  if (max_block_ == 0) throw std::invalid_argument("max_block must be >= 1");
}

ev_periodic_set evp_gen::next() {
  constexpr int kMaxRejections = 1000;
  switch (constraint_.k) {
    case gen_constraint::kind::none:
      return random_ev_periodic(rng_, max_prefix_, max_block_);
    case gen_constraint::kind::subset_of:
      return set_intersect(random_ev_periodic(rng_, max_prefix_, max_block_),
                           *constraint_.set);
    case gen_constraint::kind::disjoint_from:
      return set_diff(random_ev_periodic(rng_, max_prefix_, max_block_),
                      *constraint_.set);
    case gen_constraint::kind::member_of: {
      const auto& f = *constraint_.filter;
      if (!f.sample_member)
        throw generation_error("no member sampler for " + f.name);
      for (int round = 0; round < kMaxRejections; ++round) {
        auto x = f.sample_member(rng_);
        if (f.decide(x)) return x;
      }
      throw generation_error("member_of(" + f.name + ") exhausted rejection rounds");
    }
    case gen_constraint::kind::non_member_of: {
      const auto& f = *constraint_.filter;
      for (int round = 0; round < kMaxRejections; ++round) {
        auto x = random_ev_periodic(rng_, max_prefix_, max_block_);
        if (!f.decide(x)) return x;
      }
      throw generation_error("non_member_of(" + f.name + ") exhausted rejection rounds");
    }
  }
  throw generation_error("unreachable");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

exact_tuple gen_tuple(const tuple_shape& shape, std::mt19937_64& rng, gen_sizes sizes) {
  exact_tuple t;
  t.reserve(shape.arity());
  for (const auto& carrier : shape.carriers)
    t.push_back(set_intersect(random_ev_periodic(rng, sizes.max_prefix, sizes.max_block),
                              carrier.carrier()));
  for (const auto& [i, j] : shape.disjoint) t[j] = set_diff(t[j], t[i]);
  return t;
}

std::uint64_t verify_report::failures() const {
  std::uint64_t n = 0;
  for (const auto& r : rows)
    if (!r.pass) ++n;
  return n;
}

void verify_report::write(std::ostream& out) const {
  out << "# suite=" << suite << " seed=" << seed << " trials=" << trials << "\n";
  for (const auto& r : rows) {
    out << r.suite << "\t" << r.trial << "\t" << (r.pass ? "pass" : "fail") << "\t"
        << r.detail << "\n";
  }
}

std::string verify_report::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

namespace {

std::string tuple_literals(const exact_tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ";";
    out += t[i].to_string();
  }
  return out;
}

// Runs one body per trial, serially or with OpenMP; rows land in trial
// order either way, and each trial derives its own seed, so reports are
// identical across modes.
verify_report run_trials(std::string suite, std::uint64_t trials, std::uint64_t seed,
                         run_mode mode,
                         const std::function<verify_row(std::uint64_t)>& body) {
  verify_report rep;
  rep.suite = suite;
  rep.seed = seed;
  rep.trials = trials;
  rep.rows.resize(trials);
  auto guarded = [&](std::uint64_t t) {
    try {
      rep.rows[t] = body(t);
    } catch (const std::exception& e) {
      rep.rows[t] = verify_row{suite, t, false, std::string("error: ") + e.what()};
    }
    rep.rows[t].suite = suite;
    rep.rows[t].trial = t;
  };
  if (mode == run_mode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(trials); ++t)
      guarded(static_cast<std::uint64_t>(t));
#else
    for (std::uint64_t t = 0; t < trials; ++t) guarded(t);
#endif
  } else {
    for (std::uint64_t t = 0; t < trials; ++t) guarded(t);
  }
  return rep;
}

}  // namespace

verify_report roundtrip_suite(const homeo& h, std::uint64_t trials, std::uint64_t seed,
                              run_mode mode, gen_sizes sizes) {
  return run_trials("roundtrip", trials, seed, mode, [&h, seed, sizes](std::uint64_t t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    verify_row row;
    const exact_tuple x = gen_tuple(h.dom, rng, sizes);
    const exact_tuple y = h.forward(x);
    const exact_tuple x2 = h.backward(y);
    if (x2 != x) {
      row.pass = false;
      row.detail = "backward(forward(x)) != x for x=" + tuple_literals(x) +
                   " got=" + tuple_literals(x2);
      return row;
    }
    const exact_tuple y1 = gen_tuple(h.cod, rng, sizes);
    const exact_tuple x1 = h.backward(y1);
    const exact_tuple y2 = h.forward(x1);
    if (y2 != y1) {
      row.pass = false;
      row.detail = "forward(backward(y)) != y for y=" + tuple_literals(y1) +
                   " got=" + tuple_literals(y2);
      return row;
    }
    row.pass = true;
    row.detail = "ok";
    return row;
  });
}

verify_report preservation_suite(const filter_spec& f, std::uint64_t trials,
                                 std::uint64_t seed, run_mode mode, gen_sizes sizes) {
  const homeo h = square_homeo(f);
  // Three phases of `trials` rows each: member pairs forward, members
  // backward, tainted pairs forward.
  const std::uint64_t total = 3 * trials;
  return run_trials("preservation", total, seed,
                    mode, [&, seed, sizes, trials](std::uint64_t t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    const std::uint64_t phase = t / trials;
    verify_row row;
    auto member = [&] {
      evp_gen g(rng(), sizes.max_prefix, sizes.max_block,
                gen_constraint::member_of(f));
      return g.next();
    };
    auto non_member = [&] {
      evp_gen g(rng(), sizes.max_prefix, sizes.max_block,
                gen_constraint::non_member_of(f));
      return g.next();
    };
    if (phase == 0) {
      const exact_tuple pair{member(), member()};
      const auto image = h.forward(pair);
      row.pass = f.decide(image[0]);
      row.detail = row.pass ? "ok"
                            : "member pair " + tuple_literals(pair) +
                                  " left the filter: " + image[0].to_string();
    } else if (phase == 1) {
      const auto point = member();
      const auto pair = h.backward({point});
      row.pass = f.decide(pair[0]) && f.decide(pair[1]);
      row.detail = row.pass ? "ok"
                            : "member " + point.to_string() +
                                  " split into non-member pair " + tuple_literals(pair);
    } else {
      exact_tuple pair;
      switch (t % 3) {
        case 0: pair = {non_member(), random_ev_periodic(rng, sizes.max_prefix,
                                                         sizes.max_block)}; break;
        case 1: pair = {member(), non_member()}; break;
        default: pair = {non_member(), non_member()}; break;
      }
      const auto image = h.forward(pair);
      row.pass = !f.decide(image[0]);
      row.detail = row.pass ? "ok"
                            : "tainted pair " + tuple_literals(pair) +
                                  " landed in the filter: " + image[0].to_string();
    }
    return row;
  });
}

verify_report agreement_suite(const homeo& h, std::uint64_t trials, std::uint64_t depth,
                              std::uint64_t seed, run_mode mode, gen_sizes sizes) {
  return run_trials(
      "agreement", trials, seed, mode, [&h, seed, depth, sizes](std::uint64_t t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        verify_row row;
        const exact_tuple x = gen_tuple(h.dom, rng, sizes);
        const exact_tuple y = h.forward(x);
        lazy_tuple lx;
        std::vector<oracle_point> oracles;
        for (const auto& xi : x) oracles.push_back(oracle_point::of(xi));
        for (const auto& o : oracles) lx.push_back(o.as_lazy());
        const lazy_tuple ly = h.forward_lazy(lx);
        for (std::size_t i = 0; i < y.size(); ++i) {
          for (std::uint64_t k = 0; k < depth; ++k) {
            if (ly[i].bit(k) != y[i].bit(k)) {
              row.pass = false;
              row.detail = "coordinate " + std::to_string(i) + " bit " +
                           std::to_string(k) + " differs for input " +
                           tuple_literals(x);
              return row;
            }
          }
        }
        for (const auto& o : oracles) {
          if (o.purity_violated()) {
            row.pass = false;
            row.detail = "oracle purity violated for input " + tuple_literals(x);
            return row;
          }
        }
        row.pass = true;
        row.detail = "ok";
        return row;
      });
}

verify_report filter_axiom_suite(const filter_spec& f, std::uint64_t trials,
                                 std::uint64_t seed, run_mode mode, gen_sizes sizes) {
  return run_trials(
      "axioms", trials, seed, mode, [&f, seed, sizes](std::uint64_t t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        verify_row row;
        evp_gen members(rng(), sizes.max_prefix, sizes.max_block,
                        gen_constraint::member_of(f));
        const auto x = members.next();
        const auto y = members.next();
        const auto noise = random_ev_periodic(rng, sizes.max_prefix, sizes.max_block);
        auto fail = [&](const std::string& what) {
          row.pass = false;
          row.detail = what + " x=" + x.to_string() + " y=" + y.to_string();
          return row;
        };
        if (f.decide(ev_periodic_set::empty_set())) return fail("empty set admitted");
        if (!f.decide(ev_periodic_set::universe())) return fail("whole line rejected");
        if (!f.decide(set_intersect(x, y))) return fail("intersection rejected");
        if (!f.decide(set_union(x, noise))) return fail("superset rejected");
        // finite modification: drop a point, add a point
        const auto probe = ev_periodic_set::from_elements({t % 64});
        if (!f.decide(set_union(set_diff(x, probe), probe)))
          return fail("finite modification rejected");
        if (!f.decide(set_diff(x, probe)) || !f.decide(set_union(x, probe)))
          return fail("finite modification rejected");
        row.pass = true;
        row.detail = "ok";
        return row;
      });
}

bool modulus_table::max_nondecreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].max_index < rows[i - 1].max_index) return false;
  return true;
}

void modulus_table::write(std::ostream& out) const {
  out << "position\tqueries\tmax_index\n";
  for (const auto& r : rows)
    out << r.position << "\t" << r.queries << "\t" << r.max_index << "\n";
}

modulus_table modulus_probe(const homeo& h, std::uint64_t k_max, std::uint64_t seed,
                            gen_sizes sizes) {
  std::mt19937_64 rng(seed);
  const exact_tuple x = gen_tuple(h.dom, rng, sizes);
  std::vector<oracle_point> oracles;
  lazy_tuple lx;
  for (const auto& xi : x) oracles.push_back(oracle_point::of(xi));
  for (const auto& o : oracles) lx.push_back(o.as_lazy());
  const lazy_tuple ly = h.forward_lazy(lx);
  modulus_table table;
  table.rows.reserve(k_max);
  for (std::uint64_t k = 0; k < k_max; ++k) {
    for (const auto& out : ly) out.bit(k);
    modulus_row r;
    r.position = k;
    for (const auto& o : oracles) {
      r.queries += o.distinct_queries();
      r.max_index = std::max(r.max_index, o.max_queried());
    }
    table.rows.push_back(r);
  }
  return table;
}

}  // namespace cantor
