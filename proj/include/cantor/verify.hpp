#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantor/evp.hpp"
#include "cantor/filters.hpp"
#include "cantor/homeo.hpp"

namespace cantor {

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accepted-value constraint for generated sets.
struct gen_constraint {
  enum class kind { none, subset_of, member_of, non_member_of, disjoint_from };
  kind k = kind::none;
  std::optional<ev_periodic_set> set;     // subset_of / disjoint_from
  std::optional<filter_spec> filter;      // member_of / non_member_of

  static gen_constraint none() { return {}; }
  static gen_constraint subset_of(ev_periodic_set s);
  static gen_constraint member_of(filter_spec f);
  static gen_constraint non_member_of(filter_spec f);
  static gen_constraint disjoint_from(ev_periodic_set s);
};

/// Deterministic stream of eventually periodic sets. Constrained draws
/// use rejection sampling capped at 1000 rounds; exhausting the cap
/// raises generation_error.
class evp_gen {
public:
  evp_gen(std::uint64_t seed, std::uint32_t max_prefix, std::uint32_t max_block,
          gen_constraint c = gen_constraint::none());

  ev_periodic_set next();

private:
  std::mt19937_64 rng_;
  std::uint32_t max_prefix_;
  std::uint32_t max_block_;
  gen_constraint constraint_;
};

struct gen_sizes {
  std::uint32_t max_prefix = 6;
  std::uint32_t max_block = 8;
};

/// Derives the per-trial seed; identical across serial and parallel runs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial);

/// Shape-valid random tuple: per coordinate a subset of its carrier,
/// with declared disjoint pairs enforced.
exact_tuple gen_tuple(const tuple_shape& shape, std::mt19937_64& rng, gen_sizes sizes);

struct verify_row {
  std::string suite;
  std::uint64_t trial = 0;
  bool pass = false;
  std::string detail;
};

/// Suite outcome. write() emits the header line
///   # suite=<name> seed=<n> trials=<k>
/// followed by one tab-separated row (suite, trial, verdict, detail)
/// per trial, in trial order. Failing rows carry full point literals.
struct verify_report {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<verify_row> rows;

  std::uint64_t failures() const;
  bool all_pass() const { return failures() == 0; }
  void write(std::ostream& out) const;
  std::string to_string() const;
};

enum class run_mode { serial, parallel };

/// backward(forward(x)) == x on random domain tuples and
/// forward(backward(y)) == y on random codomain tuples, exact.
verify_report roundtrip_suite(const homeo& h, std::uint64_t trials, std::uint64_t seed,
                              run_mode mode = run_mode::parallel, gen_sizes sizes = {});

/// Membership transport across square_homeo(f): member pairs map into
/// the filter, members split back into member pairs, and pairs with a
/// non-member coordinate map outside, all decided exactly.
verify_report preservation_suite(const filter_spec& f, std::uint64_t trials,
                                 std::uint64_t seed,
                                 run_mode mode = run_mode::parallel,
                                 gen_sizes sizes = {});

/// Lazy-oracle forward evaluation agrees bitwise with the exact pipeline
/// on positions [0, depth) of every output coordinate.
verify_report agreement_suite(const homeo& h, std::uint64_t trials, std::uint64_t depth,
                              std::uint64_t seed, run_mode mode = run_mode::parallel,
                              gen_sizes sizes = {});

/// Sampled filter conditions: no empty set, whole line present, closure
/// under finite modification, supersets and intersections.
verify_report filter_axiom_suite(const filter_spec& f, std::uint64_t trials,
                                 std::uint64_t seed,
                                 run_mode mode = run_mode::parallel,
                                 gen_sizes sizes = {});

struct modulus_row {
  std::uint64_t position = 0;
  std::uint64_t queries = 0;    // distinct input positions so far
  std::uint64_t max_index = 0;  // largest input position so far
};

struct modulus_table {
  std::vector<modulus_row> rows;
  bool max_nondecreasing() const;
  void write(std::ostream& out) const;
};

/// Evaluates output bits 0..k_max-1 of h's forward map through
/// instrumented oracles over a seeded random input, recording the
/// cumulative query counts that witness the continuity modulus.
modulus_table modulus_probe(const homeo& h, std::uint64_t k_max,
                            std::uint64_t seed = 2026, gen_sizes sizes = {});

}  // namespace cantor
