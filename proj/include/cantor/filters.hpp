#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "cantor/evp.hpp"
#include "cantor/ground.hpp"

namespace cantor {

/// A named filter on the naturals with an exact membership decision on
/// eventually periodic sets, plus the witnesses the homeomorphism
/// constructions need: omega is a member that is not cofinite, and
/// omega_star is a member inside omega leaving an infinite remainder.
/// Witnesses are present for non-principal filters only.
struct filter_spec {
  std::string name;
  std::function<bool(const ev_periodic_set&)> decide;
  bool principal = false;
  std::optional<ev_periodic_set> generator;
  std::optional<ground_set> omega;
  std::optional<ground_set> omega_star;
  /// Draws a member by construction; callers re-check with decide.
  std::function<ev_periodic_set(std::mt19937_64&)> sample_member;
};

/// The cofinite sets; principal here, with generator the whole line.
filter_spec frechet();

/// {X : A almost included in X}; requires A infinite.
filter_spec principal_filter(const ev_periodic_set& a);

/// The non-principal filter generated by the chain of sets of
/// multiples of powers of two. Witnesses: multiples of 2 and of 4.
filter_spec dyadic_chain();

bool mem_filter(const filter_spec& f, const ev_periodic_set& x);

/// A semifilter: closed under supersets and finite modification but
/// not under intersection. The fixed partition is evens/odds.
struct semifilter_spec {
  std::string name;
  std::function<bool(const ev_periodic_set&)> decide;
  ground_set omega1;
  ground_set omega2;
};

semifilter_spec semifilter_t();

enum class t_part { complete_part, countable_part, non_member };

/// Members split into the part with infinite trace on omega1 and the
/// part whose omega2 trace is cofinite there; complete takes precedence.
t_part t_decompose(const ev_periodic_set& x);

struct subspace_report {
  std::uint64_t cofinite_samples = 0;
  std::uint64_t cofinite_members = 0;
  std::uint64_t superset_samples = 0;
  std::uint64_t superset_members = 0;
  bool all_pass() const {
    return cofinite_samples == cofinite_members && superset_samples == superset_members;
  }
};

/// Membership-level check that the two distinguished subspaces of the
/// semifilter lie inside it: sampled cofinite-in-omega2 sets and
/// sampled supersets of omega1 must all pass decide.
subspace_report closed_subspace_checks(std::uint64_t samples = 100,
                                       std::uint64_t seed = 1);

/// A prefilter (superset- and intersection-closed family) given by its
/// decision procedure together with the intersection of all members.
struct prefilter_spec {
  std::string name;
  std::function<bool(const ev_periodic_set&)> decide;
  ev_periodic_set core;  // intersection of all members
};

/// {X : c is a subset of X}.
prefilter_spec supersets_of(const ev_periodic_set& c);

/// A filter viewed as a prefilter; every filter has empty core.
prefilter_spec filter_as_prefilter(const filter_spec& f);

}  // namespace cantor
