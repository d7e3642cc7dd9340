#pragma once

#include <cstdint>

#include "cantor/evp.hpp"
#include "cantor/ground.hpp"

namespace cantor {

/// Image of x under n -> rank_a(n); requires x to be a subset of a.
/// Exact: the output period is the ones-count of a's block over the
/// aligned lcm window, and the computed description is re-verified over
/// one extra window before being returned.
ev_periodic_set rank_map(const ground_set& a, const ev_periodic_set& x);

/// Image of y under k -> select_a(k); inverse of rank_map on subsets of a.
ev_periodic_set select_map(const ground_set& a, const ev_periodic_set& y);

/// Ground set over the complement of s; throws std::domain_error when
/// the complement is finite.
ground_set complement_ground(const ev_periodic_set& s);

/// Position of m within the increasing enumeration of the complement of
/// s. Requires m not in s and the complement of s infinite.
std::uint64_t phi(const ev_periodic_set& s, std::uint64_t m);

/// The (k+1)-th element of the complement of s.
std::uint64_t phi_inv(const ev_periodic_set& s, std::uint64_t k);

/// {phi(s, m) : m in e}; requires e disjoint from s.
ev_periodic_set phi_image(const ev_periodic_set& s, const ev_periodic_set& e);

/// {phi_inv(s, k) : k in z}; lands inside the complement of s.
ev_periodic_set phi_preimage(const ev_periodic_set& s, const ev_periodic_set& z);

/// Image of x under the unique order isomorphism a -> b; requires x a
/// subset of a. Inverted by swapping a and b.
ev_periodic_set order_iso_image(const ground_set& a, const ground_set& b,
                                const ev_periodic_set& x);

/// The bijection that fixes omega_star pointwise and maps the rest of
/// the naturals onto omega \ omega_star by the order isomorphism,
/// applied to x. Requires omega_star a subset of omega with
/// omega \ omega_star and the complement of omega_star both infinite.
ev_periodic_set pi_map(const ground_set& omega, const ground_set& omega_star,
                       const ev_periodic_set& x);

/// Inverse of pi_map; requires y a subset of omega.
ev_periodic_set pi_map_inv(const ground_set& omega, const ground_set& omega_star,
                           const ev_periodic_set& y);

}  // namespace cantor
