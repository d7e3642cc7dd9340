#include "cantor/index_maps.hpp"

#include <numeric>
#include <stdexcept>

namespace cantor {

ev_periodic_set rank_map(const ground_set& a, const ev_periodic_set& x) {
  if (!is_subset(x, a.carrier()))
    throw std::domain_error("rank_map: point " + x.to_string() +
                            " is not within carrier " + a.carrier().to_string());
  const std::uint64_t align = std::max<std::uint64_t>(a.prefix_len(), x.prefix().size());
  const std::uint64_t window = lcm_checked(a.block_len(), x.block().size());
  const std::uint64_t out_plen = a.rank(align);
  const std::uint64_t out_blen = a.block_ones() * (window / a.block_len());

  bitvec p(out_plen), b(out_blen);
  for (std::uint64_t k = 0; k < out_plen; ++k) p[k] = x.bit(a.select(k)) ? 1 : 0;
  for (std::uint64_t j = 0; j < out_blen; ++j)
    b[j] = x.bit(a.select(out_plen + j)) ? 1 : 0;
  // The alignment bound above is exact; verify it over one more window.
  for (std::uint64_t j = 0; j < out_blen; ++j) {
    if ((x.bit(a.select(out_plen + out_blen + j)) ? 1 : 0) != b[j])
      throw std::logic_error("rank_map: periodicity bound violated");
  }
  return ev_periodic_set::make(std::move(p), std::move(b));
}

ev_periodic_set select_map(const ground_set& a, const ev_periodic_set& y) {
  const std::uint64_t ylen = y.prefix().size();
  const std::uint64_t start =
      std::max<std::uint64_t>(a.prefix_len(), ylen == 0 ? 0 : a.select(ylen - 1) + 1);
  const std::uint64_t reps =
      y.block().size() / std::gcd<std::uint64_t>(a.block_ones(), y.block().size());
  const std::uint64_t window = a.block_len() * reps;
  if (window > (std::uint64_t{1} << 22))
    throw std::length_error("alignment window exceeds limit");

  auto out_bit = [&](std::uint64_t m) {
    return a.contains(m) && y.bit(a.rank(m));
  };
  bitvec p(start), b(window);
  for (std::uint64_t m = 0; m < start; ++m) p[m] = out_bit(m) ? 1 : 0;
  for (std::uint64_t j = 0; j < window; ++j) b[j] = out_bit(start + j) ? 1 : 0;
  for (std::uint64_t j = 0; j < window; ++j) {
    if ((out_bit(start + window + j) ? 1 : 0) != b[j])
      throw std::logic_error("select_map: periodicity bound violated");
  }
  return ev_periodic_set::make(std::move(p), std::move(b));
}

ground_set complement_ground(const ev_periodic_set& s) {
  const auto comp = set_complement(s);
  if (classify_finiteness(comp) == finiteness::finite)
    throw std::domain_error("complement of " + s.to_string() + " is finite");
  return ground_set(comp);
}

std::uint64_t phi(const ev_periodic_set& s, std::uint64_t m) {
  if (s.bit(m))
    throw std::domain_error("phi: position " + std::to_string(m) + " lies in " +
                            s.to_string());
  return complement_ground(s).rank(m);
}

std::uint64_t phi_inv(const ev_periodic_set& s, std::uint64_t k) {
  return complement_ground(s).select(k);
}

ev_periodic_set phi_image(const ev_periodic_set& s, const ev_periodic_set& e) {
  if (!is_disjoint(s, e))
    throw std::domain_error("phi_image: " + e.to_string() + " meets " + s.to_string());
  return rank_map(complement_ground(s), e);
}

ev_periodic_set phi_preimage(const ev_periodic_set& s, const ev_periodic_set& z) {
  return select_map(complement_ground(s), z);
}

ev_periodic_set order_iso_image(const ground_set& a, const ground_set& b,
                                const ev_periodic_set& x) {
  return select_map(b, rank_map(a, x));
}

namespace {

void check_restriction_witnesses(const ground_set& omega, const ground_set& omega_star) {
  if (!is_subset(omega_star.carrier(), omega.carrier()))
    throw std::domain_error("pi_map: " + omega_star.carrier().to_string() +
                            " is not within " + omega.carrier().to_string());
  if (classify_finiteness(set_diff(omega.carrier(), omega_star.carrier())) ==
      finiteness::finite)
    throw std::domain_error("pi_map: carrier difference is finite");
  if (classify_finiteness(omega_star.carrier()) == finiteness::cofinite)
    throw std::domain_error("pi_map: complement of the inner carrier is finite");
}

}  // namespace

ev_periodic_set pi_map(const ground_set& omega, const ground_set& omega_star,
                       const ev_periodic_set& x) {
  check_restriction_witnesses(omega, omega_star);
  const ground_set outside(set_complement(omega_star.carrier()));
  const ground_set target(set_diff(omega.carrier(), omega_star.carrier()));
  const auto fixed = set_intersect(x, omega_star.carrier());
  const auto moved = order_iso_image(outside, target, set_diff(x, omega_star.carrier()));
  return set_union(fixed, moved);
}

ev_periodic_set pi_map_inv(const ground_set& omega, const ground_set& omega_star,
                           const ev_periodic_set& y) {
  check_restriction_witnesses(omega, omega_star);
  if (!is_subset(y, omega.carrier()))
    throw std::domain_error("pi_map_inv: point is not within " +
                            omega.carrier().to_string());
  const ground_set outside(set_complement(omega_star.carrier()));
  const ground_set target(set_diff(omega.carrier(), omega_star.carrier()));
  const auto fixed = set_intersect(y, omega_star.carrier());
  const auto moved = order_iso_image(target, outside, set_diff(y, omega_star.carrier()));
  return set_union(fixed, moved);
}

}  // namespace cantor
