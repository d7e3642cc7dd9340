#pragma once

#include <cstdint>
#include <vector>

#include "cantor/evp.hpp"

namespace cantor {

/// An infinite eventually periodic subset of the naturals used as a
/// coordinate set, with rank/select accessors. rank and select are
/// mutually inverse on the carrier: select(rank(n)) == n for every
/// member n, and rank(select(k)) == k for every k.
class ground_set {
public:
  /// Throws std::domain_error if the carrier is finite.
  explicit ground_set(ev_periodic_set carrier);

  const ev_periodic_set& carrier() const { return carrier_; }

  bool contains(std::uint64_t pos) const { return carrier_.bit(pos); }

  /// Number of members strictly below pos.
  std::uint64_t rank(std::uint64_t pos) const;

  /// The (idx+1)-th smallest member.
  std::uint64_t select(std::uint64_t idx) const;

  std::uint64_t prefix_ones() const { return prefix_pos_.size(); }
  std::uint64_t block_ones() const { return block_pos_.size(); }
  std::uint64_t prefix_len() const { return carrier_.prefix().size(); }
  std::uint64_t block_len() const { return carrier_.block().size(); }

  friend bool operator==(const ground_set& a, const ground_set& b) {
    return a.carrier_ == b.carrier_;
  }

private:
  ev_periodic_set carrier_;
  std::vector<std::uint64_t> prefix_cum_;  // ones below each prefix position
  std::vector<std::uint64_t> prefix_pos_;  // positions of prefix ones
  std::vector<std::uint64_t> block_cum_;
  std::vector<std::uint64_t> block_pos_;
};

}  // namespace cantor
