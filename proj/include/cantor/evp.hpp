#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

using bitvec = std::vector<std::uint8_t>;

/// Exact description of an eventually periodic subset of the naturals:
/// a finite prefix of characteristic bits followed by a block that
/// repeats forever. Character i of a literal is the bit of position i.
///
/// Canonical form: the block is primitive (not a repetition of a shorter
/// block) and the prefix cannot be shortened (its last bit differs from
/// the bit the rotated block would place there). Two canonical values
/// denote the same set iff they are componentwise equal.
class ev_periodic_set {
public:
  /// The empty set, "|0".
  ev_periodic_set();

  /// Canonical value with the given characteristic bits.
  static ev_periodic_set make(bitvec prefix, bitvec block);

  /// Uncanonicalized description. Throws std::invalid_argument on an
  /// empty block or non-bit entries.
  static ev_periodic_set raw(bitvec prefix, bitvec block);

  /// Parses `PREFIX|BLOCK` over {0,1}; the prefix may be empty, the
  /// block may not. Result is canonical.
  static ev_periodic_set parse(std::string_view literal);

  static ev_periodic_set empty_set();
  static ev_periodic_set universe();
  /// {0, step, 2*step, ...}; step >= 1.
  static ev_periodic_set multiples(std::uint64_t step);
  static ev_periodic_set from_elements(const std::vector<std::uint64_t>& elems);

  /// Membership bit of a position; total.
  bool bit(std::uint64_t pos) const;

  const bitvec& prefix() const { return prefix_; }
  const bitvec& block() const { return block_; }

  bool is_canonical() const;
  ev_periodic_set canonical() const;

  std::string to_string() const;

  friend bool operator==(const ev_periodic_set&, const ev_periodic_set&) = default;

private:
  bitvec prefix_;
  bitvec block_;  // nonempty
};

enum class finiteness { finite, cofinite, bi_infinite };

ev_periodic_set set_union(const ev_periodic_set& x, const ev_periodic_set& y);
ev_periodic_set set_intersect(const ev_periodic_set& x, const ev_periodic_set& y);
ev_periodic_set set_diff(const ev_periodic_set& x, const ev_periodic_set& y);
ev_periodic_set set_complement(const ev_periodic_set& x);

finiteness classify_finiteness(const ev_periodic_set& x);

bool is_empty(const ev_periodic_set& x);
bool is_subset(const ev_periodic_set& x, const ev_periodic_set& y);
bool is_disjoint(const ev_periodic_set& x, const ev_periodic_set& y);

/// x \ y is finite.
bool almost_subset(const ev_periodic_set& x, const ev_periodic_set& y);
bool almost_equal(const ev_periodic_set& x, const ev_periodic_set& y);

/// lcm with a hard cap on the alignment window; throws std::length_error
/// when exceeded so runaway block growth fails loudly instead of OOMing.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

/// Uniform random canonical set with bounded description size.
ev_periodic_set random_ev_periodic(std::mt19937_64& rng, std::uint32_t max_prefix,
                                   std::uint32_t max_block);

}  // namespace cantor
