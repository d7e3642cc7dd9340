#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "cantor/evp.hpp"

namespace cantor {

/// A point of Cantor space evaluated one bit at a time. Bits are
/// memoized, so a pipeline of lazy points queries each upstream
/// position at most once. Not safe for concurrent queries on the
/// same instance.
class lazy_point {
public:
  explicit lazy_point(std::function<bool(std::uint64_t)> fn);

  /// Exact-backed point.
  static lazy_point of(const ev_periodic_set& x);

  bool bit(std::uint64_t pos) const;

private:
  struct cell;
  std::shared_ptr<cell> cell_;
};

/// A point given by a pure membership query, instrumented with the
/// number of distinct positions queried and the largest position seen.
/// Purity is a contract of the supplied function, not enforced here;
/// recheck() re-invokes it to detect violations.
class oracle_point {
public:
  explicit oracle_point(std::function<bool(std::uint64_t)> fn);

  static oracle_point of(const ev_periodic_set& x);

  bool query(std::uint64_t pos) const;

  /// Re-invokes the underlying function; a result differing from the
  /// first-seen value sets the purity flag.
  bool recheck(std::uint64_t pos) const;

  std::uint64_t distinct_queries() const;
  std::uint64_t max_queried() const;
  bool purity_violated() const;

  /// View of this oracle as a lazy point; shares instrumentation.
  lazy_point as_lazy() const;

private:
  struct state;
  std::shared_ptr<state> state_;
};

/// Membership bits agree on all positions < n.
bool prefix_agree(const lazy_point& x, const lazy_point& y, std::uint64_t n);
bool prefix_agree(const ev_periodic_set& x, const ev_periodic_set& y, std::uint64_t n);
bool prefix_agree(const lazy_point& x, const ev_periodic_set& y, std::uint64_t n);

}  // namespace cantor
