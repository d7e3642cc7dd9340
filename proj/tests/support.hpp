#pragma once

// Brute-force oracles shared by the unit and acceptance suites. These
// deliberately avoid the library's closed forms: everything here works
// by direct bit expansion or linear scans.

#include <cstdint>
#include <numeric>
#include <vector>

#include "cantor/evp.hpp"

namespace oracle_support {

inline std::vector<bool> expand_bits(const cantor::ev_periodic_set& x, std::uint64_t n) {
  std::vector<bool> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = x.bit(i);
  return out;
}

// rank within the complement of s, by scanning.
inline std::uint64_t scan_phi(const cantor::ev_periodic_set& s, std::uint64_t m) {
  std::uint64_t r = 0;
  for (std::uint64_t j = 0; j < m; ++j)
    if (!s.bit(j)) ++r;
  return r;
}

// (k+1)-th element of the complement of s, by scanning.
inline std::uint64_t scan_phi_inv(const cantor::ev_periodic_set& s, std::uint64_t k) {
  std::uint64_t seen = 0;
  for (std::uint64_t j = 0;; ++j) {
    if (!s.bit(j)) {
      if (seen == k) return j;
      ++seen;
    }
  }
}

// Whether some tail of the multiples of 2^n, n <= 20, sits inside x:
// checked by expanding x over one full lcm window beyond the prefix.
inline bool brute_dyadic_member(const cantor::ev_periodic_set& x) {
  const auto c = x.canonical();
  const std::uint64_t period = c.block().size();
  const std::uint64_t plen = c.prefix().size();
  for (int n = 0; n <= 20; ++n) {
    const std::uint64_t step = std::uint64_t{1} << n;
    const std::uint64_t window = std::lcm(period, step);
    const std::uint64_t start = ((plen + step - 1) / step) * step;
    bool ok = true;
    for (std::uint64_t m = start; m < start + window; m += step) {
      if (!c.bit(m)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// X \ Y finite, decided by scanning up to the exact horizon beyond
// which both sets are periodic over a common window.
inline bool brute_almost_subset(const cantor::ev_periodic_set& x,
                                const cantor::ev_periodic_set& y) {
  const std::uint64_t plen = std::max(x.prefix().size(), y.prefix().size());
  const std::uint64_t window = std::lcm(x.block().size(), y.block().size());
  for (std::uint64_t i = plen; i < plen + window; ++i)
    if (x.bit(i) && !y.bit(i)) return false;
  return true;
}

}  // namespace oracle_support
