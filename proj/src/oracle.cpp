#include "cantor/oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace cantor {

namespace {
// Memoization is skipped above this position to bound memory.
constexpr std::uint64_t kMemoLimit = std::uint64_t{1} << 22;
}  // namespace

struct lazy_point::cell {
  std::function<bool(std::uint64_t)> fn;
  std::vector<std::int8_t> memo;  // -1 unknown, else 0/1
};

lazy_point::lazy_point(std::function<bool(std::uint64_t)> fn)
    : cell_(std::make_shared<cell>()) {
  cell_->fn = std::move(fn);
}

lazy_point lazy_point::of(const ev_periodic_set& x) {
  return lazy_point([x](std::uint64_t pos) { return x.bit(pos); });
}

bool lazy_point::bit(std::uint64_t pos) const {
  auto& m = cell_->memo;
  if (pos < m.size() && m[pos] >= 0) return m[pos] != 0;
  const bool v = cell_->fn(pos);
  if (pos < kMemoLimit) {
    if (pos >= m.size()) m.resize(std::max<std::size_t>(pos + 1, m.size() * 2), -1);
    m[pos] = v ? 1 : 0;
  }
  return v;
}

struct oracle_point::state {
  std::function<bool(std::uint64_t)> fn;
  std::map<std::uint64_t, bool> seen;
  std::uint64_t max_pos = 0;
  bool impure = false;
};

oracle_point::oracle_point(std::function<bool(std::uint64_t)> fn)
    : state_(std::make_shared<state>()) {
  state_->fn = std::move(fn);
}

oracle_point oracle_point::of(const ev_periodic_set& x) {
  return oracle_point([x](std::uint64_t pos) { return x.bit(pos); });
}

bool oracle_point::query(std::uint64_t pos) const {
  auto it = state_->seen.find(pos);
  if (it != state_->seen.end()) return it->second;
  const bool v = state_->fn(pos);
  state_->seen.emplace(pos, v);
  state_->max_pos = std::max(state_->max_pos, pos);
  return v;
}

bool oracle_point::recheck(std::uint64_t pos) const {
  const bool v = state_->fn(pos);
  auto it = state_->seen.find(pos);
  if (it != state_->seen.end() && it->second != v) state_->impure = true;
  return v;
}

std::uint64_t oracle_point::distinct_queries() const { return state_->seen.size(); }

std::uint64_t oracle_point::max_queried() const { return state_->max_pos; }

bool oracle_point::purity_violated() const { return state_->impure; }

lazy_point oracle_point::as_lazy() const {
  auto self = *this;
  return lazy_point([self](std::uint64_t pos) { return self.query(pos); });
}

bool prefix_agree(const lazy_point& x, const lazy_point& y, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (x.bit(i) != y.bit(i)) return false;
  return true;
}

bool prefix_agree(const ev_periodic_set& x, const ev_periodic_set& y, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (x.bit(i) != y.bit(i)) return false;
  return true;
}

bool prefix_agree(const lazy_point& x, const ev_periodic_set& y, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (x.bit(i) != y.bit(i)) return false;
  return true;
}

}  // namespace cantor
