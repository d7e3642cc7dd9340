#include "cantor/evp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cantor {

namespace {

constexpr std::uint64_t kMaxAlignment = std::uint64_t{1} << 22;

void check_bits(const bitvec& b) {
  for (auto v : b) {
    if (v > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
  }
}

// Smallest d dividing |b| such that b is d-periodic.
std::size_t primitive_period(const bitvec& b) {
  for (std::size_t d = 1; d < b.size(); ++d) {
    if (b.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < b.size() && ok; ++i) ok = (b[i] == b[i - d]);
    if (ok) return d;
  }
  return b.size();
}

}  // namespace

ev_periodic_set::ev_periodic_set() : prefix_(), block_{0} {}

ev_periodic_set ev_periodic_set::raw(bitvec prefix, bitvec block) {
  if (block.empty()) throw std::invalid_argument("block must be nonempty");
  check_bits(prefix);
  check_bits(block);
  ev_periodic_set s;
  s.prefix_ = std::move(prefix);
  s.block_ = std::move(block);
  return s;
}

ev_periodic_set ev_periodic_set::make(bitvec prefix, bitvec block) {
  return raw(std::move(prefix), std::move(block)).canonical();
}

ev_periodic_set ev_periodic_set::canonical() const {
  bitvec p = prefix_;
  bitvec b = block_;
  b.resize(primitive_period(b));
  // Absorb prefix bits that the rotated block already produces.
  while (!p.empty() && p.back() == b.back()) {
    const std::uint8_t last = b.back();
    b.pop_back();
    b.insert(b.begin(), last);
    p.pop_back();
  }
  return raw(std::move(p), std::move(b));
}

bool ev_periodic_set::is_canonical() const {
  if (primitive_period(block_) != block_.size()) return false;
  return prefix_.empty() || prefix_.back() != block_.back();
}

bool ev_periodic_set::bit(std::uint64_t pos) const {
  if (pos < prefix_.size()) return prefix_[pos] != 0;
  return block_[(pos - prefix_.size()) % block_.size()] != 0;
}

ev_periodic_set ev_periodic_set::parse(std::string_view literal) {
  const auto bar = literal.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("point literal must contain '|'");
  if (literal.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("point literal must contain a single '|'");
  auto to_bits = [](std::string_view s) {
    bitvec out;
    out.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("point literal characters must be 0, 1 or |");
      out.push_back(c == '1' ? 1 : 0);
    }
    return out;
  };
  bitvec prefix = to_bits(literal.substr(0, bar));
  bitvec block = to_bits(literal.substr(bar + 1));
  if (block.empty()) throw std::invalid_argument("point literal block must be nonempty");
  return make(std::move(prefix), std::move(block));
}

std::string ev_periodic_set::to_string() const {
  std::string out;
  out.reserve(prefix_.size() + block_.size() + 1);
  for (auto b : prefix_) out.push_back(b ? '1' : '0');
  out.push_back('|');
  for (auto b : block_) out.push_back(b ? '1' : '0');
  return out;
}

ev_periodic_set ev_periodic_set::empty_set() { return ev_periodic_set(); }

ev_periodic_set ev_periodic_set::universe() { return make({}, {1}); }

ev_periodic_set ev_periodic_set::multiples(std::uint64_t step) {
  if (step == 0) throw std::invalid_argument("step must be >= 1");
  bitvec block(step, 0);
  block[0] = 1;
  return make({}, std::move(block));
}

ev_periodic_set ev_periodic_set::from_elements(const std::vector<std::uint64_t>& elems) {
  if (elems.empty()) return empty_set();
  const std::uint64_t top = *std::max_element(elems.begin(), elems.end());
  bitvec prefix(top + 1, 0);
  for (auto e : elems) prefix[e] = 1;
  return make(std::move(prefix), {0});
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t l = (a / g) * b;
  if (l == 0 || l > kMaxAlignment)
    throw std::length_error("alignment window exceeds limit");
  return l;
}

namespace {

template <class F>
ev_periodic_set zip_sets(const ev_periodic_set& x, const ev_periodic_set& y, F f) {
  const std::size_t plen = std::max(x.prefix().size(), y.prefix().size());
  const std::uint64_t blen = lcm_checked(x.block().size(), y.block().size());
  bitvec p(plen), b(blen);
  for (std::size_t i = 0; i < plen; ++i) p[i] = f(x.bit(i), y.bit(i)) ? 1 : 0;
  for (std::uint64_t j = 0; j < blen; ++j) b[j] = f(x.bit(plen + j), y.bit(plen + j)) ? 1 : 0;
  return ev_periodic_set::make(std::move(p), std::move(b));
}

}  // namespace

ev_periodic_set set_union(const ev_periodic_set& x, const ev_periodic_set& y) {
  return zip_sets(x, y, [](bool a, bool b) { return a || b; });
}

ev_periodic_set set_intersect(const ev_periodic_set& x, const ev_periodic_set& y) {
  return zip_sets(x, y, [](bool a, bool b) { return a && b; });
}

ev_periodic_set set_diff(const ev_periodic_set& x, const ev_periodic_set& y) {
  return zip_sets(x, y, [](bool a, bool b) { return a && !b; });
}

ev_periodic_set set_complement(const ev_periodic_set& x) {
  bitvec p = x.prefix(), b = x.block();
  for (auto& v : p) v ^= 1;
  for (auto& v : b) v ^= 1;
  return ev_periodic_set::make(std::move(p), std::move(b));
}

finiteness classify_finiteness(const ev_periodic_set& x) {
  const ev_periodic_set c = x.is_canonical() ? x : x.canonical();
  if (c.block().size() == 1) {
    if (c.block()[0] == 0) return finiteness::finite;
    return finiteness::cofinite;
  }
  return finiteness::bi_infinite;
}

bool is_empty(const ev_periodic_set& x) { return x.canonical() == ev_periodic_set(); }

bool is_subset(const ev_periodic_set& x, const ev_periodic_set& y) {
  return is_empty(set_diff(x, y));
}

bool is_disjoint(const ev_periodic_set& x, const ev_periodic_set& y) {
  return is_empty(set_intersect(x, y));
}

bool almost_subset(const ev_periodic_set& x, const ev_periodic_set& y) {
  return classify_finiteness(set_diff(x, y)) == finiteness::finite;
}

bool almost_equal(const ev_periodic_set& x, const ev_periodic_set& y) {
  return almost_subset(x, y) && almost_subset(y, x);
}

ev_periodic_set random_ev_periodic(std::mt19937_64& rng, std::uint32_t max_prefix,
                                   std::uint32_t max_block) {
  if (max_block == 0) throw std::invalid_argument("max_block must be >= 1");
  const std::size_t plen = rng() % (std::uint64_t{max_prefix} + 1);
  const std::size_t blen = 1 + rng() % max_block;
  bitvec p(plen), b(blen);
  for (auto& v : p) v = rng() & 1;
  for (auto& v : b) v = rng() & 1;
  return ev_periodic_set::make(std::move(p), std::move(b));
}

}  // namespace cantor
