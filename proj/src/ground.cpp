#include "cantor/ground.hpp"

#include <stdexcept>

namespace cantor {

ground_set::ground_set(ev_periodic_set carrier) : carrier_(carrier.canonical()) {
  if (classify_finiteness(carrier_) == finiteness::finite)
    throw std::domain_error("ground set carrier is finite: " + carrier_.to_string());

  const auto& p = carrier_.prefix();
  const auto& b = carrier_.block();
  prefix_cum_.resize(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    prefix_cum_[i + 1] = prefix_cum_[i] + p[i];
    if (p[i]) prefix_pos_.push_back(i);
  }
  block_cum_.resize(b.size() + 1, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    block_cum_[i + 1] = block_cum_[i] + b[i];
    if (b[i]) block_pos_.push_back(i);
  }
}

std::uint64_t ground_set::rank(std::uint64_t pos) const {
  const std::uint64_t plen = prefix_len();
  if (pos <= plen) return prefix_cum_[pos];
  const std::uint64_t off = pos - plen;
  const std::uint64_t whole = off / block_len();
  const std::uint64_t rest = off % block_len();
  return prefix_pos_.size() + whole * block_pos_.size() + block_cum_[rest];
}

std::uint64_t ground_set::select(std::uint64_t idx) const {
  if (idx < prefix_pos_.size()) return prefix_pos_[idx];
  const std::uint64_t k = idx - prefix_pos_.size();
  const std::uint64_t whole = k / block_pos_.size();
  const std::uint64_t rest = k % block_pos_.size();
  return prefix_len() + whole * block_len() + block_pos_[rest];
}

}  // namespace cantor
