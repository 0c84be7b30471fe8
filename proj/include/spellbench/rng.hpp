#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spellbench/error.hpp"

namespace spellbench {

// All toolkit randomness flows through SplitMix64 seeded with a 64-bit
// value. Integer-only draws keep every sampled artifact bit-identical
// across platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw ContractError("uniform draw with zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Derives an independent stream for a named purpose; the label keeps
  // sub-streams stable when new draw sites are added.
  SplitMix64 fork(std::uint64_t label) {
    SplitMix64 mixed(state_ ^ (0xD1B54A32D192ED03ull * (label + 1)));
    return SplitMix64(mixed.next());
  }

 private:
  std::uint64_t state_;
};

// Draws k distinct indices from [0, n) uniformly, in draw order
// (partial Fisher-Yates over an index array).
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, SplitMix64& rng) {
  if (k > n) throw ContractError("sample size exceeds population");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

// Weighted sampling without replacement over integer weights, via a
// Fenwick tree of cumulative weights. Zero-weight items are unreachable.
class WeightedSampler {
 public:
  explicit WeightedSampler(const std::vector<std::uint64_t>& weights)
      : n_(weights.size()), tree_(weights.size() + 1, 0), weight_(weights) {
    for (std::size_t i = 0; i < n_; ++i) add(i, weights[i]);
  }

  std::uint64_t total() const { return prefix(n_); }

  // Draws one index with probability proportional to its remaining
  // weight, then removes it.
  std::size_t draw(SplitMix64& rng) {
    const std::uint64_t t = total();
    if (t == 0) throw ContractError("weighted draw from an exhausted pool");
    const std::uint64_t r = rng.below(t);
    const std::size_t i = find(r);
    add(i, 0 - weight_[i]);
    weight_[i] = 0;
    return i;
  }

 private:
  void add(std::size_t i, std::uint64_t delta) {
    for (std::size_t j = i + 1; j <= n_; j += j & (0 - j)) tree_[j] += delta;
  }

  std::uint64_t prefix(std::size_t i) const {
    std::uint64_t s = 0;
    for (std::size_t j = i; j > 0; j -= j & (0 - j)) s += tree_[j];
    return s;
  }

  // Smallest index whose cumulative weight exceeds r.
  std::size_t find(std::uint64_t r) const {
    std::size_t pos = 0;
    std::size_t mask = 1;
    while ((mask << 1) <= n_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
      const std::size_t next = pos + mask;
      if (next <= n_ && tree_[next] <= r) {
        pos = next;
        r -= tree_[next];
      }
    }
    return pos;
  }

  std::size_t n_;
  std::vector<std::uint64_t> tree_;
  std::vector<std::uint64_t> weight_;
};

}  // namespace spellbench
