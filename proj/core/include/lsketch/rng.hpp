#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lsketch {

// splitmix64 finalizer; full-period bijection on uint64_t.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic seed derivation: same (master, tags...) gives the same stream
// everywhere, distinct tag tuples give independent-looking streams.
inline std::uint64_t derive_seed(std::uint64_t master) { return mix64(master); }

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, Rest... rest) {
  return derive_seed(mix64(master ^ mix64(tag)), rest...);
}

// FNV-1a, so string tags hash identically on every platform.
inline std::uint64_t tag_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, Rest... rest) {
  return derive_seed(master, tag_hash(tag), rest...);
}

// mt19937_64 is bit-exact across implementations; distributions are not, so
// every draw below is hand-rolled on raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53 random mantissa bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: empty range");
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool next_bool() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Alias table for O(1) weighted sampling with replacement. Construction is
// order-deterministic (index-based worklists, no hashing).
class AliasTable {
 public:
  AliasTable() = default;

  explicit AliasTable(const std::vector<double>& weights) {
    const std::size_t k = weights.size();
    if (k == 0) throw std::invalid_argument("alias table: empty support");
    double total = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("alias table: negative weight");
      total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("alias table: zero total weight");
    prob_.assign(k, 0.0);
    alias_.assign(k, 0);
    std::vector<double> scaled(k);
    for (std::size_t i = 0; i < k; ++i) scaled[i] = weights[i] * static_cast<double>(k) / total;
    std::vector<std::uint32_t> small, large;
    small.reserve(k);
    large.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
      const std::uint32_t s = small.back();
      const std::uint32_t l = large.back();
      small.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] -= 1.0 - scaled[s];
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    // Leftovers are 1.0 up to rounding.
    for (std::uint32_t s : small) prob_[s] = 1.0;
    for (std::uint32_t l : large) prob_[l] = 1.0;
  }

  std::size_t size() const { return prob_.size(); }

  std::uint32_t draw(Rng& rng) const {
    const std::uint64_t i = rng.next_below(prob_.size());
    return rng.next_double() < prob_[i] ? static_cast<std::uint32_t>(i) : alias_[i];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace lsketch
