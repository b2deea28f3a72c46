#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace dpqs {

/// The library-wide seedable generator (64-bit Mersenne Twister).
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic sub-seed for an independent stream, e.g.
/// derive_seed(master, {n, trial}) or derive_seed(master, {worker}).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(master);
  for (const std::uint64_t k : keys) {
    h = mix64(h ^ mix64(k));
  }
  return h;
}

/// Uniform integer in [lo, hi].
template <class Int>
Int uniform_int(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

/// Unbiased in-place Fisher-Yates shuffle.
template <class T>
void fisher_yates_shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_int<std::size_t>(rng, 0, i - 1);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace dpqs
