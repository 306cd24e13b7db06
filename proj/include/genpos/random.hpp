#pragma once

#include "genpos/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace genpos {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Uniform over {num / den : num in [-range, range]} with den fixed.
inline Rat uniform_rat(Rng& rng, std::int64_t range, std::int64_t den = 1) {
  return Rat(uniform_int(rng, -range, range), den);
}

inline bool bernoulli(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace genpos
