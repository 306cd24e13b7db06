#pragma once

// Independent sets and colorings of the hyperplanes of an arrangement, where
// a set is independent when no cell has all of its facet hyperplanes in it.

#include "genpos/arrangement.hpp"

#include <cstdint>
#include <vector>

namespace genpos {

struct BetaRunReport {
  std::uint64_t seed = 0;
  int n = 0;
  int d = 0;
  double p_used = 0.0;
  int sampled = 0;          // |X|
  int cleaned = 0;          // |Y|
  int independent = 0;      // independent set inside H[Y]
  int pruned = 0;           // after breaking cells bounded only by the set
  int final_size = 0;       // after extending to a maximal independent set
  int cleanup_removals = 0;
};

/// Sampling probability for the simplicial-cell hypergraph:
/// p n = (n / (2^d max(log2 log2 log2 n, 1)))^{3/(3d-1)}, capped at 1.
double beta_sampling_probability(int n, int d);

/// Samples X, cleans the simplicial-cell hypergraph on X to a linear
/// triangle-free one, takes a randomized greedy independent set there, then
/// drops one hyperplane from every cell (of any size) still bounded only by
/// the set and extends the survivors to a maximal independent set.
/// The returned set satisfies is_independent_set(a, set).
std::vector<int> randomized_beta_procedure(const Arrangement& a, std::uint64_t seed, BetaRunReport* report = nullptr);

struct Coloring {
  std::vector<int> color;  // per hyperplane, 0-based
  int n_colors = 0;
};

/// No cell has all of its facet hyperplanes painted one color.
bool is_proper_coloring(const Arrangement& a, const std::vector<int>& color);

/// Peels off maximal independent sets (each a new color) until at most half
/// the hyperplanes remain, then recurses on the rest. Throws
/// PreconditionError if some cell has a single facet hyperplane.
Coloring greedy_coloring(const Arrangement& a);

/// First-fit: each hyperplane in index order takes the smallest color that
/// keeps every cell non-monochromatic so far. Baseline for greedy_coloring.
Coloring sequential_coloring(const Arrangement& a);

}  // namespace genpos
