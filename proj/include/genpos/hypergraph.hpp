#pragma once

// Hypergraphs with possibly non-uniform edges, and the independent-set
// machinery used on both the cohyperplanar-tuple hypergraph of a point set
// and the cell hypergraph of an arrangement.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace genpos {

class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edges are sorted internally. Throws PreconditionError on an empty edge,
  /// an out-of-range member or a repeated member.
  Hypergraph(int n_vertices, std::vector<std::vector<int>> edges);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edges_of(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

  /// r if every edge has size r, nullopt otherwise (or when edgeless).
  std::optional<int> uniformity() const;

  /// No edge is a subset of the given vertex set.
  bool is_independent(std::span<const int> vertices) const;

  /// Sub-hypergraph induced on `keep`, relabelled to 0..|keep|-1 in order.
  Hypergraph induced(std::span<const int> keep) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Lower bound ((r-1)/r^{r/(r-1)}) n / (m/n)^{1/(r-1)} on the independence
/// number of an r-uniform hypergraph with n vertices and m edges; n when m = 0.
double spencer_bound(std::int64_t n, std::int64_t m, int r);

/// Smallest integer >= value, robust to the bound being an exact integer
/// computed in floating point.
std::int64_t ceil_bound(double value);

struct SpencerResult {
  std::vector<int> vertices;
  std::int64_t target = 0;  // ceil(spencer_bound)
  bool target_met = false;
  int attempts = 0;
};

/// Deletion method: keep each vertex with probability
/// p = min(1, (n/(r m))^{1/(r-1)}), delete one vertex from every edge left
/// inside the sample, then extend greedily to a maximal independent set.
/// Resamples until the result reaches ceil(spencer_bound) or `retries` runs
/// out, in which case the best set found is returned with target_met false.
/// Throws PreconditionError if the hypergraph is not uniform.
SpencerResult spencer_deletion(const Hypergraph& h, std::uint64_t seed, int retries = 100);

/// Maximal independent set grown along a seeded random vertex order.
std::vector<int> greedy_max_independent(const Hypergraph& h, std::uint64_t order_seed);

/// Grows `start` (assumed independent) to a maximal independent set, trying
/// vertices in the order given.
std::vector<int> extend_to_maximal(const Hypergraph& h, std::vector<int> start, std::span<const int> order);

struct ExactIndependent {
  int size = 0;
  std::vector<int> witness;
  bool exact = true;          // false if the node budget ran out
  std::uint64_t nodes = 0;
};

constexpr int kDefaultExhaustiveLimit = 24;

/// Maximum independent set by branch and bound. Throws PreconditionError
/// when n exceeds `limit` (never above 64). A nonzero node budget turns the
/// search into a best-effort one; `exact` reports whether it finished.
ExactIndependent exact_max_independent(const Hypergraph& h, int limit = kDefaultExhaustiveLimit,
                                       std::uint64_t node_budget = 0);

/// No two distinct edges share two or more vertices.
bool is_linear(const Hypergraph& h);

/// Three distinct edges pairwise sharing exactly one vertex, the three shared
/// vertices distinct and no vertex common to all three.
bool has_triangle(const Hypergraph& h);

struct LinearCleanup {
  std::vector<int> kept;   // Y, sorted
  Hypergraph induced;      // H[Y], relabelled to positions in `kept`
  int removed = 0;
};

/// Greedily deletes vertices until the induced hypergraph is linear and
/// triangle-free: repeatedly remove the vertex involved in the most
/// violations (seeded tie-break).
LinearCleanup make_linear_trianglefree(const Hypergraph& h, std::uint64_t seed);

}  // namespace genpos
