#pragma once

// Cells of a hyperplane arrangement, computed exactly.

#include "genpos/geometry.hpp"
#include "genpos/hypergraph.hpp"

#include <span>
#include <vector>

namespace genpos {

struct Cell {
  std::vector<int> sign_vector;   // +1 / -1 per hyperplane
  std::vector<int> facet_support; // sorted indices of hyperplanes carrying a facet
  bool bounded = false;
  bool simplicial = false;
  Point witness;                  // a point in the open cell

  int size() const { return static_cast<int>(facet_support.size()); }
};

class Arrangement {
 public:
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes, std::vector<Cell> cells)
      : dim_(dim), hyperplanes_(std::move(hyperplanes)), cells_(std::move(cells)) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<Cell> cells_;
};

/// All full-dimensional cells, sorted lexicographically by sign vector
/// (-1 before +1). Throws PreconditionError on an empty list, mixed
/// dimensions or duplicate hyperplanes.
Arrangement enumerate_cells(std::span<const Hyperplane> hyperplanes);

/// Nonempty open cell with the given sign vector? Returns an interior point.
std::optional<Point> cell_witness(std::span<const Hyperplane> hyperplanes, std::span<const int> signs);

/// Bounded cells with d+1 facets whose every d supporting hyperplanes meet
/// in a vertex of the cell.
std::vector<Cell> simplicial_cells(const Arrangement& a);

/// One vertex per hyperplane and one edge per cell (its facet support),
/// duplicates kept.
Hypergraph cell_hypergraph(const Arrangement& a);

/// No cell has all of its facet-supporting hyperplanes in `subset`.
/// Throws PreconditionError on an out-of-range index.
bool is_independent_set(const Arrangement& a, std::span<const int> subset);

}  // namespace genpos
