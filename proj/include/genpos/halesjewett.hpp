#pragma once

// Combinatorial subspaces of [k]^m and projected grids.

#include "genpos/geometry.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace genpos {

/// Element of [k]^m; symbols are 1..k.
using Word = std::vector<int>;

/// Partition of the m coordinates (0-based) into nonempty wildcard classes
/// W_1..W_t and a set of fixed coordinates with their symbols.
struct SubspaceTemplate {
  int m = 0;
  std::vector<std::vector<int>> classes;
  std::map<int, int> fixed;  // coordinate -> symbol

  int dimension() const { return static_cast<int>(classes.size()); }
};

/// Throws PreconditionError unless the template partitions 0..m-1 with t >= 1
/// nonempty classes and fixed symbols in 1..k.
void validate(const SubspaceTemplate& t, int k);

/// The k^t words of the subspace, in lexicographic order of the class symbols.
std::vector<Word> expand_template(const SubspaceTemplate& t, int k);

/// All (k+1)^m - k^m combinatorial lines of [k]^m.
std::vector<SubspaceTemplate> enumerate_lines(int k, int m);

/// All k^m words in lexicographic order; word index = base-k digits.
std::vector<Word> all_words(int k, int m);
int word_index(const Word& w, int k);

struct LineFreeResult {
  int size = 0;
  std::vector<Word> witness;
  bool exact = true;
};

/// Largest subset of [k]^m containing no combinatorial line. Searches
/// exhaustively when k^m <= 16; otherwise branch and bound with a node
/// budget, flagging the result inexact if the budget runs out. Throws
/// PreconditionError for k^m > 64.
LineFreeResult max_linefree_subset(int k, int m, std::uint64_t budget = 5'000'000);

/// No line of [k]^m lies entirely inside `words`.
bool is_line_free(const std::vector<Word>& words, int k, int m);

/// [k]^m as integer points of R^m.
PointSet grid_points(int k, int m);

/// Image of [k]^m under a certified generic projection to R^target_dim;
/// point i is the image of all_words(k, m)[i].
PointSet build_projected_grid(int k, int m, int target_dim, std::uint64_t seed);

}  // namespace genpos
