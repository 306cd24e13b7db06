#pragma once

// End-to-end constructions: large general-position subsets, the
// general-position-or-cohyperplanar dichotomy, exact alpha, and the passage
// from a point set to an arrangement of dual hyperplanes.

#include "genpos/census.hpp"
#include "genpos/geometry.hpp"
#include "genpos/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace genpos {

/// One edge per cohyperplanar (d+1)-subset.
Hypergraph cohyperplanar_hypergraph(const PointSet& set);

struct GenposSubset {
  std::vector<int> indices;
  std::int64_t tuples = 0;   // m, exact
  double bound = 0.0;        // Spencer bound for (n, m, d+1)
  std::int64_t target = 0;   // ceil(bound)
  int attempts = 0;
};

/// General-position subset of size at least ceil(spencer_bound(n, m, d+1)).
/// Throws VerificationError if the retries run out or the result fails the
/// general-position check.
GenposSubset large_genpos_subset(const PointSet& set, std::uint64_t seed, int retries = 100);

enum class WitnessKind { general_position, cohyperplanar };

struct DichotomyWitness {
  WitnessKind kind = WitnessKind::general_position;
  std::vector<int> indices;
  std::optional<Hyperplane> hyperplane;  // cohyperplanar witnesses only
  bool guaranteed = true;                // false when n < q C(q, d)
};

/// q points in general position or q points on one hyperplane. Grows a
/// maximal set whose subsets of size <= d+1 are affinely independent (seeded
/// order), then falls back to the hyperplanes spanned by its d-subsets.
/// Throws PreconditionError for q < d+1 and VerificationError when no
/// witness exists (possible only below the n >= q C(q,d) threshold).
DichotomyWitness genpos_or_hyperplane(const PointSet& set, int q, std::uint64_t seed = 0);

/// Independent check of a witness against the set.
bool validate_witness(const PointSet& set, int q, const DichotomyWitness& w);

struct ExactAlpha {
  int size = 0;
  std::vector<int> witness;
};

/// Largest general-position subset by branch and bound. Throws
/// PreconditionError above `limit` points.
ExactAlpha exact_alpha(const PointSet& set, int limit = kDefaultExhaustiveLimit);

/// Random invertible integer linear map applied to the set so that every
/// cohyperplanar (d+1)-tuple lies on some hyperplane not parallel to the
/// x_d axis; under dualize such tuples become concurrent hyperplanes.
PointSet prepare_for_duality(const PointSet& set, std::uint64_t seed, int max_attempts = 200);

/// prepare_for_duality, dualize, perturb_arrangement. Index i of the result
/// is the dual of point i.
std::vector<Hyperplane> dual_arrangement(const PointSet& set, std::uint64_t seed);

}  // namespace genpos
