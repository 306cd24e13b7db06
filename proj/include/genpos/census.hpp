#pragma once

// Censuses of spanned flats and cohyperplanar tuples of a point set.
//
// A flat is "spanned" when it is the affine hull of the points it contains,
// so it is determined by its incident point set. Tuple counts are assembled
// from flat sizes by inclusion-exclusion over the containment order of
// spanned flats instead of by testing every (d+1)-subset.

#include "genpos/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace genpos {

using Profile = std::map<int, std::int64_t>;  // k -> number of flats with exactly k points

struct SpannedHyperplane {
  Hyperplane plane;
  std::vector<int> points;  // sorted indices of incident points
};

struct SpannedFlat {
  Flat flat;
  std::vector<int> points;
};

/// Hyperplanes spanned by d points of affine rank d-1, each listed once in
/// canonical order with its full incidence.
std::vector<SpannedHyperplane> spanned_hyperplanes(const PointSet& set);

/// Spanned flats of the given dimension (0 <= flat_dim <= d-1).
std::vector<SpannedFlat> spanned_flats(const PointSet& set, int flat_dim);

/// Number of (d+1)-subsets with affine rank at most d-1.
std::int64_t count_cohyperplanar_tuples(const PointSet& set);

/// h_k for flat_dim = d-1, s_k for flat_dim = d-2. Throws PreconditionError
/// for any other flat_dim.
Profile rich_flat_profile(const PointSet& set, int flat_dim);

/// Number of flats with at least k points, from an exact-k profile.
Profile at_least(const Profile& exact);

/// Largest fraction of the points of set on h that lie on one (d-2)-flat.
/// Throws PreconditionError for d < 3 or when h misses the set.
Rat degeneracy_ratio(const PointSet& set, const Hyperplane& h);

/// r -> n_r: hyperplanes through the (d-2)-flat L with exactly r points of
/// the set outside L.
Profile pencil_profile(const PointSet& set, const Flat& flat);

struct TupleCounts {
  std::int64_t type1 = 0;  // affine rank <= d-2
  std::int64_t type2 = 0;  // spans a gamma-degenerate hyperplane
  std::int64_t type3 = 0;  // spans a hyperplane that is not gamma-degenerate
  std::int64_t total = 0;
};

struct Pencil {
  std::vector<int> flat_points;
  Profile counts;
};

struct CensusProfile {
  int n = 0;
  int d = 0;
  Rat gamma;
  Profile hyperplane_rich;
  Profile subflat_rich;
  std::vector<Pencil> pencils;  // one per spanned (d-2)-flat, d >= 3
  std::optional<TupleCounts> types;  // d >= 3 only
  std::int64_t total_tuples = 0;
};

/// Assigns every cohyperplanar (d+1)-tuple a type. Throws PreconditionError
/// for d = 2 or gamma outside (0, 1).
TupleCounts classify_tuples(const PointSet& set, const Rat& gamma);

/// Full census; tuple types are filled in for d >= 3.
CensusProfile census(const PointSet& set, const Rat& gamma = Rat(1, 2));

}  // namespace genpos
