#pragma once

// Points, hyperplanes and flats over exact rationals, plus the predicates the
// rest of the library is built on.

#include "genpos/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace genpos {

using Point = VectorXq;

/// Lexicographic order on coordinates; dimensions must agree.
bool lex_less(const Point& a, const Point& b);

/// An ordered list of distinct points of a common dimension, optionally with
/// a declared bound `ell` on the number of cohyperplanar points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {}
  /// Throws PreconditionError on mixed dimensions or repeated points.
  PointSet(int dim, std::vector<Point> points, std::optional<int> ell = std::nullopt);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  std::optional<int> ell() const { return ell_; }
  void set_ell(std::optional<int> ell) { ell_ = ell; }

  /// Points with the given indices, in the given order.
  PointSet subset(std::span<const int> indices) const;
  /// Rows are points.
  MatrixXq matrix() const;

 private:
  int dim_ = 0;
  std::vector<Point> points_;
  std::optional<int> ell_;
};

/// Affine hyperplane {x : normal . x = offset} kept in canonical form: integer
/// coefficients with overall gcd 1 and the first nonzero normal entry positive.
/// Two hyperplanes are equal as sets iff they compare equal.
class Hyperplane {
 public:
  /// Throws PreconditionError if the normal is zero.
  Hyperplane(VectorXq normal, Rat offset);

  /// Affine hull of d points spanning a (d-1)-flat; nullopt if they do not.
  static std::optional<Hyperplane> through(std::span<const Point> points);

  int dim() const { return static_cast<int>(normal_.size()); }
  const VectorXq& normal() const { return normal_; }
  const Rat& offset() const { return offset_; }

  Rat evaluate(const Point& x) const { return normal_.dot(x) - offset_; }
  int side(const Point& x) const { return sign(evaluate(x)); }
  bool contains(const Point& x) const { return evaluate(x) == 0; }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b);
  friend bool operator<(const Hyperplane& a, const Hyperplane& b);

 private:
  VectorXq normal_;
  Rat offset_;
};

/// Affine subspace of dimension dim_flat in R^d. Directions are stored in
/// reduced row echelon form and the basepoint is reduced against them, so
/// two flats are equal as sets iff they are structurally equal.
class Flat {
 public:
  /// Affine hull of a nonempty point list.
  static Flat affine_hull(std::span<const Point> points);

  int dim() const { return static_cast<int>(basepoint_.size()); }
  int dim_flat() const { return static_cast<int>(directions_.rows()); }
  const Point& basepoint() const { return basepoint_; }
  const MatrixXq& directions() const { return directions_; }

  bool contains(const Point& x) const;

  friend bool operator==(const Flat& a, const Flat& b);
  friend bool operator<(const Flat& a, const Flat& b);

 private:
  Flat(Point base, MatrixXq directions, std::vector<Eigen::Index> pivots);

  Point basepoint_;
  MatrixXq directions_;
  std::vector<Eigen::Index> pivots_;
};

/// Sign of det [[1, p_0], ..., [1, p_d]] for d+1 points in R^d.
int orientation(std::span<const Point> points);

/// Dimension of the affine hull (0 for a single point).
int affine_rank(std::span<const Point> points);
int affine_rank(const PointSet& set, std::span<const int> indices);

/// True iff no hyperplane contains more than d of the points.
bool is_general_position(const PointSet& set);

/// (a_1..a_d) -> {x : x_d = a_1 x_1 + ... + a_{d-1} x_{d-1} - a_d}.
/// p lies on dual(q) iff q lies on dual(p).
Hyperplane dualize(const Point& p);
std::vector<Hyperplane> dualize(const PointSet& set);

/// Unique common point of exactly d hyperplanes in R^d, if any.
std::optional<Point> intersection_point(std::span<const Hyperplane> hyperplanes);

/// The hyperplanes have a nonempty common intersection.
bool share_common_point(std::span<const Hyperplane> hyperplanes);

/// Every d hyperplanes meet in exactly one point and no d+1 share a point.
bool is_simple_arrangement(std::span<const Hyperplane> hyperplanes);

/// Index sets of size d+1 whose hyperplanes have a common point.
std::vector<std::vector<int>> concurrent_tuples(std::span<const Hyperplane> hyperplanes);

struct PerturbOptions {
  int max_halvings = 40;
  std::int64_t coefficient_range = 1000;  // perturbation entries drawn as k/range * eps
};

/// Perturbs a non-simple arrangement with at most d+1 hyperplanes through any
/// point into a simple one in which every formerly concurrent (d+1)-set
/// bounds a simplicial cell and every old vertex keeps its side with respect
/// to every hyperplane not through it. Simple input is returned unchanged.
/// Throws PreconditionError if d+2 hyperplanes share a point and
/// BudgetExhausted if no verified perturbation is found.
std::vector<Hyperplane> perturb_arrangement(std::span<const Hyperplane> hyperplanes,
                                            std::uint64_t seed, const PerturbOptions& opts = {});

struct Projection {
  MatrixXq map;  // target_dim x m
  PointSet image;
  int attempts = 0;
};

/// Random integer linear map R^m -> R^d, resampled until every (d+1)-subset
/// of the image is affinely dependent exactly when its preimage has affine
/// rank at most d-1. Throws BudgetExhausted after max_attempts.
Projection generic_projection(const PointSet& set, int target_dim, std::uint64_t seed,
                              int max_attempts = 200, std::int64_t entry_range = 64);

}  // namespace genpos
