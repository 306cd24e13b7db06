#include "genpos/geometry.hpp"

#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/linalg.hpp"
#include "genpos/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace genpos {

namespace {

// Lexicographic three-way compare of two equally sized rational ranges.
template <typename A, typename B>
int lex_compare(const A& a, const B& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (b(i) < a(i)) return 1;
  }
  return 0;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

MatrixXq stack_rows(std::span<const Point> points) {
  MatrixXq m(static_cast<Eigen::Index>(points.size()), points.empty() ? 0 : points[0].size());
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  return m;
}

}  // namespace

bool lex_less(const Point& a, const Point& b) { return lex_compare(a, b) < 0; }

PointSet::PointSet(int dim, std::vector<Point> points, std::optional<int> ell)
    : dim_(dim), points_(std::move(points)), ell_(ell) {
  if (dim_ < 1) throw PreconditionError("point dimension must be at least 1");
  for (const auto& p : points_) {
    if (p.size() != dim_) {
      throw PreconditionError("point of dimension " + std::to_string(p.size()) +
                              " in a set of dimension " + std::to_string(dim_));
    }
  }
  std::vector<const Point*> sorted;
  sorted.reserve(points_.size());
  for (const auto& p : points_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return lex_less(*a, *b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i - 1] == *sorted[i]) throw PreconditionError("point set contains a repeated point");
  }
}

PointSet PointSet::subset(std::span<const int> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (int i : indices) pts.push_back(points_.at(static_cast<std::size_t>(i)));
  return PointSet(dim_, std::move(pts));
}

MatrixXq PointSet::matrix() const { return stack_rows(points_); }

// ---------------------------------------------------------------------------

Hyperplane::Hyperplane(VectorXq normal, Rat offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  Eigen::Index lead = 0;
  while (lead < normal_.size() && normal_(lead) == 0) ++lead;
  if (lead == normal_.size()) throw PreconditionError("hyperplane normal must be nonzero");

  // Clear denominators, then divide out the common gcd.
  Int l = denominator(offset_);
  for (Eigen::Index i = 0; i < normal_.size(); ++i) {
    const Int d = denominator(normal_(i));
    l = l / gcd(l, d) * d;
  }
  Int g = 0;
  for (Eigen::Index i = 0; i < normal_.size(); ++i) {
    normal_(i) *= Rat(l);
    g = gcd(g, numerator(normal_(i)));
  }
  offset_ *= Rat(l);
  g = gcd(g, numerator(offset_));
  if (normal_(lead) < 0) g = -g;
  for (Eigen::Index i = 0; i < normal_.size(); ++i) normal_(i) /= Rat(g);
  offset_ /= Rat(g);
}

std::optional<Hyperplane> Hyperplane::through(std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  const auto d = points[0].size();
  if (static_cast<Eigen::Index>(points.size()) != d) return std::nullopt;
  const MatrixXq diffs = differences(stack_rows(points.subspan(1)), points[0]);
  const auto red = rref(diffs);
  if (red.rank() != d - 1) return std::nullopt;
  // The single free column gives the normal direction.
  Eigen::Index free = 0;
  for (Eigen::Index c = 0, k = 0; c < d; ++c) {
    if (k < red.rank() && red.pivots[static_cast<std::size_t>(k)] == c) {
      ++k;
    } else {
      free = c;
      break;
    }
  }
  VectorXq normal = VectorXq::Zero(d);
  normal(free) = 1;
  for (Eigen::Index r = 0; r < red.rank(); ++r) normal(red.pivots[static_cast<std::size_t>(r)]) = -red.matrix(r, free);
  const Rat offset = normal.dot(points[0]);
  return Hyperplane(std::move(normal), offset);
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return a.normal_.size() == b.normal_.size() && a.offset_ == b.offset_ && a.normal_ == b.normal_;
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal_.size() != b.normal_.size()) return a.normal_.size() < b.normal_.size();
  const int c = lex_compare(a.normal_, b.normal_);
  if (c != 0) return c < 0;
  return a.offset_ < b.offset_;
}

// ---------------------------------------------------------------------------

Flat::Flat(Point base, MatrixXq directions, std::vector<Eigen::Index> pivots)
    : basepoint_(std::move(base)), directions_(std::move(directions)), pivots_(std::move(pivots)) {
  for (Eigen::Index r = 0; r < directions_.rows(); ++r) {
    const Rat f = basepoint_(pivots_[static_cast<std::size_t>(r)]);
    if (f != 0) basepoint_ -= f * directions_.row(r).transpose();
  }
}

Flat Flat::affine_hull(std::span<const Point> points) {
  if (points.empty()) throw PreconditionError("affine hull of an empty point list");
  auto red = rref(differences(stack_rows(points.subspan(1)), points[0]));
  return Flat(points[0], std::move(red.matrix), std::move(red.pivots));
}

bool Flat::contains(const Point& x) const {
  Point v = x - basepoint_;
  for (Eigen::Index r = 0; r < directions_.rows(); ++r) {
    const Rat f = v(pivots_[static_cast<std::size_t>(r)]);
    if (f != 0) v -= f * directions_.row(r).transpose();
  }
  return v.isZero();
}

bool operator==(const Flat& a, const Flat& b) {
  return a.basepoint_.size() == b.basepoint_.size() && a.directions_.rows() == b.directions_.rows() &&
         a.directions_ == b.directions_ && a.basepoint_ == b.basepoint_;
}

bool operator<(const Flat& a, const Flat& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.dim_flat() != b.dim_flat()) return a.dim_flat() < b.dim_flat();
  for (Eigen::Index r = 0; r < a.directions_.rows(); ++r) {
    const int c = lex_compare(a.directions_.row(r), b.directions_.row(r));
    if (c != 0) return c < 0;
  }
  return lex_compare(a.basepoint_, b.basepoint_) < 0;
}

// ---------------------------------------------------------------------------

int orientation(std::span<const Point> points) {
  if (points.empty()) throw PreconditionError("orientation of an empty point list");
  const auto d = points[0].size();
  if (static_cast<Eigen::Index>(points.size()) != d + 1) {
    throw PreconditionError("orientation needs d+1 points in dimension d");
  }
  MatrixXq m(d + 1, d + 1);
  for (Eigen::Index i = 0; i <= d; ++i) {
    if (points[static_cast<std::size_t>(i)].size() != d) throw PreconditionError("orientation: dimension mismatch");
    m(i, 0) = 1;
    m.row(i).tail(d) = points[static_cast<std::size_t>(i)].transpose();
  }
  return determinant_sign(m);
}

int affine_rank(std::span<const Point> points) {
  if (points.empty()) throw PreconditionError("affine rank of an empty point list");
  for (const auto& p : points) {
    if (p.size() != points[0].size()) throw PreconditionError("affine rank: dimension mismatch");
  }
  if (points.size() == 1) return 0;
  return static_cast<int>(rank(differences(stack_rows(points.subspan(1)), points[0])));
}

int affine_rank(const PointSet& set, std::span<const int> indices) {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (int i : indices) pts.push_back(set[i]);
  return affine_rank(pts);
}

bool is_general_position(const PointSet& set) {
  const int d = set.dim();
  bool ok = true;
  std::vector<Point> tuple(static_cast<std::size_t>(d + 1));
  for_each_combination(set.size(), d + 1, [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = set[idx[i]];
    if (orientation(tuple) == 0) ok = false;
    return ok;
  });
  return ok;
}

Hyperplane dualize(const Point& p) {
  const auto d = p.size();
  if (d < 2) throw PreconditionError("duality needs dimension at least 2");
  // a_1 x_1 + ... + a_{d-1} x_{d-1} - x_d = a_d
  VectorXq normal(d);
  normal.head(d - 1) = p.head(d - 1);
  normal(d - 1) = -1;
  return Hyperplane(std::move(normal), p(d - 1));
}

std::vector<Hyperplane> dualize(const PointSet& set) {
  std::vector<Hyperplane> out;
  out.reserve(static_cast<std::size_t>(set.size()));
  for (const auto& p : set.points()) out.push_back(dualize(p));
  return out;
}

std::optional<Point> intersection_point(std::span<const Hyperplane> hyperplanes) {
  if (hyperplanes.empty()) return std::nullopt;
  const auto d = hyperplanes[0].dim();
  if (static_cast<int>(hyperplanes.size()) != d) return std::nullopt;
  MatrixXq a(d, d);
  VectorXq b(d);
  for (int i = 0; i < d; ++i) {
    a.row(i) = hyperplanes[static_cast<std::size_t>(i)].normal().transpose();
    b(i) = hyperplanes[static_cast<std::size_t>(i)].offset();
  }
  return solve_unique(a, b);
}

namespace {

bool have_common_point(std::span<const Hyperplane> hs, std::span<const int> idx) {
  const auto d = hs[0].dim();
  MatrixXq aug(static_cast<Eigen::Index>(idx.size()), d + 1);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& h = hs[static_cast<std::size_t>(idx[i])];
    aug.row(static_cast<Eigen::Index>(i)).head(d) = h.normal().transpose();
    aug(static_cast<Eigen::Index>(i), d) = h.offset();
  }
  const auto red = rref(aug);
  return red.pivots.empty() || red.pivots.back() != d;
}

}  // namespace

bool share_common_point(std::span<const Hyperplane> hyperplanes) {
  if (hyperplanes.empty()) return true;
  std::vector<int> all(hyperplanes.size());
  std::iota(all.begin(), all.end(), 0);
  return have_common_point(hyperplanes, all);
}

bool is_simple_arrangement(std::span<const Hyperplane> hyperplanes) {
  if (hyperplanes.empty()) return true;
  const int d = hyperplanes[0].dim();
  const int n = static_cast<int>(hyperplanes.size());
  bool ok = true;
  std::vector<Hyperplane> sel;
  for_each_combination(n, d, [&](std::span<const int> idx) {
    sel.clear();
    for (int i : idx) sel.push_back(hyperplanes[static_cast<std::size_t>(i)]);
    ok = intersection_point(sel).has_value();
    return ok;
  });
  if (!ok) return false;
  for_each_combination(n, d + 1, [&](std::span<const int> idx) {
    ok = !have_common_point(hyperplanes, idx);
    return ok;
  });
  return ok;
}

std::vector<std::vector<int>> concurrent_tuples(std::span<const Hyperplane> hyperplanes) {
  std::vector<std::vector<int>> out;
  if (hyperplanes.empty()) return out;
  const int d = hyperplanes[0].dim();
  for_each_combination(static_cast<int>(hyperplanes.size()), d + 1, [&](std::span<const int> idx) {
    if (have_common_point(hyperplanes, idx)) out.emplace_back(idx.begin(), idx.end());
  });
  return out;
}

// ---------------------------------------------------------------------------

Projection generic_projection(const PointSet& set, int target_dim, std::uint64_t seed, int max_attempts,
                              std::int64_t entry_range) {
  const int m = set.dim();
  const int d = target_dim;
  if (d < 1 || d > m) throw PreconditionError("generic_projection needs 1 <= target_dim <= source dimension");

  // Subsets whose preimage is full rank must stay full rank in the image.
  std::vector<std::vector<int>> must_stay_independent;
  for_each_combination(set.size(), d + 1, [&](std::span<const int> idx) {
    if (affine_rank(set, idx) == d) must_stay_independent.emplace_back(idx.begin(), idx.end());
  });

  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    MatrixXq map(d, m);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < m; ++c) map(r, c) = uniform_rat(rng, entry_range);
    }
    std::vector<Point> image;
    image.reserve(static_cast<std::size_t>(set.size()));
    for (const auto& p : set.points()) image.push_back(map * p);

    std::vector<const Point*> sorted;
    for (const auto& p : image) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return lex_less(*a, *b); });
    bool ok = std::adjacent_find(sorted.begin(), sorted.end(),
                                 [](const Point* a, const Point* b) { return *a == *b; }) == sorted.end();

    std::vector<Point> tuple(static_cast<std::size_t>(d + 1));
    for (std::size_t k = 0; ok && k < must_stay_independent.size(); ++k) {
      const auto& idx = must_stay_independent[k];
      for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = image[static_cast<std::size_t>(idx[i])];
      ok = orientation(tuple) != 0;
    }
    if (ok) return {std::move(map), PointSet(d, std::move(image)), attempt};
  }
  throw BudgetExhausted("generic_projection: no certified projection after " + std::to_string(max_attempts) +
                        " attempts");
}

}  // namespace genpos
