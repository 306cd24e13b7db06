#include "genpos/pipelines.hpp"

#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/linalg.hpp"
#include "genpos/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace genpos {

namespace {

std::vector<Point> gather(const PointSet& set, std::span<const int> idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (int i : idx) pts.push_back(set[i]);
  return pts;
}

// A hyperplane through points of affine rank <= d-1, completing their hull
// with coordinate directions.
Hyperplane hyperplane_containing(const std::vector<Point>& pts) {
  const auto d = pts.front().size();
  std::vector<Point> basis{pts.front()};
  for (const auto& p : pts) {
    auto trial = basis;
    trial.push_back(p);
    if (affine_rank(trial) == static_cast<int>(trial.size()) - 1) basis = std::move(trial);
  }
  for (Eigen::Index i = 0; i < d && static_cast<Eigen::Index>(basis.size()) < d; ++i) {
    auto trial = basis;
    trial.push_back(pts.front() + Point::Unit(d, i));
    if (affine_rank(trial) == static_cast<int>(trial.size()) - 1) basis = std::move(trial);
  }
  return *Hyperplane::through(basis);
}

}  // namespace

Hypergraph cohyperplanar_hypergraph(const PointSet& set) {
  const int d = set.dim();
  std::vector<std::vector<int>> edges;
  std::vector<Point> tuple(static_cast<std::size_t>(d + 1));
  for_each_combination(set.size(), d + 1, [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = set[idx[i]];
    if (orientation(tuple) == 0) edges.emplace_back(idx.begin(), idx.end());
  });
  return Hypergraph(set.size(), std::move(edges));
}

GenposSubset large_genpos_subset(const PointSet& set, std::uint64_t seed, int retries) {
  const int n = set.size();
  const int d = set.dim();
  if (n < d + 1) throw PreconditionError("large_genpos_subset needs at least d+1 points");
  GenposSubset out;
  out.tuples = count_cohyperplanar_tuples(set);
  out.bound = spencer_bound(n, out.tuples, d + 1);
  out.target = ceil_bound(out.bound);

  const Hypergraph h = cohyperplanar_hypergraph(set);
  if (h.n_edges() != out.tuples) {
    throw VerificationError("cohyperplanar census (" + std::to_string(out.tuples) + ") disagrees with tuple scan (" +
                            std::to_string(h.n_edges()) + ")");
  }
  const auto res = spencer_deletion(h, seed, retries);
  out.indices = res.vertices;
  out.attempts = res.attempts;
  if (!res.target_met) {
    throw VerificationError("large_genpos_subset: " + std::to_string(out.indices.size()) + " points after " +
                            std::to_string(res.attempts) + " attempts, below the bound " +
                            std::to_string(out.target));
  }
  if (!is_general_position(set.subset(out.indices))) {
    throw VerificationError("large_genpos_subset: result is not in general position");
  }
  return out;
}

DichotomyWitness genpos_or_hyperplane(const PointSet& set, int q, std::uint64_t seed) {
  const int n = set.size();
  const int d = set.dim();
  if (q < d + 1) throw PreconditionError("genpos_or_hyperplane needs q >= d+1");
  const bool guaranteed = static_cast<std::uint64_t>(n) >= static_cast<std::uint64_t>(q) * binomial(q, d);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    Rng rng(seed);
    shuffle(order, rng);
  }

  // Grow S keeping every subset of size <= d+1 affinely independent.
  std::vector<int> chosen;
  for (int p : order) {
    if (static_cast<int>(chosen.size()) >= q) break;
    bool ok = true;
    if (static_cast<int>(chosen.size()) < d) {
      auto trial = chosen;
      trial.push_back(p);
      ok = affine_rank(set, trial) == static_cast<int>(chosen.size());
    } else {
      for_each_combination(static_cast<int>(chosen.size()), d, [&](std::span<const int> idx) {
        std::vector<int> trial;
        for (int i : idx) trial.push_back(chosen[static_cast<std::size_t>(i)]);
        trial.push_back(p);
        ok = affine_rank(set, trial) == d;
        return ok;
      });
    }
    if (ok) chosen.push_back(p);
  }
  std::sort(chosen.begin(), chosen.end());
  if (static_cast<int>(chosen.size()) >= q) return {WitnessKind::general_position, chosen, std::nullopt, guaranteed};

  auto on_plane = [&](const Hyperplane& h) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (h.contains(set[i])) idx.push_back(i);
    }
    return idx;
  };

  std::vector<Hyperplane> candidates;
  if (static_cast<int>(chosen.size()) <= d) {
    // Maximality puts every point in the hull of S.
    candidates.push_back(hyperplane_containing(gather(set, chosen)));
  } else {
    for_each_combination(static_cast<int>(chosen.size()), d, [&](std::span<const int> idx) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(chosen[static_cast<std::size_t>(i)]);
      candidates.push_back(*Hyperplane::through(gather(set, sub)));
    });
  }
  for (const auto& h : candidates) {
    auto idx = on_plane(h);
    if (static_cast<int>(idx.size()) >= q) return {WitnessKind::cohyperplanar, std::move(idx), h, guaranteed};
  }
  for (auto& s : spanned_hyperplanes(set)) {
    if (static_cast<int>(s.points.size()) >= q) {
      return {WitnessKind::cohyperplanar, std::move(s.points), std::move(s.plane), guaranteed};
    }
  }
  if (guaranteed) throw VerificationError("genpos_or_hyperplane: pigeonhole step found no rich hyperplane");
  return {WitnessKind::general_position, chosen, std::nullopt, false};
}

bool validate_witness(const PointSet& set, int q, const DichotomyWitness& w) {
  if (static_cast<int>(w.indices.size()) < q) return false;
  auto idx = w.indices;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  if (idx.front() < 0 || idx.back() >= set.size()) return false;
  const PointSet sub = set.subset(idx);
  if (w.kind == WitnessKind::general_position) return is_general_position(sub);
  if (affine_rank(sub.points()) > set.dim() - 1) return false;
  if (w.hyperplane) {
    return std::all_of(sub.points().begin(), sub.points().end(),
                       [&](const Point& p) { return w.hyperplane->contains(p); });
  }
  return true;
}

ExactAlpha exact_alpha(const PointSet& set, int limit) {
  if (set.size() > limit) {
    throw PreconditionError("exact_alpha: " + std::to_string(set.size()) + " points exceeds the limit of " +
                            std::to_string(limit));
  }
  const auto res = exact_max_independent(cohyperplanar_hypergraph(set), limit);
  return {res.size, res.witness};
}

// ---------------------------------------------------------------------------

PointSet prepare_for_duality(const PointSet& set, std::uint64_t seed, int max_attempts) {
  const int d = set.dim();
  std::vector<std::vector<int>> dependent;
  for_each_combination(set.size(), d + 1, [&](std::span<const int> idx) {
    if (affine_rank(set, idx) <= d - 1) dependent.emplace_back(idx.begin(), idx.end());
  });
  const Point axis = Point::Unit(d, d - 1);
  auto ready = [&](const PointSet& s) {
    return std::all_of(dependent.begin(), dependent.end(), [&](const std::vector<int>& idx) {
      const Flat hull = Flat::affine_hull(gather(s, idx));
      return !hull.contains(hull.basepoint() + axis);
    });
  };
  if (ready(set)) return set;

  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MatrixXq map(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) map(r, c) = uniform_rat(rng, 8);
    }
    if (rank(map) < d) continue;
    std::vector<Point> image;
    for (const auto& p : set.points()) image.push_back(map * p);
    PointSet mapped(d, std::move(image), set.ell());
    if (ready(mapped)) return mapped;
  }
  throw BudgetExhausted("prepare_for_duality: no suitable linear map found");
}

std::vector<Hyperplane> dual_arrangement(const PointSet& set, std::uint64_t seed) {
  return perturb_arrangement(dualize(prepare_for_duality(set, seed)), seed);
}

}  // namespace genpos
