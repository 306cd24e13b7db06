#include "genpos/census.hpp"

#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"

#include <algorithm>
#include <string>

namespace genpos {

namespace {

std::vector<Point> gather(const PointSet& set, std::span<const int> idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (int i : idx) pts.push_back(set[i]);
  return pts;
}

template <typename Contains>
std::vector<int> incident(const PointSet& set, Contains&& contains) {
  std::vector<int> out;
  for (int i = 0; i < set.size(); ++i) {
    if (contains(set[i])) out.push_back(i);
  }
  return out;
}

// Spanned flats with at least d+1 points, by dimension, together with the
// number of (d+1)-subsets of each whose affine hull is the whole flat.
struct RichFlat {
  int dim;
  std::vector<int> points;
  std::int64_t full_rank_tuples;
};

std::vector<RichFlat> rich_flats_with_full_rank_counts(const PointSet& set) {
  const int d = set.dim();
  std::vector<RichFlat> flats;
  for (int j = 1; j <= d - 1; ++j) {
    for (auto& f : spanned_flats(set, j)) {
      if (static_cast<int>(f.points.size()) >= d + 1) flats.push_back({j, std::move(f.points), 0});
    }
  }
  // Every (d+1)-subset of a flat has exactly one smallest spanned flat
  // containing it; subtract the ones owned by strictly smaller flats.
  for (std::size_t g = 0; g < flats.size(); ++g) {
    auto count = static_cast<std::int64_t>(binomial(static_cast<std::int64_t>(flats[g].points.size()), d + 1));
    for (std::size_t h = 0; h < g; ++h) {
      if (flats[h].dim < flats[g].dim &&
          std::includes(flats[g].points.begin(), flats[g].points.end(), flats[h].points.begin(),
                        flats[h].points.end())) {
        count -= flats[h].full_rank_tuples;
      }
    }
    flats[g].full_rank_tuples = count;
  }
  return flats;
}

void require_gamma(const Rat& gamma) {
  if (!(gamma > 0 && gamma < 1)) throw PreconditionError("gamma must lie strictly between 0 and 1");
}

}  // namespace

std::vector<SpannedHyperplane> spanned_hyperplanes(const PointSet& set) {
  const int d = set.dim();
  std::map<Hyperplane, bool> seen;
  for_each_combination(set.size(), d, [&](std::span<const int> idx) {
    if (auto h = Hyperplane::through(gather(set, idx))) seen.emplace(std::move(*h), true);
  });
  std::vector<SpannedHyperplane> out;
  out.reserve(seen.size());
  for (auto& [plane, unused] : seen) {
    auto pts = incident(set, [&](const Point& p) { return plane.contains(p); });
    out.push_back({plane, std::move(pts)});
  }
  return out;
}

std::vector<SpannedFlat> spanned_flats(const PointSet& set, int flat_dim) {
  const int d = set.dim();
  if (flat_dim < 0 || flat_dim > d - 1) throw PreconditionError("flat dimension out of range");
  std::map<Flat, bool> seen;
  for_each_combination(set.size(), flat_dim + 1, [&](std::span<const int> idx) {
    const auto pts = gather(set, idx);
    if (affine_rank(pts) == flat_dim) seen.emplace(Flat::affine_hull(pts), true);
  });
  std::vector<SpannedFlat> out;
  out.reserve(seen.size());
  for (auto& [flat, unused] : seen) {
    auto pts = incident(set, [&](const Point& p) { return flat.contains(p); });
    out.push_back({flat, std::move(pts)});
  }
  return out;
}

std::int64_t count_cohyperplanar_tuples(const PointSet& set) {
  std::int64_t total = 0;
  for (const auto& f : rich_flats_with_full_rank_counts(set)) total += f.full_rank_tuples;
  return total;
}

Profile rich_flat_profile(const PointSet& set, int flat_dim) {
  const int d = set.dim();
  if (flat_dim != d - 1 && flat_dim != d - 2) {
    throw PreconditionError("rich_flat_profile: flat_dim must be d-1 or d-2, got " + std::to_string(flat_dim));
  }
  if (flat_dim < 0) throw PreconditionError("rich_flat_profile: flat_dim must be nonnegative");
  Profile out;
  for (const auto& f : spanned_flats(set, flat_dim)) ++out[static_cast<int>(f.points.size())];
  return out;
}

Profile at_least(const Profile& exact) {
  Profile out;
  std::int64_t running = 0;
  for (auto it = exact.rbegin(); it != exact.rend(); ++it) {
    running += it->second;
    out[it->first] = running;
  }
  return out;
}

Rat degeneracy_ratio(const PointSet& set, const Hyperplane& h) {
  const int d = set.dim();
  if (d < 3) throw PreconditionError("degeneracy_ratio needs d >= 3");
  const auto on_h = incident(set, [&](const Point& p) { return h.contains(p); });
  if (on_h.empty()) throw PreconditionError("degeneracy_ratio: hyperplane contains no point of the set");
  const auto q = static_cast<std::int64_t>(on_h.size());
  const auto pts = gather(set, on_h);
  if (static_cast<int>(q) <= d - 1 || affine_rank(pts) <= d - 2) return Rat(1);

  std::int64_t best = d - 1;
  for_each_combination(static_cast<int>(q), d - 1, [&](std::span<const int> idx) {
    std::vector<Point> base;
    for (int i : idx) base.push_back(pts[static_cast<std::size_t>(i)]);
    if (affine_rank(base) != d - 2) return;
    const Flat flat = Flat::affine_hull(base);
    const auto on = std::count_if(pts.begin(), pts.end(), [&](const Point& p) { return flat.contains(p); });
    best = std::max<std::int64_t>(best, on);
  });
  return Rat(best, q);
}

Profile pencil_profile(const PointSet& set, const Flat& flat) {
  const int d = set.dim();
  if (flat.dim() != d || flat.dim_flat() != d - 2) throw PreconditionError("pencil_profile needs a (d-2)-flat");
  // Anchor the flat with d-1 affinely independent points, then each outside
  // point determines the hyperplane through it.
  std::vector<Point> anchor{flat.basepoint()};
  for (Eigen::Index r = 0; r < flat.directions().rows(); ++r) {
    anchor.push_back(flat.basepoint() + flat.directions().row(r).transpose());
  }
  std::map<Hyperplane, std::int64_t> outside;
  for (const auto& p : set.points()) {
    if (flat.contains(p)) continue;
    auto pts = anchor;
    pts.push_back(p);
    ++outside[*Hyperplane::through(pts)];
  }
  Profile out;
  for (const auto& [plane, r] : outside) ++out[static_cast<int>(r)];
  return out;
}

TupleCounts classify_tuples(const PointSet& set, const Rat& gamma) {
  const int d = set.dim();
  if (d < 3) throw PreconditionError("classify_tuples needs d >= 3; collinear triples are counted directly");
  require_gamma(gamma);
  std::map<std::vector<int>, Hyperplane> planes;
  for (auto& h : spanned_hyperplanes(set)) planes.emplace(std::move(h.points), std::move(h.plane));
  TupleCounts counts;
  std::int64_t spanning = 0;
  for (const auto& f : rich_flats_with_full_rank_counts(set)) {
    counts.total += f.full_rank_tuples;
    if (f.dim != d - 1 || f.full_rank_tuples == 0) continue;
    spanning += f.full_rank_tuples;
    const auto& plane = planes.at(f.points);
    if (degeneracy_ratio(set, plane) <= gamma) {
      counts.type2 += f.full_rank_tuples;
    } else {
      counts.type3 += f.full_rank_tuples;
    }
  }
  counts.type1 = counts.total - spanning;
  return counts;
}

CensusProfile census(const PointSet& set, const Rat& gamma) {
  const int d = set.dim();
  if (d < 2) throw PreconditionError("census needs d >= 2");
  if (gamma <= 0 || gamma >= 1) throw PreconditionError("gamma must lie in (0, 1)");
  CensusProfile out;
  out.n = set.size();
  out.d = d;
  out.gamma = gamma;
  out.hyperplane_rich = rich_flat_profile(set, d - 1);
  out.subflat_rich = rich_flat_profile(set, d - 2);
  out.total_tuples = count_cohyperplanar_tuples(set);
  if (d >= 3) {
    for (const auto& f : spanned_flats(set, d - 2)) out.pencils.push_back({f.points, pencil_profile(set, f.flat)});
    out.types = classify_tuples(set, gamma);
  }
  return out;
}

}  // namespace genpos
