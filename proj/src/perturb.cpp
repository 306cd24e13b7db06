#include "genpos/arrangement.hpp"
#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/geometry.hpp"
#include "genpos/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace genpos {

namespace {

struct SideRecord {
  std::vector<int> vertex;  // d hyperplanes meeting in one point
  int other;                // a hyperplane not through that point
  int side;
};

std::vector<Hyperplane> pick(std::span<const Hyperplane> hs, std::span<const int> idx) {
  std::vector<Hyperplane> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(hs[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<Hyperplane> perturb_arrangement(std::span<const Hyperplane> hyperplanes, std::uint64_t seed,
                                            const PerturbOptions& opts) {
  if (hyperplanes.empty()) return {};
  if (is_simple_arrangement(hyperplanes)) return {hyperplanes.begin(), hyperplanes.end()};

  const int d = hyperplanes[0].dim();
  const int n = static_cast<int>(hyperplanes.size());
  bool crowded = false;
  for_each_combination(n, d + 2, [&](std::span<const int> idx) {
    crowded = share_common_point(pick(hyperplanes, idx));
    return !crowded;
  });
  if (crowded) throw PreconditionError("perturb_arrangement: more than d+1 hyperplanes share a point");
  const auto concurrent = concurrent_tuples(hyperplanes);

  std::vector<SideRecord> sides;
  for_each_combination(n, d, [&](std::span<const int> idx) {
    const auto v = intersection_point(pick(hyperplanes, idx));
    if (!v) return;
    for (int j = 0; j < n; ++j) {
      const int s = hyperplanes[static_cast<std::size_t>(j)].side(*v);
      if (s != 0) sides.push_back({std::vector<int>(idx.begin(), idx.end()), j, s});
    }
  });

  Rng rng(seed);
  Rat eps(1, 8);
  for (int round = 0; round <= opts.max_halvings; ++round, eps /= 2) {
    std::vector<Hyperplane> out;
    out.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) {
      VectorXq normal = h.normal();
      for (Eigen::Index i = 0; i < normal.size(); ++i) {
        normal(i) += eps * uniform_rat(rng, opts.coefficient_range, opts.coefficient_range);
      }
      const Rat offset = h.offset() + eps * uniform_rat(rng, opts.coefficient_range, opts.coefficient_range);
      if (normal.isZero()) break;
      out.emplace_back(std::move(normal), offset);
    }
    if (out.size() != hyperplanes.size() || !is_simple_arrangement(out)) continue;

    bool kept_sides = true;
    for (const auto& rec : sides) {
      const auto v = intersection_point(pick(out, rec.vertex));
      if (!v || out[static_cast<std::size_t>(rec.other)].side(*v) != rec.side) {
        kept_sides = false;
        break;
      }
    }
    if (!kept_sides) continue;

    const auto arrangement = enumerate_cells(out);
    std::set<std::vector<int>> simplices;
    for (const auto& c : simplicial_cells(arrangement)) simplices.insert(c.facet_support);
    const bool all_resolved = std::all_of(concurrent.begin(), concurrent.end(),
                                          [&](const std::vector<int>& t) { return simplices.count(t) > 0; });
    if (all_resolved) return out;
  }
  throw BudgetExhausted("perturb_arrangement: no verified perturbation after " + std::to_string(opts.max_halvings) +
                        " halvings");
}

}  // namespace genpos
