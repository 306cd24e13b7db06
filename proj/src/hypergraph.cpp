#include "genpos/hypergraph.hpp"

#include "genpos/error.hpp"
#include "genpos/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace genpos {

Hypergraph::Hypergraph(int n_vertices, std::vector<std::vector<int>> edges)
    : n_(n_vertices), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(n_vertices)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.empty()) throw PreconditionError("hypergraph edges must be nonempty");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw PreconditionError("hypergraph edge with a repeated vertex");
    }
    if (edge.front() < 0 || edge.back() >= n_) throw PreconditionError("hypergraph edge member out of range");
    for (int v : edge) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const auto r = edges_.front().size();
  for (const auto& e : edges_) {
    if (e.size() != r) return std::nullopt;
  }
  return static_cast<int>(r);
}

bool Hypergraph::is_independent(std::span<const int> vertices) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int v : vertices) {
    if (v < 0 || v >= n_) throw PreconditionError("vertex index out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  return std::none_of(edges_.begin(), edges_.end(), [&](const std::vector<int>& e) {
    return std::all_of(e.begin(), e.end(), [&](int v) { return in[static_cast<std::size_t>(v)] != 0; });
  });
}

Hypergraph Hypergraph::induced(std::span<const int> keep) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) label[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  for (const auto& e : edges_) {
    std::vector<int> mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      if (label[static_cast<std::size_t>(v)] < 0) break;
      mapped.push_back(label[static_cast<std::size_t>(v)]);
    }
    if (mapped.size() == e.size()) out.push_back(std::move(mapped));
  }
  return Hypergraph(static_cast<int>(keep.size()), std::move(out));
}

// ---------------------------------------------------------------------------

double spencer_bound(std::int64_t n, std::int64_t m, int r) {
  if (n < 1 || m < 0 || r < 2) throw PreconditionError("spencer_bound needs n >= 1, m >= 0, r >= 2");
  if (m == 0) return static_cast<double>(n);
  const double rr = r;
  const double nn = static_cast<double>(n);
  const double density = static_cast<double>(m) / nn;
  return (rr - 1.0) / std::pow(rr, rr / (rr - 1.0)) * nn / std::pow(density, 1.0 / (rr - 1.0));
}

std::int64_t ceil_bound(double value) { return static_cast<std::int64_t>(std::ceil(value - 1e-9)); }

std::vector<int> extend_to_maximal(const Hypergraph& h, std::vector<int> start, std::span<const int> order) {
  std::vector<char> in(static_cast<std::size_t>(h.n_vertices()), 0);
  for (int v : start) in[static_cast<std::size_t>(v)] = 1;
  for (int v : order) {
    if (in[static_cast<std::size_t>(v)]) continue;
    bool blocked = false;
    for (int e : h.edges_of(v)) {
      const auto& edge = h.edges()[static_cast<std::size_t>(e)];
      if (std::all_of(edge.begin(), edge.end(),
                      [&](int u) { return u == v || in[static_cast<std::size_t>(u)] != 0; })) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      in[static_cast<std::size_t>(v)] = 1;
      start.push_back(v);
    }
  }
  std::sort(start.begin(), start.end());
  return start;
}

std::vector<int> greedy_max_independent(const Hypergraph& h, std::uint64_t order_seed) {
  std::vector<int> order(static_cast<std::size_t>(h.n_vertices()));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(order_seed);
  shuffle(order, rng);
  return extend_to_maximal(h, {}, order);
}

SpencerResult spencer_deletion(const Hypergraph& h, std::uint64_t seed, int retries) {
  const int n = h.n_vertices();
  SpencerResult result;
  if (n == 0) {
    result.target_met = true;
    return result;
  }
  const auto r = h.uniformity();
  if (!r && h.n_edges() > 0) throw PreconditionError("spencer_deletion needs a uniform hypergraph");
  const std::int64_t m = h.n_edges();
  result.target = ceil_bound(spencer_bound(n, m, r.value_or(2)));
  const double p =
      m == 0 ? 1.0
             : std::min(1.0, std::pow(static_cast<double>(n) / (static_cast<double>(*r) * static_cast<double>(m)),
                                      1.0 / (*r - 1)));

  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 1; attempt <= std::max(retries, 1); ++attempt) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = bernoulli(rng, p) ? 1 : 0;
    for (const auto& edge : h.edges()) {
      const bool inside =
          std::all_of(edge.begin(), edge.end(), [&](int u) { return in[static_cast<std::size_t>(u)] != 0; });
      if (inside) {
        const auto pick = edge[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(edge.size()) - 1))];
        in[static_cast<std::size_t>(pick)] = 0;
      }
    }
    std::vector<int> kept;
    for (int v = 0; v < n; ++v) {
      if (in[static_cast<std::size_t>(v)]) kept.push_back(v);
    }
    shuffle(order, rng);
    kept = extend_to_maximal(h, std::move(kept), order);
    result.attempts = attempt;
    if (kept.size() > result.vertices.size() || attempt == 1) result.vertices = std::move(kept);
    if (static_cast<std::int64_t>(result.vertices.size()) >= result.target) {
      result.target_met = true;
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

struct BranchAndBound {
  int n = 0;
  std::vector<int> order;                 // search position -> vertex
  std::vector<std::vector<Mask>> edges_at;  // vertex -> masks of its edges
  std::vector<Mask> suffix;               // vertices at positions >= i
  Mask best_mask = 0;
  int best = -1;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;

  void run(int pos, Mask chosen, Mask forbidden) {
    if (aborted) return;
    ++nodes;
    if (budget != 0 && nodes > budget) {
      aborted = true;
      return;
    }
    const int size = std::popcount(chosen);
    if (size > best) {
      best = size;
      best_mask = chosen;
    }
    if (pos == n) return;
    const Mask open = suffix[static_cast<std::size_t>(pos)] & ~forbidden;
    if (size + std::popcount(open) <= best) return;

    const int v = order[static_cast<std::size_t>(pos)];
    const Mask bit = Mask{1} << v;
    if (forbidden & bit) {
      run(pos + 1, chosen, forbidden);
      return;
    }
    // Take v: any edge left with one unchosen member forbids that member.
    const Mask with_v = chosen | bit;
    Mask next_forbidden = forbidden;
    for (const Mask e : edges_at[static_cast<std::size_t>(v)]) {
      const Mask rest = e & ~with_v;
      if (std::has_single_bit(rest)) next_forbidden |= rest;
    }
    run(pos + 1, with_v, next_forbidden);
    run(pos + 1, chosen, forbidden | bit);
  }
};

}  // namespace

ExactIndependent exact_max_independent(const Hypergraph& h, int limit, std::uint64_t node_budget) {
  const int n = h.n_vertices();
  if (n > limit || n > 64) {
    throw PreconditionError("exact_max_independent: " + std::to_string(n) + " vertices exceeds the limit of " +
                            std::to_string(std::min(limit, 64)));
  }
  BranchAndBound bb;
  bb.n = n;
  bb.budget = node_budget;
  bb.edges_at.resize(static_cast<std::size_t>(n));
  Mask forbidden = 0;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (int v : e) m |= Mask{1} << v;
    if (e.size() == 1) forbidden |= m;
    for (int v : e) bb.edges_at[static_cast<std::size_t>(v)].push_back(m);
  }
  // High-degree vertices first tightens the bound early.
  bb.order.resize(static_cast<std::size_t>(n));
  std::iota(bb.order.begin(), bb.order.end(), 0);
  std::stable_sort(bb.order.begin(), bb.order.end(), [&](int a, int b) {
    return h.edges_of(a).size() > h.edges_of(b).size();
  });
  bb.suffix.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    bb.suffix[static_cast<std::size_t>(i)] =
        bb.suffix[static_cast<std::size_t>(i) + 1] | (Mask{1} << bb.order[static_cast<std::size_t>(i)]);
  }
  bb.run(0, 0, forbidden);

  ExactIndependent out;
  out.size = bb.best;
  out.exact = !bb.aborted;
  out.nodes = bb.nodes;
  for (int v = 0; v < n; ++v) {
    if (bb.best_mask & (Mask{1} << v)) out.witness.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Intersection sizes and, for single-vertex intersections, the shared vertex.
struct PairTable {
  std::vector<int> size;
  std::vector<int> shared;
  int n_edges;

  explicit PairTable(const std::vector<std::vector<int>>& edges)
      : size(edges.size() * edges.size(), 0), shared(edges.size() * edges.size(), -1),
        n_edges(static_cast<int>(edges.size())) {
    for (int i = 0; i < n_edges; ++i) {
      for (int j = i + 1; j < n_edges; ++j) {
        std::vector<int> common;
        std::set_intersection(edges[static_cast<std::size_t>(i)].begin(), edges[static_cast<std::size_t>(i)].end(),
                              edges[static_cast<std::size_t>(j)].begin(), edges[static_cast<std::size_t>(j)].end(),
                              std::back_inserter(common));
        const auto k = static_cast<std::size_t>(i * n_edges + j);
        size[k] = static_cast<int>(common.size());
        if (common.size() == 1) shared[k] = common.front();
      }
    }
  }
  int size_of(int i, int j) const { return size[static_cast<std::size_t>(std::min(i, j) * n_edges + std::max(i, j))]; }
  int shared_of(int i, int j) const {
    return shared[static_cast<std::size_t>(std::min(i, j) * n_edges + std::max(i, j))];
  }
};

template <typename OnPair, typename OnTriangle>
void for_each_violation(const std::vector<std::vector<int>>& edges, OnPair&& on_pair, OnTriangle&& on_triangle) {
  const PairTable table(edges);
  const int e = table.n_edges;
  for (int i = 0; i < e; ++i) {
    for (int j = i + 1; j < e; ++j) {
      if (table.size_of(i, j) >= 2) on_pair(i, j);
    }
  }
  for (int i = 0; i < e; ++i) {
    for (int j = i + 1; j < e; ++j) {
      const int a = table.shared_of(i, j);
      if (a < 0) continue;
      for (int k = j + 1; k < e; ++k) {
        const int b = table.shared_of(j, k);
        const int c = table.shared_of(i, k);
        if (b >= 0 && c >= 0 && a != b && b != c && a != c) on_triangle(i, j, k);
      }
    }
  }
}

}  // namespace

bool is_linear(const Hypergraph& h) {
  const PairTable table(h.edges());
  for (int i = 0; i < table.n_edges; ++i) {
    for (int j = i + 1; j < table.n_edges; ++j) {
      if (table.size_of(i, j) >= 2) return false;
    }
  }
  return true;
}

bool has_triangle(const Hypergraph& h) {
  bool found = false;
  for_each_violation(h.edges(), [](int, int) {}, [&](int, int, int) { found = true; });
  return found;
}

LinearCleanup make_linear_trianglefree(const Hypergraph& h, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<char> alive(static_cast<std::size_t>(h.n_vertices()), 1);
  int removed = 0;
  while (true) {
    std::vector<std::vector<int>> live_edges;
    for (const auto& e : h.edges()) {
      if (std::all_of(e.begin(), e.end(), [&](int v) { return alive[static_cast<std::size_t>(v)] != 0; })) {
        live_edges.push_back(e);
      }
    }
    std::vector<int> weight(static_cast<std::size_t>(h.n_vertices()), 0);
    bool any = false;
    auto bump = [&](int edge) {
      for (int v : live_edges[static_cast<std::size_t>(edge)]) ++weight[static_cast<std::size_t>(v)];
    };
    for_each_violation(
        live_edges,
        [&](int i, int j) {
          any = true;
          bump(i);
          bump(j);
        },
        [&](int i, int j, int k) {
          any = true;
          bump(i);
          bump(j);
          bump(k);
        });
    if (!any) break;
    const int top = *std::max_element(weight.begin(), weight.end());
    std::vector<int> ties;
    for (int v = 0; v < h.n_vertices(); ++v) {
      if (weight[static_cast<std::size_t>(v)] == top) ties.push_back(v);
    }
    const int victim = ties[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(ties.size()) - 1))];
    alive[static_cast<std::size_t>(victim)] = 0;
    ++removed;
  }
  LinearCleanup out;
  for (int v = 0; v < h.n_vertices(); ++v) {
    if (alive[static_cast<std::size_t>(v)]) out.kept.push_back(v);
  }
  out.induced = h.induced(out.kept);
  out.removed = removed;
  return out;
}

}  // namespace genpos
