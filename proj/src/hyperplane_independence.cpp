#include "genpos/hyperplane_independence.hpp"

#include "genpos/error.hpp"
#include "genpos/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace genpos {

double beta_sampling_probability(int n, int d) {
  const double nn = n;
  double lll = std::log2(std::log2(std::log2(nn)));
  if (!(lll >= 1.0)) lll = 1.0;  // also catches NaN and -inf for tiny n
  const double t = std::ldexp(1.0, d);
  const double pn = std::pow(nn / (t * lll), 3.0 / (3.0 * d - 1.0));
  return std::min(1.0, pn / nn);
}

std::vector<int> randomized_beta_procedure(const Arrangement& a, std::uint64_t seed, BetaRunReport* report) {
  const int n = a.size();
  const int d = a.dim();
  if (n < 2) throw PreconditionError("randomized_beta_procedure needs at least two hyperplanes");
  Rng rng(seed);

  std::vector<std::vector<int>> simplices;
  for (const auto& c : a.cells()) {
    if (c.simplicial) simplices.push_back(c.facet_support);
  }
  const Hypergraph simplicial(n, std::move(simplices));

  const double p = beta_sampling_probability(n, d);
  std::vector<int> sample;
  for (int v = 0; v < n; ++v) {
    if (bernoulli(rng, p)) sample.push_back(v);
  }

  const auto cleanup = make_linear_trianglefree(simplicial.induced(sample), rng());
  std::vector<int> set;
  for (int local : greedy_max_independent(cleanup.induced, rng())) {
    set.push_back(sample[static_cast<std::size_t>(cleanup.kept[static_cast<std::size_t>(local)])]);
  }
  const int independent_size = static_cast<int>(set.size());

  // Cells of any size may still be bounded by the set alone; break each one.
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : set) in[static_cast<std::size_t>(v)] = 1;
  for (const auto& c : a.cells()) {
    const auto& sup = c.facet_support;
    if (!std::all_of(sup.begin(), sup.end(), [&](int j) { return in[static_cast<std::size_t>(j)] != 0; })) continue;
    const int drop = sup[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(sup.size()) - 1))];
    in[static_cast<std::size_t>(drop)] = 0;
  }
  std::vector<int> pruned;
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<std::size_t>(v)]) pruned.push_back(v);
  }
  const int pruned_size = static_cast<int>(pruned.size());

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  auto result = extend_to_maximal(cell_hypergraph(a), std::move(pruned), order);

  if (report) {
    *report = BetaRunReport{seed,
                            n,
                            d,
                            p,
                            static_cast<int>(sample.size()),
                            static_cast<int>(cleanup.kept.size()),
                            independent_size,
                            pruned_size,
                            static_cast<int>(result.size()),
                            cleanup.removed};
  }
  return result;
}

// ---------------------------------------------------------------------------

bool is_proper_coloring(const Arrangement& a, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != a.size()) return false;
  return std::none_of(a.cells().begin(), a.cells().end(), [&](const Cell& c) {
    const int first = color[static_cast<std::size_t>(c.facet_support.front())];
    return std::all_of(c.facet_support.begin(), c.facet_support.end(),
                       [&](int j) { return color[static_cast<std::size_t>(j)] == first; });
  });
}

namespace {

void require_colorable(const Arrangement& a) {
  for (const auto& c : a.cells()) {
    if (c.size() < 2) throw PreconditionError("a cell has a single facet hyperplane; no proper coloring exists");
  }
}

// Maximal subset of `pool` (index order) containing no edge.
std::vector<int> peel(const Hypergraph& g, const std::vector<int>& pool) {
  return extend_to_maximal(g, {}, pool);
}

void color_recursive(const Hypergraph& g, std::vector<int> remaining, Coloring& out) {
  if (remaining.empty()) return;
  if (remaining.size() <= 2) {
    // Two hyperplanes share a color unless they alone bound some cell.
    const auto cls = peel(g, remaining);
    const int c = out.n_colors++;
    for (int v : cls) out.color[static_cast<std::size_t>(v)] = c;
    if (cls.size() < remaining.size()) {
      const int c2 = out.n_colors++;
      for (int v : remaining) {
        if (!std::binary_search(cls.begin(), cls.end(), v)) out.color[static_cast<std::size_t>(v)] = c2;
      }
    }
    return;
  }
  const std::size_t half = remaining.size() / 2;
  while (remaining.size() > half) {
    const auto cls = peel(g, remaining);
    const int c = out.n_colors++;
    for (int v : cls) out.color[static_cast<std::size_t>(v)] = c;
    std::vector<int> rest;
    std::set_difference(remaining.begin(), remaining.end(), cls.begin(), cls.end(), std::back_inserter(rest));
    remaining = std::move(rest);
  }
  color_recursive(g, std::move(remaining), out);
}

}  // namespace

Coloring greedy_coloring(const Arrangement& a) {
  require_colorable(a);
  Coloring out;
  out.color.assign(static_cast<std::size_t>(a.size()), -1);
  std::vector<int> all(static_cast<std::size_t>(a.size()));
  std::iota(all.begin(), all.end(), 0);
  color_recursive(cell_hypergraph(a), std::move(all), out);
  return out;
}

Coloring sequential_coloring(const Arrangement& a) {
  require_colorable(a);
  const Hypergraph g = cell_hypergraph(a);
  Coloring out;
  out.color.assign(static_cast<std::size_t>(a.size()), -1);
  for (int v = 0; v < a.size(); ++v) {
    for (int c = 0;; ++c) {
      const bool clash = std::any_of(g.edges_of(v).begin(), g.edges_of(v).end(), [&](int e) {
        const auto& edge = g.edges()[static_cast<std::size_t>(e)];
        return std::all_of(edge.begin(), edge.end(),
                           [&](int u) { return u == v || out.color[static_cast<std::size_t>(u)] == c; });
      });
      if (!clash) {
        out.color[static_cast<std::size_t>(v)] = c;
        out.n_colors = std::max(out.n_colors, c + 1);
        break;
      }
    }
  }
  return out;
}

}  // namespace genpos
