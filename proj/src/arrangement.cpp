#include "genpos/arrangement.hpp"

#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/linalg.hpp"
#include "genpos/lp.hpp"

#include <algorithm>
#include <map>

namespace genpos {

namespace {

// max t  s.t.  s_i (a_i . x - b_i) >= t  for the given prefix,  t <= 1.
std::optional<Point> strict_witness(std::span<const Hyperplane> hs, std::span<const int> signs) {
  const int d = hs[0].dim();
  const auto k = static_cast<Eigen::Index>(signs.size());
  MatrixXq a = MatrixXq::Zero(k + 1, d + 1);
  VectorXq b(k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& h = hs[static_cast<std::size_t>(i)];
    const Rat s(signs[static_cast<std::size_t>(i)]);
    a.row(i).head(d) = -s * h.normal().transpose();
    a(i, d) = 1;
    b(i) = -s * h.offset();
  }
  a(k, d) = 1;
  b(k) = 1;
  VectorXq c = VectorXq::Zero(d + 1);
  c(d) = 1;
  const auto res = lp::maximize(c, a, b);
  if (res.status != lp::Status::optimal || res.value <= 0) return std::nullopt;
  return Point(res.x.head(d));
}

// Recession cone {y : s_i a_i . y >= 0} is {0}.
bool is_bounded(std::span<const Hyperplane> hs, std::span<const int> signs) {
  const int d = hs[0].dim();
  const auto n = static_cast<Eigen::Index>(hs.size());
  MatrixXq normals(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    normals.row(i) = Rat(signs[static_cast<std::size_t>(i)]) * hs[static_cast<std::size_t>(i)].normal().transpose();
  }
  if (rank(normals) < d) return false;
  MatrixXq a(2 * n, d);
  a.topRows(n) = -normals;
  a.bottomRows(n) = normals;
  VectorXq b(2 * n);
  b.head(n).setZero();
  b.tail(n).setOnes();
  const VectorXq c = normals.colwise().sum().transpose();
  const auto res = lp::maximize(c, a, b);
  return res.status == lp::Status::optimal && res.value == 0;
}

bool check_simplicial(std::span<const Hyperplane> hs, const Cell& cell) {
  const int d = hs[0].dim();
  if (!cell.bounded || cell.size() != d + 1) return false;
  std::vector<Point> vertices;
  bool ok = true;
  std::vector<Hyperplane> sel;
  for_each_combination(d + 1, d, [&](std::span<const int> idx) {
    sel.clear();
    for (int i : idx) sel.push_back(hs[static_cast<std::size_t>(cell.facet_support[static_cast<std::size_t>(i)])]);
    const auto v = intersection_point(sel);
    if (!v) {
      ok = false;
      return false;
    }
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (cell.sign_vector[j] * hs[j].side(*v) < 0) {
        ok = false;
        return false;
      }
    }
    vertices.push_back(*v);
    return true;
  });
  if (!ok) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Point> cell_witness(std::span<const Hyperplane> hyperplanes, std::span<const int> signs) {
  if (hyperplanes.empty() || signs.size() != hyperplanes.size()) {
    throw PreconditionError("cell_witness: one sign per hyperplane required");
  }
  return strict_witness(hyperplanes, signs);
}

Arrangement enumerate_cells(std::span<const Hyperplane> hyperplanes) {
  if (hyperplanes.empty()) throw PreconditionError("enumerate_cells needs at least one hyperplane");
  const int d = hyperplanes[0].dim();
  for (const auto& h : hyperplanes) {
    if (h.dim() != d) throw PreconditionError("enumerate_cells: mixed dimensions");
  }
  {
    std::vector<Hyperplane> sorted(hyperplanes.begin(), hyperplanes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("enumerate_cells: duplicate hyperplanes");
    }
  }

  // Insert hyperplanes one at a time, splitting every cell they cross.
  struct Partial {
    std::vector<int> signs;
    Point witness;
  };
  std::vector<Partial> cells{{{}, Point::Zero(d)}};
  for (std::size_t k = 0; k < hyperplanes.size(); ++k) {
    const auto prefix = hyperplanes.first(k + 1);
    std::vector<Partial> next;
    for (auto& cell : cells) {
      const int side = hyperplanes[k].side(cell.witness);
      for (const int s : {-1, 1}) {
        std::vector<int> signs = cell.signs;
        signs.push_back(s);
        if (side == s) {
          next.push_back({std::move(signs), cell.witness});
        } else if (auto w = strict_witness(prefix, signs)) {
          next.push_back({std::move(signs), std::move(*w)});
        }
      }
    }
    cells = std::move(next);
  }

  std::sort(cells.begin(), cells.end(), [](const Partial& a, const Partial& b) { return a.signs < b.signs; });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i].signs, static_cast<int>(i));

  std::vector<Cell> out;
  out.reserve(cells.size());
  for (auto& partial : cells) {
    Cell cell;
    cell.sign_vector = partial.signs;
    // Two cells differing in one sign are separated by a facet of both.
    for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
      auto flipped = partial.signs;
      flipped[j] = -flipped[j];
      if (index.count(flipped)) cell.facet_support.push_back(static_cast<int>(j));
    }
    cell.bounded = is_bounded(hyperplanes, cell.sign_vector);
    cell.witness = std::move(partial.witness);
    cell.simplicial = check_simplicial(hyperplanes, cell);
    out.push_back(std::move(cell));
  }
  return Arrangement(d, std::vector<Hyperplane>(hyperplanes.begin(), hyperplanes.end()), std::move(out));
}

std::vector<Cell> simplicial_cells(const Arrangement& a) {
  std::vector<Cell> out;
  std::copy_if(a.cells().begin(), a.cells().end(), std::back_inserter(out),
               [](const Cell& c) { return c.simplicial; });
  return out;
}

Hypergraph cell_hypergraph(const Arrangement& a) {
  std::vector<std::vector<int>> edges;
  edges.reserve(a.cells().size());
  for (const auto& c : a.cells()) edges.push_back(c.facet_support);
  return Hypergraph(a.size(), std::move(edges));
}

bool is_independent_set(const Arrangement& a, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(a.size()), 0);
  for (int i : subset) {
    if (i < 0 || i >= a.size()) throw PreconditionError("is_independent_set: index out of range");
    in[static_cast<std::size_t>(i)] = 1;
  }
  return std::none_of(a.cells().begin(), a.cells().end(), [&](const Cell& c) {
    return std::all_of(c.facet_support.begin(), c.facet_support.end(),
                       [&](int j) { return in[static_cast<std::size_t>(j)] != 0; });
  });
}

}  // namespace genpos
