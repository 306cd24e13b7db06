#include "genpos/halesjewett.hpp"

#include "genpos/error.hpp"
#include "genpos/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace genpos {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

void validate(const SubspaceTemplate& t, int k) {
  if (k < 1 || t.m < 1) throw PreconditionError("template needs k >= 1 and m >= 1");
  if (t.classes.empty()) throw PreconditionError("template needs at least one wildcard class");
  std::vector<int> seen(static_cast<std::size_t>(t.m), 0);
  auto mark = [&](int c) {
    if (c < 0 || c >= t.m) throw PreconditionError("template coordinate out of range");
    if (seen[static_cast<std::size_t>(c)]++) throw PreconditionError("template classes overlap");
  };
  for (const auto& cls : t.classes) {
    if (cls.empty()) throw PreconditionError("empty wildcard class");
    for (int c : cls) mark(c);
  }
  for (const auto& [c, sym] : t.fixed) {
    mark(c);
    if (sym < 1 || sym > k) throw PreconditionError("fixed symbol outside [k]");
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw PreconditionError("template does not cover every coordinate");
  }
}

std::vector<Word> expand_template(const SubspaceTemplate& t, int k) {
  validate(t, k);
  const int dims = t.dimension();
  std::vector<Word> out;
  std::vector<int> digits(static_cast<std::size_t>(dims), 1);
  while (true) {
    Word w(static_cast<std::size_t>(t.m), 0);
    for (const auto& [c, sym] : t.fixed) w[static_cast<std::size_t>(c)] = sym;
    for (int i = 0; i < dims; ++i) {
      for (int c : t.classes[static_cast<std::size_t>(i)]) w[static_cast<std::size_t>(c)] = digits[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(w));
    int i = dims - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == k) digits[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<SubspaceTemplate> enumerate_lines(int k, int m) {
  if (k < 2 || m < 1) throw PreconditionError("enumerate_lines needs k >= 2 and m >= 1");
  // Each coordinate is either the wildcard (0) or a fixed symbol 1..k.
  std::vector<SubspaceTemplate> out;
  std::vector<int> slot(static_cast<std::size_t>(m), 0);
  while (true) {
    SubspaceTemplate t;
    t.m = m;
    std::vector<int> wild;
    for (int c = 0; c < m; ++c) {
      if (slot[static_cast<std::size_t>(c)] == 0) {
        wild.push_back(c);
      } else {
        t.fixed[c] = slot[static_cast<std::size_t>(c)];
      }
    }
    if (!wild.empty()) {
      t.classes.push_back(std::move(wild));
      out.push_back(std::move(t));
    }
    int i = m - 1;
    while (i >= 0 && slot[static_cast<std::size_t>(i)] == k) slot[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++slot[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Word> all_words(int k, int m) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(m), 1);
  while (true) {
    out.push_back(w);
    int i = m - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == k) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

int word_index(const Word& w, int k) {
  int idx = 0;
  for (int s : w) idx = idx * k + (s - 1);
  return idx;
}

namespace {

Hypergraph line_hypergraph(int k, int m) {
  std::vector<std::vector<int>> edges;
  for (const auto& line : enumerate_lines(k, m)) {
    std::vector<int> e;
    for (const auto& w : expand_template(line, k)) e.push_back(word_index(w, k));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(ipow(k, m)), std::move(edges));
}

}  // namespace

LineFreeResult max_linefree_subset(int k, int m, std::uint64_t budget) {
  const auto n = ipow(k, m);
  if (n > 64) throw PreconditionError("max_linefree_subset: k^m = " + std::to_string(n) + " exceeds 64");
  const auto res = exact_max_independent(line_hypergraph(k, m), 64, n <= 16 ? 0 : budget);
  const auto words = all_words(k, m);
  LineFreeResult out;
  out.size = res.size;
  out.exact = res.exact;
  for (int v : res.witness) out.witness.push_back(words[static_cast<std::size_t>(v)]);
  return out;
}

bool is_line_free(const std::vector<Word>& words, int k, int m) {
  std::vector<int> idx;
  for (const auto& w : words) idx.push_back(word_index(w, k));
  return line_hypergraph(k, m).is_independent(idx);
}

PointSet grid_points(int k, int m) {
  std::vector<Point> pts;
  for (const auto& w : all_words(k, m)) {
    Point p(m);
    for (int c = 0; c < m; ++c) p(c) = w[static_cast<std::size_t>(c)];
    pts.push_back(std::move(p));
  }
  return PointSet(m, std::move(pts));
}

PointSet build_projected_grid(int k, int m, int target_dim, std::uint64_t seed) {
  return generic_projection(grid_points(k, m), target_dim, seed).image;
}

}  // namespace genpos
