#include "oracles.hpp"

#include "genpos/error.hpp"
#include "genpos/halesjewett.hpp"

#include <doctest.h>

using namespace genpos;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Lines of [k]^m by brute force: every nonempty wildcard mask and fixed
// symbols elsewhere, as sets of words.
std::set<std::set<Word>> brute_lines(int k, int m) {
  std::set<std::set<Word>> out;
  const auto words = all_words(k + 1, m);  // symbol k+1 marks the wildcard
  for (const auto& w : words) {
    if (std::find(w.begin(), w.end(), k + 1) == w.end()) continue;
    std::set<Word> line;
    for (int s = 1; s <= k; ++s) {
      Word x = w;
      for (auto& c : x) {
        if (c == k + 1) c = s;
      }
      line.insert(x);
    }
    out.insert(line);
  }
  return out;
}

int brute_linefree(int k, int m) {
  const auto words = all_words(k, m);
  std::vector<std::uint32_t> lines;
  for (const auto& l : brute_lines(k, m)) {
    std::uint32_t mask = 0;
    for (const auto& w : l) mask |= 1u << word_index(w, k);
    lines.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << words.size()); ++s) {
    if (std::none_of(lines.begin(), lines.end(), [&](std::uint32_t l) { return (s & l) == l; })) {
      best = std::max(best, __builtin_popcount(s));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("template expansion") {
  SubspaceTemplate diag{2, {{0, 1}}, {}};
  CHECK(expand_template(diag, 3) == std::vector<Word>{{1, 1}, {2, 2}, {3, 3}});
  SubspaceTemplate col{2, {{0}}, {{1, 3}}};
  CHECK(expand_template(col, 3) == std::vector<Word>{{1, 3}, {2, 3}, {3, 3}});
  SubspaceTemplate full{2, {{0}, {1}}, {}};
  CHECK(expand_template(full, 2) == all_words(2, 2));

  CHECK_THROWS_AS(expand_template(SubspaceTemplate{2, {}, {{0, 1}, {1, 1}}}, 3), PreconditionError);
  CHECK_THROWS_AS(expand_template(SubspaceTemplate{2, {{0}, {}}, {{1, 1}}}, 3), PreconditionError);
  CHECK_THROWS_AS(expand_template(SubspaceTemplate{2, {{0, 1}}, {{1, 1}}}, 3), PreconditionError);
  CHECK_THROWS_AS(expand_template(SubspaceTemplate{3, {{0}}, {{1, 1}}}, 3), PreconditionError);
  CHECK_THROWS_AS(expand_template(SubspaceTemplate{2, {{0}}, {{1, 4}}}, 3), PreconditionError);
}

TEST_CASE("line enumeration") {
  CHECK(enumerate_lines(3, 1).size() == 1);
  CHECK(enumerate_lines(3, 2).size() == 7);
  CHECK(enumerate_lines(2, 3).size() == 19);
  for (int k = 2; k <= 3; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const auto lines = enumerate_lines(k, m);
      CHECK(static_cast<std::int64_t>(lines.size()) == ipow(k + 1, m) - ipow(k, m));
      std::set<std::set<Word>> sets;
      for (const auto& t : lines) {
        const auto words = expand_template(t, k);
        CHECK(words.size() == static_cast<std::size_t>(k));
        sets.emplace(words.begin(), words.end());
      }
      CHECK(sets.size() == lines.size());
      CHECK(sets == brute_lines(k, m));
    }
  }
  CHECK_THROWS_AS(enumerate_lines(1, 2), PreconditionError);
}

TEST_CASE("line-free subsets") {
  CHECK(max_linefree_subset(3, 1).size == 2);
  CHECK(max_linefree_subset(3, 2).size == 6);
  CHECK(max_linefree_subset(2, 2).size == 2);
  CHECK(brute_linefree(3, 2) == 6);
  CHECK(brute_linefree(2, 2) == 2);
  CHECK(brute_linefree(2, 3) == max_linefree_subset(2, 3).size);
  CHECK(brute_linefree(2, 4) == max_linefree_subset(2, 4).size);
  int prev = 0;
  for (int m = 1; m <= 3; ++m) {
    const auto r = max_linefree_subset(3, m);
    CHECK(r.exact);
    CHECK(r.size >= prev);
    CHECK(static_cast<int>(r.witness.size()) == r.size);
    CHECK(is_line_free(r.witness, 3, m));
    prev = r.size;
  }
  CHECK(max_linefree_subset(3, 3).size == 18);
  CHECK_THROWS_AS(max_linefree_subset(3, 4), PreconditionError);
  const auto tiny = max_linefree_subset(4, 3, 10);
  CHECK_FALSE(tiny.exact);
  CHECK(is_line_free(tiny.witness, 4, 3));
}

TEST_CASE("projected grids") {
  SUBCASE("[3]^2 keeps its geometric lines") {
    const auto g = grid_points(3, 2);
    const auto p = build_projected_grid(3, 2, 2, 1);
    CHECK(p.size() == 9);
    oracle::subsets(9, 3, [&](const std::vector<int>& t) {
      CHECK((oracle::affine_rank(p, t) <= 1) == (oracle::affine_rank(g, t) <= 1));
    });
  }
  SUBCASE("cube in R^3 has 12 coplanar quadruples") {
    const auto p = build_projected_grid(2, 3, 3, 2);
    CHECK(p.size() == 8);
    CHECK(oracle::cohyperplanar_tuples(p) == 12);
  }
  SUBCASE("cube in the plane has no collinear triple") {
    const auto p = build_projected_grid(2, 3, 2, 3);
    CHECK(oracle::cohyperplanar_tuples(p) == 0);
  }
  SUBCASE("combinatorial lines stay collinear") {
    for (int m = 2; m <= 3; ++m) {
      const auto p = build_projected_grid(3, m, 2, static_cast<std::uint64_t>(m));
      for (const auto& t : enumerate_lines(3, m)) {
        std::vector<int> idx;
        for (const auto& w : expand_template(t, 3)) idx.push_back(word_index(w, 3));
        CHECK(oracle::affine_rank(p, idx) == 1);
      }
    }
  }
  SUBCASE("geometric lines strictly contain combinatorial lines") {
    const auto g = grid_points(3, 2);
    std::set<std::vector<int>> comb;
    for (const auto& t : enumerate_lines(3, 2)) {
      std::vector<int> idx;
      for (const auto& w : expand_template(t, 3)) idx.push_back(word_index(w, 3));
      std::sort(idx.begin(), idx.end());
      comb.insert(idx);
    }
    const std::vector<int> anti{word_index({1, 3}, 3), word_index({2, 2}, 3), word_index({3, 1}, 3)};
    CHECK(oracle::affine_rank(g, anti) == 1);
    CHECK_FALSE(comb.count(anti));
    CHECK(comb.size() == 7);
  }
}
