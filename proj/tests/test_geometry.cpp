#include "oracles.hpp"

#include "genpos/arrangement.hpp"
#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/geometry.hpp"
#include "genpos/linalg.hpp"
#include "genpos/lp.hpp"

#include <doctest.h>

using namespace genpos;

namespace {

Point pt(std::initializer_list<Rat> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) p(i++) = x;
  return p;
}

PointSet grid(int k, int d) {
  std::vector<Point> pts;
  std::vector<int> c(static_cast<std::size_t>(d), 1);
  while (true) {
    Point p(d);
    for (int i = 0; i < d; ++i) p(i) = c[static_cast<std::size_t>(i)];
    pts.push_back(p);
    int i = d - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return PointSet(d, pts);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("orientation") {
  std::vector<Point> tri{pt({0, 0}), pt({1, 0}), pt({0, 1})};
  CHECK(orientation(tri) == 1);
  std::swap(tri[0], tri[1]);
  CHECK(orientation(tri) == -1);
  std::vector<Point> line{pt({0, 0}), pt({1, 1}), pt({2, 2})};
  CHECK(orientation(line) == 0);
  std::vector<Point> simplex{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  CHECK(orientation(simplex) == 1);
  std::vector<Point> bad{pt({0, 0}), pt({1, 0, 0}), pt({0, 1})};
  CHECK_THROWS_AS(orientation(bad), PreconditionError);
  std::vector<Point> few{pt({0, 0}), pt({1, 0})};
  CHECK_THROWS_AS(orientation(few), PreconditionError);
}

TEST_CASE("orientation is antisymmetric") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 3;
    auto s = oracle::random_points(rng, d + 1, d, 3);
    auto pts = s.points();
    const int before = orientation(pts);
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, d));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, d - 1));
    if (j >= i) ++j;
    std::swap(pts[i], pts[j]);
    CHECK(orientation(pts) == -before);
  }
}

TEST_CASE("affine rank") {
  std::vector<Point> one{pt({5, 5})};
  CHECK(affine_rank(one) == 0);
  std::vector<Point> line{pt({0, 0}), pt({1, 1}), pt({2, 2})};
  CHECK(affine_rank(line) == 1);
  CHECK(affine_rank(grid(2, 3).points()) == 3);
  std::vector<Point> none;
  CHECK_THROWS_AS(affine_rank(none), PreconditionError);
}

TEST_CASE("affine rank matches the oracle and survives affine maps") {
  Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    const int d = 2 + t % 3;
    const int n = 1 + static_cast<int>(uniform_int(rng, 0, 5));
    auto s = oracle::random_points(rng, n, d, 2);
    CHECK(affine_rank(s.points()) == oracle::affine_rank(s.points()));
    MatrixXq a(d, d);
    do {
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) a(r, c) = uniform_rat(rng, 4, 3);
      }
    } while (rank(a) < d);
    Point shift(d);
    for (int i = 0; i < d; ++i) shift(i) = uniform_rat(rng, 9, 2);
    std::vector<Point> image;
    for (const auto& p : s.points()) image.push_back(a * p + shift);
    CHECK(affine_rank(image) == affine_rank(s.points()));
  }
}

TEST_CASE("general position") {
  CHECK(is_general_position(PointSet(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})})));
  CHECK_FALSE(is_general_position(grid(3, 2)));
  CHECK_FALSE(is_general_position(PointSet(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})})));
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 2;
    auto s = oracle::random_points(rng, 6, d, 2);
    std::vector<int> all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_general_position(s) == oracle::general_position(s, all));
  }
}

TEST_CASE("point sets reject repeats and mixed dimensions") {
  CHECK_THROWS_AS(PointSet(2, {pt({1, 1}), pt({1, 1})}), PreconditionError);
  CHECK_THROWS_AS(PointSet(2, {pt({1, 1}), pt({1, 1, 1})}), PreconditionError);
}

TEST_CASE("hyperplane canonical form") {
  const Hyperplane h(pt({Rat(-1, 2), 1}), Rat(3, 4));
  CHECK(h.normal() == pt({2, -4}));
  CHECK(h.offset() == Rat(-3));
  CHECK(h == Hyperplane(pt({4, -8}), -6));
  CHECK_THROWS_AS(Hyperplane(pt({0, 0}), 1), PreconditionError);
  std::vector<Point> two{pt({0, 0}), pt({2, 2})};
  const auto l = Hyperplane::through(two);
  REQUIRE(l);
  CHECK(l->contains(pt({5, 5})));
  std::vector<Point> same{pt({1, 1}), pt({1, 1})};
  CHECK_FALSE(Hyperplane::through(same));
}

TEST_CASE("flats are equal iff structurally equal") {
  std::vector<Point> a{pt({0, 0, 0}), pt({1, 1, 0})};
  std::vector<Point> b{pt({3, 3, 0}), pt({-2, -2, 0})};
  std::vector<Point> c{pt({0, 0, 1}), pt({1, 1, 1})};
  CHECK(Flat::affine_hull(a) == Flat::affine_hull(b));
  CHECK_FALSE(Flat::affine_hull(a) == Flat::affine_hull(c));
  CHECK(Flat::affine_hull(a).dim_flat() == 1);
  CHECK(Flat::affine_hull(a).contains(pt({7, 7, 0})));
}

TEST_CASE("dualize") {
  const auto h = dualize(pt({1, 2}));
  // y = x - 2
  CHECK(h.contains(pt({0, -2})));
  CHECK(h.contains(pt({2, 0})));
  const Point p = pt({1, 2});
  const Point q = pt({3, 1});
  CHECK(dualize(q).contains(p));
  CHECK(dualize(p).contains(q));

  PointSet line(2, {pt({0, 0}), pt({1, 1}), pt({2, 2})});
  const auto duals = dualize(line);
  const auto x = intersection_point(std::span(duals).first(2));
  REQUIRE(x);
  for (const auto& l : duals) CHECK(l.contains(*x));
}

TEST_CASE("duality preserves incidence on random sets") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const int d = 2 + t % 3;
    auto s = oracle::random_points(rng, 20, d, 3);
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) CHECK(dualize(s[i]).contains(s[j]) == dualize(s[j]).contains(s[i]));
    }
  }
}

TEST_CASE("exact LP") {
  // max x + y  s.t.  x <= 2, y <= 3, x + y <= 4
  MatrixXq a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  VectorXq b(3);
  b << 2, 3, 4;
  VectorXq c(2);
  c << 1, 1;
  const auto r = lp::maximize(c, a, b);
  CHECK(r.status == lp::Status::optimal);
  CHECK(r.value == 4);
  MatrixXq a2(2, 1);
  a2 << 1, -1;
  VectorXq b2(2);
  b2 << -1, -1;  // x <= -1 and x >= 1
  VectorXq c2(1);
  c2 << 1;
  CHECK(lp::maximize(c2, a2, b2).status == lp::Status::infeasible);
  MatrixXq a3(1, 1);
  a3 << -1;
  VectorXq b3(1);
  b3 << 0;
  CHECK(lp::maximize(c2, a3, b3).status == lp::Status::unbounded);
}

TEST_CASE("simplicity checks") {
  std::vector<Hyperplane> generic{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({0, 1}), 0), Hyperplane(pt({1, 1}), 1)};
  CHECK(is_simple_arrangement(generic));
  std::vector<Hyperplane> pencil{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({0, 1}), 0), Hyperplane(pt({1, 1}), 0)};
  CHECK_FALSE(is_simple_arrangement(pencil));
  CHECK(concurrent_tuples(pencil).size() == 1);
  std::vector<Hyperplane> parallel{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({1, 0}), 1)};
  CHECK_FALSE(is_simple_arrangement(parallel));
}

TEST_CASE("perturbation: three concurrent lines become one triangle") {
  std::vector<Hyperplane> pencil{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({0, 1}), 0), Hyperplane(pt({1, 1}), 0)};
  const auto out = perturb_arrangement(pencil, 1);
  CHECK(is_simple_arrangement(out));
  CHECK(oracle::simple(out));
  const auto a = enumerate_cells(out);
  int bounded = 0;
  for (const auto& c : a.cells()) bounded += c.bounded;
  CHECK(bounded == 1);
  CHECK(simplicial_cells(a).size() == 1);
}

TEST_CASE("perturbation leaves simple input unchanged") {
  Rng rng(9);
  const auto hs = oracle::random_simple_arrangement(rng, 5, 2);
  CHECK(perturb_arrangement(hs, 4) == hs);
}

TEST_CASE("perturbation: dual of four coplanar points in R^3") {
  PointSet s(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})});
  const auto out = perturb_arrangement(dualize(s), 2);
  CHECK(oracle::simple(out));
  const auto a = enumerate_cells(out);
  const auto simp = simplicial_cells(a);
  REQUIRE(simp.size() == 1);
  CHECK(simp[0].facet_support == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("perturbation rejects d+2 concurrent hyperplanes") {
  std::vector<Hyperplane> four{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({0, 1}), 0), Hyperplane(pt({1, 1}), 0),
                               Hyperplane(pt({1, 2}), 0)};
  CHECK_THROWS_AS(perturb_arrangement(four, 1), PreconditionError);
}

TEST_CASE("perturbation keeps old vertices on their sides") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    // Random lines plus one planted concurrency.
    std::vector<Hyperplane> hs;
    const Point center = pt({uniform_rat(rng, 5), uniform_rat(rng, 5)});
    for (int i = 0; i < 3; ++i) {
      Point a = pt({uniform_int(rng, 1, 6), uniform_int(rng, -6, 6)});
      Hyperplane h(a, a.dot(center));
      if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(h);
    }
    while (hs.size() < 5) {
      Point a = pt({uniform_int(rng, 1, 6), uniform_int(rng, -6, 6)});
      Hyperplane h(a, uniform_rat(rng, 30, 7));
      if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(h);
    }
    bool ok = true;
    for_each_combination(static_cast<int>(hs.size()), 4, [&](std::span<const int> idx) {
      std::vector<Hyperplane> sub;
      for (int i : idx) sub.push_back(hs[static_cast<std::size_t>(i)]);
      if (share_common_point(sub)) ok = false;
    });
    if (!ok) continue;
    const auto out = perturb_arrangement(hs, static_cast<std::uint64_t>(t));
    CHECK(oracle::simple(out));
    for_each_combination(static_cast<int>(hs.size()), 2, [&](std::span<const int> idx) {
      std::vector<Hyperplane> pair{hs[static_cast<std::size_t>(idx[0])], hs[static_cast<std::size_t>(idx[1])]};
      const auto v = intersection_point(pair);
      if (!v) return;
      for (std::size_t k = 0; k < hs.size(); ++k) {
        if (hs[k].contains(*v)) continue;
        CHECK(hs[k].side(*v) == out[k].side(*v));
      }
    });
  }
}

TEST_CASE("generic projection") {
  SUBCASE("m = d keeps the dependency pattern") {
    const auto s = grid(3, 2);
    const auto p = generic_projection(s, 2, 1);
    for_each_combination(9, 3, [&](std::span<const int> t) {
      std::vector<int> idx(t.begin(), t.end());
      CHECK((oracle::affine_rank(p.image, idx) <= 1) == (oracle::affine_rank(s, idx) <= 1));
    });
  }
  SUBCASE("cube to the plane has no collinear triple") {
    const auto p = generic_projection(grid(2, 3), 2, 3);
    CHECK(p.image.size() == 8);
    CHECK(oracle::cohyperplanar_tuples(p.image) == 0);
  }
  SUBCASE("[3]^3 to the plane keeps exactly the geometric collinear triples") {
    const auto g = grid(3, 3);
    const auto p = generic_projection(g, 2, 5);
    std::set<std::vector<int>> img;
    std::set<std::vector<int>> pre;
    oracle::subsets(27, 3, [&](const std::vector<int>& t) {
      if (oracle::affine_rank(p.image, t) <= 1) img.insert(t);
      if (oracle::affine_rank(g, t) <= 1) pre.insert(t);
    });
    CHECK(img == pre);
    CHECK(pre.size() == 49);
  }
  SUBCASE("random sets, exhaustive certificate") {
    Rng rng(13);
    for (int t = 0; t < 6; ++t) {
      const int m = 3 + t % 2;
      const int d = 2;
      const auto s = oracle::random_points(rng, 12, m, 2);
      const auto p = generic_projection(s, d, static_cast<std::uint64_t>(t));
      oracle::subsets(12, d + 1, [&](const std::vector<int>& idx) {
        CHECK((oracle::affine_rank(p.image, idx) <= d - 1) == (oracle::affine_rank(s, idx) <= d - 1));
      });
    }
  }
  CHECK_THROWS_AS(generic_projection(grid(2, 2), 3, 1), PreconditionError);
}
