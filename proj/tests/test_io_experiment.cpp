#include "oracles.hpp"

#include "genpos/error.hpp"
#include "genpos/experiment.hpp"
#include "genpos/halesjewett.hpp"
#include "genpos/io.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace genpos;

namespace {

Point pt(std::initializer_list<Rat> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) p(i++) = x;
  return p;
}

std::string csv_of(const std::vector<ExperimentRecord>& r, bool timing = false) {
  std::ostringstream s;
  write_records_csv(s, r, timing);
  return s.str();
}

ExperimentConfig config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_CASE("points CSV round trip") {
  Rng rng(3);
  const auto s = oracle::random_points(rng, 12, 3, 50, 9);
  std::stringstream io;
  io::write_points_csv(io, s);
  const auto back = io::read_points_csv(io);
  CHECK(back.points() == s.points());

  std::istringstream text("x1,x2\n1,-2/4\n3/1,7\n");
  const auto p = io::read_points_csv(text);
  CHECK(p[0] == pt({1, Rat(-1, 2)}));
  std::ostringstream out;
  io::write_points_csv(out, p);
  CHECK(out.str() == "x1,x2\n1,-1/2\n3,7\n");

  std::istringstream bad_header("a,b\n1,2\n");
  CHECK_THROWS_AS(io::read_points_csv(bad_header), PreconditionError);
  std::istringstream bad_row("x1,x2\n1\n");
  CHECK_THROWS_AS(io::read_points_csv(bad_row), PreconditionError);
  std::istringstream bad_value("x1,x2\n1,q\n");
  CHECK_THROWS_AS(io::read_points_csv(bad_value), PreconditionError);
  std::istringstream repeat("x1,x2\n1,2\n1,2\n");
  CHECK_THROWS_AS(io::read_points_csv(repeat), PreconditionError);
}

TEST_CASE("hyperplane JSON round trip") {
  const Hyperplane h(pt({Rat(1, 3), -1}), Rat(2, 5));
  const auto j = io::to_json(h);
  CHECK(j.dump() == R"({"normal":[5,-15],"offset":6})");
  CHECK(io::hyperplane_from_json(j) == h);
  const auto parsed = io::hyperplane_from_json(io::json::parse(R"({"normal":["1/2", 1], "offset": "-3/4"})"));
  CHECK(parsed == Hyperplane(pt({2, 4}), -3));
  CHECK(io::rat_to_json(Rat(Int("100000000000000000000"))) == "100000000000000000000");
  CHECK_THROWS_AS(io::hyperplane_from_json(io::json::parse(R"({"normal":[0,0],"offset":1})")), PreconditionError);
  CHECK_THROWS_AS(io::hyperplane_from_json(io::json::parse(R"({"offset":1})")), PreconditionError);
  CHECK_THROWS_AS(io::rat_from_json(io::json(1.5)), PreconditionError);
}

TEST_CASE("structured JSON outputs") {
  const auto a = enumerate_cells(std::vector<Hyperplane>{Hyperplane(pt({1, 0}), 0), Hyperplane(pt({0, 1}), 0)});
  const auto j = io::to_json(a);
  CHECK(j["cells"].size() == 4);
  CHECK(j["hyperplanes"].size() == 2);
  CHECK(io::hyperplanes_from_json(j["hyperplanes"]) == a.hyperplanes());
  const auto c = io::to_json(census(grid_points(2, 3), Rat(3, 4)));
  CHECK(c["types"]["type2"] == 12);
  CHECK(c["gamma"] == "3/4");
  const auto w = io::to_json(genpos_or_hyperplane(grid_points(3, 2), 3));
  CHECK(w["indices"].size() >= 3);
  CHECK(io::beta_report_header().rfind("seed,n,d,p,", 0) == 0);
}

TEST_CASE("datasets") {
  CHECK(generate_points(Family::grid, 16, 2, 1).size() == 16);
  CHECK_THROWS_AS(generate_points(Family::grid, 10, 2, 1), PreconditionError);
  CHECK(generate_points(Family::projected_grid, 27, 2, 1, {3}).size() == 27);
  CHECK_THROWS_AS(generate_points(Family::parallel, 4, 2, 1), PreconditionError);
  const auto r1 = generate_points(Family::random_rational, 10, 3, 5);
  const auto r2 = generate_points(Family::random_rational, 10, 3, 5);
  CHECK(r1.points() == r2.points());
  const auto par = generate_hyperplanes(Family::parallel, 4, 2, 1);
  CHECK(par.size() == 4);
  const auto simp = generate_hyperplanes(Family::simplex, 6, 3, 2);
  CHECK(oracle::simple(simp));
  const auto dual = generate_hyperplanes(Family::dual_of_points, 6, 2, 2);
  CHECK(oracle::simple(dual));
}

TEST_CASE("config parsing") {
  const auto cfg = config("# census of grids\nfamily = grid\nop = census\nsizes = 9, 16\ndims = 2\nseeds = 1..3, 7\n");
  CHECK(cfg.family == Family::grid);
  CHECK(cfg.sizes == std::vector<int>{9, 16});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3, 7});
  CHECK(cfg.gamma == Rat(1, 2));
  CHECK_THROWS_AS(config("family = grid\nop = census\nsizes = 9\ndims = 2\nseeds =\n"), PreconditionError);
  CHECK_THROWS_AS(config("family = grid\nop = census\nsizes = 9\ndims = 2\nseeds = 1\nsead = 2\n"), PreconditionError);
  CHECK_THROWS_AS(config("family = grid\nfamily = grid\nop = census\nsizes = 9\ndims = 2\nseeds = 1\n"),
                  PreconditionError);
  CHECK_THROWS_AS(config("family = cubes\nop = census\nsizes = 9\ndims = 2\nseeds = 1\n"), PreconditionError);
  CHECK_THROWS_AS(config("family = grid\nop = sort\nsizes = 9\ndims = 2\nseeds = 1\n"), PreconditionError);
  CHECK_THROWS_AS(config("family = grid\nop = census\nsizes = 9\ndims = 2\nseeds = 1\ngamma = 3/2\n"),
                  PreconditionError);
  CHECK_THROWS_AS(config("family = grid\nop = census\nsizes = 9\ndims = 2\nseeds = 5..2\n"), PreconditionError);
  CHECK_THROWS_AS(config("op = census\nsizes = 9\ndims = 2\nseeds = 1\n"), PreconditionError);

  ExperimentConfig empty;
  empty.sizes = {9};
  empty.dims = {2};
  CHECK_THROWS_AS(run_experiment(empty), PreconditionError);
}

TEST_CASE("experiments") {
  SUBCASE("grid census") {
    auto cfg = config("family = grid\nop = census\nsizes = 9, 16, 25\ndims = 2\nseeds = 1\n");
    cfg.verify = true;
    const auto r = run_experiment(cfg);
    REQUIRE(r.size() == 3);
    for (const auto& rec : r) {
      CHECK_FALSE(rec.error);
      const auto tuples = std::find_if(rec.metrics.begin(), rec.metrics.end(), [](const auto& m) { return m.first == "tuples"; });
      REQUIRE(tuples != rec.metrics.end());
      CHECK(std::stoll(tuples->second) == oracle::cohyperplanar_tuples(generate_points(Family::grid, rec.n, 2, 1)));
    }
  }
  SUBCASE("parallel lines, independent") {
    auto cfg = config("family = parallel\nop = independent\nsizes = 4\ndims = 2\nseeds = 1..5\n");
    cfg.verify = true;
    for (const auto& rec : run_experiment(cfg)) {
      CHECK_FALSE(rec.error);
      const auto fin = std::find_if(rec.metrics.begin(), rec.metrics.end(), [](const auto& m) { return m.first == "final"; });
      REQUIRE(fin != rec.metrics.end());
      CHECK(std::stoi(fin->second) <= 1);
    }
  }
  SUBCASE("failures stay inside their run") {
    const auto cfg = config("family = grid\nop = census\nsizes = 9, 10, 16\ndims = 2\nseeds = 1\n");
    const auto r = run_experiment(cfg);
    CHECK_FALSE(r[0].error);
    CHECK(r[1].error);
    CHECK_FALSE(r[2].error);
    CHECK(csv_of(r).find("grid,10,2,1,census,error,") != std::string::npos);
  }
  SUBCASE("output is reproducible and independent of the worker count") {
    const auto cfg =
        config("family = random_rational\nop = genpos\nsizes = 8, 10\ndims = 2, 3\nseeds = 1..3\ntiming = true\n");
    const auto a = csv_of(run_experiment(cfg, 1));
    const auto b = csv_of(run_experiment(cfg, 3));
    CHECK(a == b);
    CHECK(a.find("wall_ms") == std::string::npos);
    CHECK(csv_of(run_experiment(cfg, 2), true).find("wall_ms") != std::string::npos);
  }
  SUBCASE("every operation runs") {
    for (const char* text : {"family = grid\nop = alpha\nsizes = 9\ndims = 2\nseeds = 1\n",
                             "family = grid\nop = ramsey\nsizes = 9\ndims = 2\nseeds = 1\nq = 3\n",
                             "family = simplex\nop = arrange\nsizes = 5\ndims = 2\nseeds = 1\n",
                             "family = dual_of_points\nop = color\nsizes = 6\ndims = 2\nseeds = 1\n",
                             "family = projected_grid\nop = census\nsizes = 27\ndims = 2\nseeds = 1\n"}) {
      auto cfg = config(text);
      cfg.verify = true;
      for (const auto& rec : run_experiment(cfg)) CHECK_MESSAGE(!rec.error, text);
    }
  }
}

TEST_CASE("trend fits") {
  std::vector<std::pair<double, double>> sq;
  std::vector<std::pair<double, double>> nlog;
  std::vector<std::pair<double, double>> flat;
  for (double n : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    sq.emplace_back(n, std::sqrt(n));
    nlog.emplace_back(n, 2.0 * std::pow(n * std::log(n), 1.0 / 3.0));
    flat.emplace_back(n, 7.0);
  }
  const auto a = fit_trend(sq, TrendModel::power);
  CHECK(a.exponent == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(a.constant == doctest::Approx(1.0).epsilon(1e-9));
  const auto b = fit_trend(nlog, TrendModel::power_log);
  CHECK(b.exponent == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(b.constant == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(b.residual < 1e-9);
  CHECK(std::abs(fit_trend(flat, TrendModel::power).exponent) < 1e-12);
  CHECK_THROWS_AS(fit_trend(std::span(sq).first(2), TrendModel::power), PreconditionError);
  std::vector<std::pair<double, double>> zero{{1, 1}, {2, 0}, {3, 1}};
  CHECK_THROWS_AS(fit_trend(zero, TrendModel::power), PreconditionError);

  const auto cfg = config("family = grid\nop = census\nsizes = 9, 16, 25\ndims = 2\nseeds = 1\n");
  std::stringstream csv;
  write_records_csv(csv, run_experiment(cfg), false);
  const auto pts = read_trend_csv(csv, "tuples");
  CHECK(pts.size() == 3);
  CHECK(pts == trend_points(run_experiment(cfg), "tuples"));
}
