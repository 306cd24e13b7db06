// genpos: command line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 a result failed verification or
// a certified construction ran out of budget.

#include "genpos/arrangement.hpp"
#include "genpos/census.hpp"
#include "genpos/error.hpp"
#include "genpos/experiment.hpp"
#include "genpos/halesjewett.hpp"
#include "genpos/hyperplane_independence.hpp"
#include "genpos/io.hpp"
#include "genpos/pipelines.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace genpos;
using genpos::io::json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  bool verify = false;
  std::string out;
  int jobs = 1;
};

class Output {
 public:
  explicit Output(const std::string& path, bool append = false) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
      if (!*file_) throw PreconditionError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return in;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

PointSet load_points(const std::string& path) {
  auto in = open_input(path);
  return io::read_points_csv(in);
}

// Hyperplanes from JSON, or the dual arrangement of a points CSV.
std::vector<Hyperplane> load_hyperplanes(const std::string& path, std::uint64_t seed) {
  if (ends_with(path, ".csv")) return dual_arrangement(load_points(path), seed);
  auto in = open_input(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  return io::hyperplanes_from_json(j.is_object() && j.contains("hyperplanes") ? j["hyperplanes"] : j);
}

void verify(const Globals& g, bool ok, const std::string& what) {
  if (g.verify && !ok) throw VerificationError(what);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact general-position, census and arrangement toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--verify", g.verify, "Re-check results with independent checkers");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads for experiments")->check(CLI::PositiveNumber);
  app.fallthrough();

  // generate
  auto* gen = app.add_subcommand("generate", "Write a seeded dataset (points CSV or hyperplanes JSON)");
  std::string gen_family;
  int gen_n = 0;
  int gen_d = 2;
  int gen_k = 3;
  gen->add_option("family", gen_family, "grid, random_rational, projected_grid, parallel, simplex, dual_of_points")
      ->required();
  gen->add_option("-n", gen_n, "Number of points or hyperplanes")->required();
  gen->add_option("-d", gen_d, "Ambient dimension")->capture_default_str();
  gen->add_option("-k", gen_k, "Grid side for projected_grid")->capture_default_str();

  // census
  auto* cen = app.add_subcommand("census", "Rich-flat profile and tuple types of a point set");
  std::string cen_in;
  std::string cen_gamma = "1/2";
  bool cen_json = false;
  cen->add_option("points", cen_in, "Points CSV")->required();
  cen->add_option("--gamma", cen_gamma, "Degeneracy threshold in (0,1)")->capture_default_str();
  cen->add_flag("--json", cen_json, "Emit the full census as JSON");

  // arrange
  auto* arr = app.add_subcommand("arrange", "Enumerate the cells of an arrangement");
  std::string arr_in;
  bool arr_json = false;
  arr->add_option("input", arr_in, "Hyperplanes JSON, or points CSV (dual arrangement)")->required();
  arr->add_flag("--json", arr_json, "Emit hyperplanes and all cells as JSON");

  // independent
  auto* ind = app.add_subcommand("independent", "Randomized independent hyperplane set");
  std::string ind_in;
  std::string ind_log;
  ind->add_option("input", ind_in, "Hyperplanes JSON, or points CSV")->required();
  ind->add_option("--log", ind_log, "Append a report row to this CSV log");

  // color
  auto* col = app.add_subcommand("color", "Color hyperplanes so that no cell is monochromatic");
  std::string col_in;
  bool col_sequential = false;
  col->add_option("input", col_in, "Hyperplanes JSON, or points CSV")->required();
  col->add_flag("--sequential", col_sequential, "Use first-fit instead of iterated maximal independent sets");

  // genpos
  auto* gp = app.add_subcommand("genpos", "Large general-position subset by the deletion method");
  std::string gp_in;
  bool gp_exact = false;
  gp->add_option("points", gp_in, "Points CSV")->required();
  gp->add_flag("--exact", gp_exact, "Exact maximum by branch and bound (at most 24 points)");

  // ramsey
  auto* ram = app.add_subcommand("ramsey", "q points in general position or q points on a hyperplane");
  std::string ram_in;
  int ram_q = 4;
  ram->add_option("points", ram_in, "Points CSV")->required();
  ram->add_option("-q", ram_q, "Target size")->capture_default_str();

  // hj
  auto* hj = app.add_subcommand("hj", "Combinatorial lines of [k]^m");
  hj->require_subcommand(1);
  int hj_k = 3;
  int hj_m = 2;
  int hj_d = 2;
  std::uint64_t hj_budget = 5'000'000;
  auto* hj_lines = hj->add_subcommand("lines", "List every combinatorial line");
  hj_lines->add_option("k", hj_k)->required();
  hj_lines->add_option("m", hj_m)->required();
  auto* hj_free = hj->add_subcommand("linefree", "Largest line-free subset");
  hj_free->add_option("k", hj_k)->required();
  hj_free->add_option("m", hj_m)->required();
  hj_free->add_option("--budget", hj_budget, "Search node budget")->capture_default_str();
  auto* hj_proj = hj->add_subcommand("project", "Generic projection of the grid [k]^m to R^d");
  hj_proj->add_option("k", hj_k)->required();
  hj_proj->add_option("m", hj_m)->required();
  hj_proj->add_option("d", hj_d)->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a batch experiment from a config file");
  std::string exp_cfg;
  exp->add_option("config", exp_cfg, "key = value config file")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "Log-log trend fit of one metric from an experiment CSV");
  std::string fit_in;
  std::string fit_metric;
  std::string fit_model = "power";
  fit->add_option("records", fit_in, "Experiment CSV")->required();
  fit->add_option("--metric", fit_metric, "Metric name")->required();
  fit->add_option("--model", fit_model, "power or power_log")
      ->check(CLI::IsMember({"power", "power_log"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const Family f = parse_family(gen_family);
      Output out(g.out);
      if (is_point_family(f)) {
        io::write_points_csv(out.stream(), generate_points(f, gen_n, gen_d, g.seed, {gen_k}));
      } else {
        print(out.stream(), io::to_json(std::span<const Hyperplane>(generate_hyperplanes(f, gen_n, gen_d, g.seed, {gen_k}))));
      }
    } else if (*cen) {
      const auto set = load_points(cen_in);
      const auto c = census(set, parse_rat(cen_gamma));
      verify(g, cohyperplanar_hypergraph(set).n_edges() == c.total_tuples, "tuple count disagrees with direct scan");
      Output out(g.out);
      if (cen_json) {
        print(out.stream(), io::to_json(c));
      } else {
        auto exact = [](const Profile& p, int k) {
          const auto it = p.find(k);
          return it == p.end() ? std::int64_t{0} : it->second;
        };
        int top = 0;
        if (!c.hyperplane_rich.empty()) top = c.hyperplane_rich.rbegin()->first;
        if (!c.subflat_rich.empty()) top = std::max(top, c.subflat_rich.rbegin()->first);
        out.stream() << "k,h_k,s_k\n";
        for (int k = 1; k <= top; ++k) {
          const auto hk = exact(c.hyperplane_rich, k);
          const auto sk = exact(c.subflat_rich, k);
          if (hk || sk) out.stream() << k << ',' << hk << ',' << sk << '\n';
        }
        out.stream() << "tuples," << c.total_tuples << '\n';
        if (c.types) {
          out.stream() << "type1," << c.types->type1 << "\ntype2," << c.types->type2 << "\ntype3," << c.types->type3
                       << '\n';
        }
      }
    } else if (*arr) {
      const auto hs = load_hyperplanes(arr_in, g.seed);
      const auto a = enumerate_cells(hs);
      Output out(g.out);
      if (arr_json) {
        print(out.stream(), io::to_json(a));
      } else {
        int bounded = 0;
        int simplicial = 0;
        for (const auto& c : a.cells()) {
          bounded += c.bounded;
          simplicial += c.simplicial;
        }
        out.stream() << "hyperplanes," << a.size() << "\ncells," << a.cells().size() << "\nbounded," << bounded
                     << "\nsimplicial," << simplicial << "\nsimple," << (is_simple_arrangement(hs) ? 1 : 0) << '\n';
      }
    } else if (*ind) {
      const auto a = enumerate_cells(load_hyperplanes(ind_in, g.seed));
      BetaRunReport rep;
      const auto set = randomized_beta_procedure(a, g.seed, &rep);
      verify(g, is_independent_set(a, set), "returned set is not independent");
      Output out(g.out);
      print(out.stream(), json{{"independent", set}, {"size", set.size()}, {"p_used", rep.p_used},
                               {"sampled", rep.sampled}, {"cleaned", rep.cleaned}, {"pruned", rep.pruned}});
      if (!ind_log.empty()) {
        const bool fresh = !std::ifstream(ind_log).good();
        Output log(ind_log, true);
        if (fresh) log.stream() << io::beta_report_header() << '\n';
        log.stream() << io::beta_report_row(rep) << '\n';
      }
    } else if (*col) {
      const auto a = enumerate_cells(load_hyperplanes(col_in, g.seed));
      const auto c = col_sequential ? sequential_coloring(a) : greedy_coloring(a);
      verify(g, is_proper_coloring(a, c.color), "coloring has a monochromatic cell");
      Output out(g.out);
      print(out.stream(), json{{"colors", c.n_colors}, {"color", c.color}});
    } else if (*gp) {
      const auto set = load_points(gp_in);
      Output out(g.out);
      if (gp_exact) {
        const auto r = exact_alpha(set);
        verify(g, is_general_position(set.subset(r.witness)), "witness is not in general position");
        print(out.stream(), json{{"alpha", r.size}, {"indices", r.witness}});
      } else {
        const auto r = large_genpos_subset(set, g.seed);
        print(out.stream(), json{{"indices", r.indices},
                                 {"size", r.indices.size()},
                                 {"tuples", r.tuples},
                                 {"bound", r.bound},
                                 {"target", r.target},
                                 {"attempts", r.attempts}});
      }
    } else if (*ram) {
      const auto set = load_points(ram_in);
      const auto w = genpos_or_hyperplane(set, ram_q, g.seed);
      verify(g, !w.guaranteed || validate_witness(set, ram_q, w), "witness rejected by the validator");
      Output out(g.out);
      print(out.stream(), io::to_json(w));
    } else if (*hj) {
      Output out(g.out);
      if (*hj_lines) {
        const auto lines = enumerate_lines(hj_k, hj_m);
        json arr = json::array();
        for (const auto& t : lines) arr.push_back(expand_template(t, hj_k));
        print(out.stream(), json{{"count", lines.size()}, {"lines", arr}});
      } else if (*hj_free) {
        const auto r = max_linefree_subset(hj_k, hj_m, hj_budget);
        verify(g, is_line_free(r.witness, hj_k, hj_m), "witness contains a combinatorial line");
        print(out.stream(), json{{"size", r.size}, {"exact", r.exact}, {"witness", r.witness}});
      } else {
        io::write_points_csv(out.stream(), build_projected_grid(hj_k, hj_m, hj_d, g.seed));
      }
    } else if (*exp) {
      auto in = open_input(exp_cfg);
      auto cfg = parse_config(in);
      cfg.verify = g.verify;
      const auto records = run_experiment(cfg, g.jobs);
      Output out(g.out);
      write_records_csv(out.stream(), records, cfg.timing);
      int failed = 0;
      bool unverified = false;
      for (const auto& r : records) {
        if (r.error) {
          ++failed;
          std::cerr << "run n=" << r.n << " d=" << r.d << " seed=" << r.seed << ": " << *r.error << '\n';
        }
        unverified |= r.verification_failed;
      }
      if (unverified) return 3;
      if (failed) std::cerr << failed << " of " << records.size() << " runs failed\n";
    } else if (*fit) {
      auto in = open_input(fit_in);
      const auto pts = read_trend_csv(in, fit_metric);
      const auto r = fit_trend(pts, fit_model == "power" ? TrendModel::power : TrendModel::power_log);
      Output out(g.out);
      print(out.stream(), json{{"metric", fit_metric},
                               {"model", fit_model},
                               {"points", pts.size()},
                               {"exponent", r.exponent},
                               {"constant", r.constant},
                               {"residual", r.residual}});
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
