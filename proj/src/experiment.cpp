#include "genpos/experiment.hpp"

#include "genpos/arrangement.hpp"
#include "genpos/census.hpp"
#include "genpos/combinatorics.hpp"
#include "genpos/error.hpp"
#include "genpos/halesjewett.hpp"
#include "genpos/hyperplane_independence.hpp"
#include "genpos/pipelines.hpp"
#include "genpos/random.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace genpos {

namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m{{"grid", Family::grid},
                                               {"random_rational", Family::random_rational},
                                               {"parallel", Family::parallel},
                                               {"simplex", Family::simplex},
                                               {"projected_grid", Family::projected_grid},
                                               {"dual_of_points", Family::dual_of_points}};
  return m;
}

const std::map<std::string, Operation>& operation_names() {
  static const std::map<std::string, Operation> m{{"census", Operation::census}, {"independent", Operation::independent},
                                                  {"color", Operation::color},   {"genpos", Operation::genpos},
                                                  {"alpha", Operation::alpha},   {"arrange", Operation::arrange},
                                                  {"ramsey", Operation::ramsey}};
  return m;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Smallest r with r^e = n, if any.
std::optional<int> exact_root(int n, int e) {
  for (int r = 1;; ++r) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= r;
    if (p == n) return r;
    if (p > n) return std::nullopt;
  }
}

std::optional<int> exact_log(int n, int base) {
  std::int64_t p = 1;
  for (int m = 0; p <= n; ++m, p *= base) {
    if (p == n) return m;
  }
  return std::nullopt;
}

PointSet random_points(int n, int d, Rng& rng, std::int64_t range, std::int64_t max_den) {
  std::set<std::vector<Rat>> seen;
  std::vector<Point> pts;
  for (int tries = 0; static_cast<int>(pts.size()) < n; ++tries) {
    if (tries > 1000 * n) throw PreconditionError("random points: too many collisions for n = " + std::to_string(n));
    Point p(d);
    std::vector<Rat> key;
    for (int i = 0; i < d; ++i) {
      p(i) = uniform_rat(rng, range, uniform_int(rng, 1, max_den));
      key.push_back(p(i));
    }
    if (seen.insert(key).second) pts.push_back(std::move(p));
  }
  return PointSet(d, std::move(pts));
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& v) {
  std::vector<std::uint64_t> out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto dots = item.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        out.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const auto lo = std::stoull(item.substr(0, dots));
        const auto hi = std::stoull(item.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument(item);
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw PreconditionError("config: bad list entry '" + item + "'");
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& v) {
  std::vector<int> out;
  for (auto x : parse_seed_list(v)) {
    if (x > 1'000'000) throw PreconditionError("config: list entry too large");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

using Metrics = std::vector<std::pair<std::string, std::string>>;

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

PointSet points_for(const ExperimentConfig& cfg, int n, int d, std::uint64_t seed) {
  if (!is_point_family(cfg.family)) {
    throw PreconditionError("operation " + to_string(cfg.operation) + " needs a point family");
  }
  return generate_points(cfg.family, n, d, seed, {cfg.k});
}

Metrics run_one(const ExperimentConfig& cfg, int n, int d, std::uint64_t seed) {
  Metrics m;
  auto put = [&](const std::string& k, auto v) {
    if constexpr (std::is_same_v<decltype(v), double>) {
      m.emplace_back(k, fmt(v));
    } else if constexpr (std::is_same_v<decltype(v), std::string>) {
      m.emplace_back(k, v);
    } else {
      m.emplace_back(k, std::to_string(v));
    }
  };
  switch (cfg.operation) {
    case Operation::census: {
      const auto set = points_for(cfg, n, d, seed);
      const auto c = census(set, cfg.gamma);
      put("tuples", c.total_tuples);
      std::int64_t planes = 0;
      int richest = 0;
      for (const auto& [k, count] : c.hyperplane_rich) {
        planes += count;
        richest = std::max(richest, k);
      }
      put("hyperplanes", planes);
      put("max_rich", richest);
      if (c.types) {
        put("type1", c.types->type1);
        put("type2", c.types->type2);
        put("type3", c.types->type3);
      }
      if (cfg.verify) {
        check(cohyperplanar_hypergraph(set).n_edges() == c.total_tuples, "census tuple count disagrees with scan");
      }
      break;
    }
    case Operation::genpos: {
      const auto set = points_for(cfg, n, d, seed);
      const auto r = large_genpos_subset(set, seed);
      put("tuples", r.tuples);
      put("bound", r.bound);
      put("target", r.target);
      put("size", static_cast<std::int64_t>(r.indices.size()));
      put("attempts", r.attempts);
      if (cfg.verify) check(is_general_position(set.subset(r.indices)), "genpos subset is not in general position");
      break;
    }
    case Operation::alpha: {
      const auto set = points_for(cfg, n, d, seed);
      const auto r = exact_alpha(set);
      put("alpha", r.size);
      if (cfg.verify) check(is_general_position(set.subset(r.witness)), "alpha witness is not in general position");
      break;
    }
    case Operation::ramsey: {
      const auto set = points_for(cfg, n, d, seed);
      const auto w = genpos_or_hyperplane(set, cfg.q, seed);
      put("kind", std::string(w.kind == WitnessKind::general_position ? "general_position" : "cohyperplanar"));
      put("size", static_cast<std::int64_t>(w.indices.size()));
      put("guaranteed", static_cast<int>(w.guaranteed));
      if (cfg.verify && w.guaranteed) check(validate_witness(set, cfg.q, w), "dichotomy witness rejected");
      break;
    }
    case Operation::arrange:
    case Operation::independent:
    case Operation::color: {
      const auto hs = generate_hyperplanes(cfg.family, n, d, seed, {cfg.k});
      const auto a = enumerate_cells(hs);
      if (cfg.operation == Operation::arrange) {
        int bounded = 0;
        int simplicial = 0;
        for (const auto& c : a.cells()) {
          bounded += c.bounded;
          simplicial += c.simplicial;
        }
        put("cells", static_cast<std::int64_t>(a.cells().size()));
        put("bounded", bounded);
        put("simplicial", simplicial);
        if (cfg.verify && is_simple_arrangement(hs)) {
          std::uint64_t expect = 0;
          for (int i = 0; i <= d; ++i) expect += binomial(a.size(), i);
          check(a.cells().size() == expect, "cell count differs from the simple-arrangement formula");
        }
      } else if (cfg.operation == Operation::independent) {
        BetaRunReport rep;
        const auto s = randomized_beta_procedure(a, seed, &rep);
        put("p_used", rep.p_used);
        put("sampled", rep.sampled);
        put("cleaned", rep.cleaned);
        put("independent", rep.independent);
        put("pruned", rep.pruned);
        put("final", rep.final_size);
        if (cfg.verify) check(is_independent_set(a, s), "beta procedure returned a dependent set");
      } else {
        const auto col = greedy_coloring(a);
        put("colors", col.n_colors);
        if (cfg.verify) check(is_proper_coloring(a, col.color), "coloring has a monochromatic cell");
      }
      break;
    }
  }
  return m;
}

}  // namespace

Family parse_family(const std::string& name) {
  const auto it = family_names().find(name);
  if (it == family_names().end()) throw PreconditionError("unknown family '" + name + "'");
  return it->second;
}

Operation parse_operation(const std::string& name) {
  const auto it = operation_names().find(name);
  if (it == operation_names().end()) throw PreconditionError("unknown operation '" + name + "'");
  return it->second;
}

std::string to_string(Family f) {
  for (const auto& [name, v] : family_names()) {
    if (v == f) return name;
  }
  return "?";
}

std::string to_string(Operation op) {
  for (const auto& [name, v] : operation_names()) {
    if (v == op) return name;
  }
  return "?";
}

bool is_point_family(Family f) {
  return f == Family::grid || f == Family::random_rational || f == Family::projected_grid;
}

PointSet generate_points(Family f, int n, int d, std::uint64_t seed, const DatasetParams& params) {
  if (n < 1 || d < 1) throw PreconditionError("dataset needs n >= 1 and d >= 1");
  Rng rng(seed);
  switch (f) {
    case Family::grid: {
      const auto k = exact_root(n, d);
      if (!k) throw PreconditionError("grid: n = " + std::to_string(n) + " is not a d-th power");
      return grid_points(*k, d);
    }
    case Family::random_rational:
      return random_points(n, d, rng, 8, 2);
    case Family::projected_grid: {
      const auto m = exact_log(n, params.k);
      if (params.k < 2 || !m || *m < d) {
        throw PreconditionError("projected_grid: n must be k^m with m >= d");
      }
      if (*m == d) return grid_points(params.k, d);
      return build_projected_grid(params.k, *m, d, seed);
    }
    default:
      throw PreconditionError("family " + to_string(f) + " yields hyperplanes, not points");
  }
}

std::vector<Hyperplane> generate_hyperplanes(Family f, int n, int d, std::uint64_t seed, const DatasetParams& params) {
  if (n < 1 || d < 1) throw PreconditionError("dataset needs n >= 1 and d >= 1");
  if (is_point_family(f)) return dual_arrangement(generate_points(f, n, d, seed, params), seed);
  Rng rng(seed);
  switch (f) {
    case Family::parallel: {
      std::vector<Hyperplane> hs;
      for (int i = 1; i <= n; ++i) hs.emplace_back(Point::Unit(d, 0), Rat(i));
      return hs;
    }
    case Family::simplex: {
      if (n < d + 1) throw PreconditionError("simplex: needs n >= d+1");
      std::vector<Hyperplane> hs;
      for (int i = 0; i < d; ++i) hs.emplace_back(Point::Unit(d, i), Rat(0));
      hs.emplace_back(Point::Ones(d), Rat(1));
      for (int tries = 0; static_cast<int>(hs.size()) < n; ++tries) {
        if (tries > 1000 * n) throw BudgetExhausted("simplex: could not draw distinct hyperplanes");
        Point normal(d);
        for (int i = 0; i < d; ++i) normal(i) = uniform_rat(rng, 9);
        if (normal.isZero()) continue;
        Hyperplane h(normal, uniform_rat(rng, 30, 7));
        if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
      }
      return perturb_arrangement(hs, seed);
    }
    case Family::dual_of_points:
      return dual_arrangement(random_points(n, d, rng, 1000, 7), seed);
    default:
      break;
  }
  throw PreconditionError("unknown family");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw PreconditionError("config: sizes is empty");
  if (cfg.dims.empty()) throw PreconditionError("config: dims is empty");
  if (cfg.seeds.empty()) throw PreconditionError("config: seeds is empty");
  for (int n : cfg.sizes) {
    if (n < 1) throw PreconditionError("config: sizes must be positive");
  }
  for (int d : cfg.dims) {
    if (d < 1) throw PreconditionError("config: dims must be positive");
  }
  if (cfg.gamma <= 0 || cfg.gamma >= 1) throw PreconditionError("config: gamma must lie in (0, 1)");
  if (cfg.q < 2) throw PreconditionError("config: q must be at least 2");
  if (cfg.k < 2) throw PreconditionError("config: k must be at least 2");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto where = "config line " + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw PreconditionError(where + "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw PreconditionError(where + "repeated key '" + key + "'");
    try {
      if (key == "family") {
        cfg.family = parse_family(value);
      } else if (key == "op" || key == "operation") {
        cfg.operation = parse_operation(value);
      } else if (key == "sizes") {
        cfg.sizes = parse_int_list(value);
      } else if (key == "dims") {
        cfg.dims = parse_int_list(value);
      } else if (key == "seeds") {
        cfg.seeds = parse_seed_list(value);
      } else if (key == "gamma") {
        cfg.gamma = parse_rat(value);
      } else if (key == "q") {
        cfg.q = std::stoi(value);
      } else if (key == "k") {
        cfg.k = std::stoi(value);
      } else if (key == "timing") {
        if (value != "true" && value != "false") throw PreconditionError("timing must be true or false");
        cfg.timing = value == "true";
      } else {
        throw PreconditionError("unknown key '" + key + "'");
      }
    } catch (const PreconditionError& e) {
      throw PreconditionError(where + e.what());
    } catch (const std::logic_error& e) {
      throw PreconditionError(where + "bad value for '" + key + "'");
    }
  }
  if (!seen.count("family") || !(seen.count("op") || seen.count("operation"))) {
    throw PreconditionError("config: family and op are required");
  }
  validate(cfg);
  return cfg;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, int jobs) {
  validate(cfg);
  std::vector<ExperimentRecord> records;
  for (int n : cfg.sizes) {
    for (int d : cfg.dims) {
      for (auto seed : cfg.seeds) records.push_back({cfg.family, n, d, seed, cfg.operation, {}, {}, false, 0.0});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < records.size();) {
      auto& r = records[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        r.metrics = run_one(cfg, r.n, r.d, r.seed);
      } catch (const VerificationError& e) {
        r.error = std::string("verification: ") + e.what();
        r.verification_failed = true;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records, bool with_timing,
                       bool header) {
  if (header) out << "family,n,d,seed,op,metric,value\n";
  for (const auto& r : records) {
    const auto prefix = to_string(r.family) + ',' + std::to_string(r.n) + ',' + std::to_string(r.d) + ',' +
                        std::to_string(r.seed) + ',' + to_string(r.operation) + ',';
    for (const auto& [k, v] : r.metrics) out << prefix << k << ',' << csv_field(v) << '\n';
    if (r.error) out << prefix << "error," << csv_field(*r.error) << '\n';
    if (with_timing) out << prefix << "wall_ms," << fmt(r.wall_ms) << '\n';
  }
}

TrendFit fit_trend(std::span<const std::pair<double, double>> points, TrendModel model) {
  if (points.size() < 3) throw PreconditionError("fit_trend needs at least 3 points");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, y] : points) {
    if (!(y > 0)) throw PreconditionError("fit_trend needs positive measurements");
    const double base = model == TrendModel::power ? n : n * std::log(n);
    if (!(base > 0) || (model == TrendModel::power_log && n < 2)) {
      throw PreconditionError("fit_trend: n out of range for the model");
    }
    xs.push_back(std::log(base));
    ys.push_back(std::log(y));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / k;
    my += ys[i] / k;
  }
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw PreconditionError("fit_trend needs at least two distinct n");
  TrendFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.constant = std::exp(intercept);
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + fit.exponent * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

std::vector<std::pair<double, double>> trend_points(const std::vector<ExperimentRecord>& records,
                                                    const std::string& metric) {
  std::vector<std::pair<double, double>> out;
  for (const auto& r : records) {
    if (r.error) continue;
    for (const auto& [k, v] : r.metrics) {
      if (k == metric) out.emplace_back(r.n, std::stod(v));
    }
  }
  return out;
}

std::vector<std::pair<double, double>> read_trend_csv(std::istream& in, const std::string& metric) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "family,n,d,seed,op,metric,value") {
    throw PreconditionError("records CSV: unexpected header");
  }
  std::vector<std::pair<double, double>> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = csv_split(trim(line));
    if (f.size() != 7) throw PreconditionError("records CSV line " + std::to_string(lineno) + ": expected 7 fields");
    if (f[5] != metric) continue;
    try {
      const double v = f[6].find('/') != std::string::npos ? to_double(parse_rat(f[6])) : std::stod(f[6]);
      out.emplace_back(std::stod(f[1]), v);
    } catch (const std::logic_error&) {
      throw PreconditionError("records CSV line " + std::to_string(lineno) + ": value is not numeric");
    }
  }
  return out;
}

}  // namespace genpos
