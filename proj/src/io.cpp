#include "genpos/io.hpp"

#include "genpos/error.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace genpos::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json profile_json(const Profile& p) {
  json out = json::array();
  for (const auto& [k, count] : p) out.push_back({k, count});
  return out;
}

}  // namespace

void write_points_csv(std::ostream& out, const PointSet& set) {
  for (int i = 0; i < set.dim(); ++i) out << (i ? "," : "") << 'x' << (i + 1);
  out << '\n';
  for (const auto& p : set.points()) {
    for (Eigen::Index i = 0; i < p.size(); ++i) out << (i ? "," : "") << to_string(p(i));
    out << '\n';
  }
}

PointSet read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw PreconditionError("points CSV: missing header");
  const auto header = split(trim(line), ',');
  const int d = static_cast<int>(header.size());
  for (int i = 0; i < d; ++i) {
    if (trim(header[static_cast<std::size_t>(i)]) != "x" + std::to_string(i + 1)) {
      throw PreconditionError("points CSV: header must be x1,...,xd");
    }
  }
  std::vector<Point> pts;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (static_cast<int>(cells.size()) != d) {
      throw PreconditionError("points CSV line " + std::to_string(lineno) + ": expected " + std::to_string(d) +
                              " fields");
    }
    Point p(d);
    for (int i = 0; i < d; ++i) {
      try {
        p(i) = parse_rat(trim(cells[static_cast<std::size_t>(i)]));
      } catch (const std::invalid_argument& e) {
        throw PreconditionError("points CSV line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    pts.push_back(std::move(p));
  }
  return PointSet(d, std::move(pts));
}

json rat_to_json(const Rat& x) {
  if (denominator(x) == 1) {
    const Int num = numerator(x);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(num);
    }
  }
  return to_string(x);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw PreconditionError("expected an integer or a \"p/q\" string");
}

json to_json(const Hyperplane& h) {
  json normal = json::array();
  for (Eigen::Index i = 0; i < h.normal().size(); ++i) normal.push_back(rat_to_json(h.normal()(i)));
  return {{"normal", normal}, {"offset", rat_to_json(h.offset())}};
}

Hyperplane hyperplane_from_json(const json& j) {
  if (!j.is_object() || !j.contains("normal") || !j.contains("offset") || !j["normal"].is_array()) {
    throw PreconditionError("hyperplane JSON needs \"normal\" (array) and \"offset\"");
  }
  VectorXq normal(static_cast<Eigen::Index>(j["normal"].size()));
  for (std::size_t i = 0; i < j["normal"].size(); ++i) normal(static_cast<Eigen::Index>(i)) = rat_from_json(j["normal"][i]);
  return Hyperplane(std::move(normal), rat_from_json(j["offset"]));
}

json to_json(std::span<const Hyperplane> hs) {
  json out = json::array();
  for (const auto& h : hs) out.push_back(to_json(h));
  return out;
}

std::vector<Hyperplane> hyperplanes_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of hyperplanes");
  std::vector<Hyperplane> out;
  for (const auto& e : j) out.push_back(hyperplane_from_json(e));
  return out;
}

json to_json(const CensusProfile& c) {
  json out{{"n", c.n},
           {"d", c.d},
           {"gamma", to_string(c.gamma)},
           {"total_tuples", c.total_tuples},
           {"hyperplane_rich", profile_json(c.hyperplane_rich)},
           {"subflat_rich", profile_json(c.subflat_rich)}};
  json pencils = json::array();
  for (const auto& p : c.pencils) pencils.push_back({{"flat_points", p.flat_points}, {"counts", profile_json(p.counts)}});
  out["pencils"] = std::move(pencils);
  if (c.types) {
    out["types"] = {{"type1", c.types->type1}, {"type2", c.types->type2}, {"type3", c.types->type3},
                    {"total", c.types->total}};
  }
  return out;
}

json to_json(const Arrangement& a) {
  json cells = json::array();
  for (const auto& c : a.cells()) {
    cells.push_back({{"sign_vector", c.sign_vector},
                     {"facet_support", c.facet_support},
                     {"bounded", c.bounded},
                     {"simplicial", c.simplicial}});
  }
  return {{"dim", a.dim()}, {"hyperplanes", to_json(a.hyperplanes())}, {"cells", std::move(cells)}};
}

json to_json(const DichotomyWitness& w) {
  json out{{"kind", w.kind == WitnessKind::general_position ? "general_position" : "cohyperplanar"},
           {"indices", w.indices},
           {"guaranteed", w.guaranteed}};
  out["hyperplane"] = w.hyperplane ? to_json(*w.hyperplane) : json(nullptr);
  return out;
}

std::string beta_report_header() { return "seed,n,d,p,sampled,cleaned,independent,pruned,final,cleanup_removals"; }

std::string beta_report_row(const BetaRunReport& r) {
  std::ostringstream s;
  s.precision(17);
  s << r.seed << ',' << r.n << ',' << r.d << ',' << r.p_used << ',' << r.sampled << ',' << r.cleaned << ','
    << r.independent << ',' << r.pruned << ',' << r.final_size << ',' << r.cleanup_removals;
  return s.str();
}

}  // namespace genpos::io
