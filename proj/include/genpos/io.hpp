#pragma once

// Text formats: point sets as CSV, everything structured as JSON.

#include "genpos/arrangement.hpp"
#include "genpos/census.hpp"
#include "genpos/geometry.hpp"
#include "genpos/hyperplane_independence.hpp"
#include "genpos/pipelines.hpp"

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

namespace genpos::io {

using json = nlohmann::ordered_json;

/// Header "x1,...,xd" then one row per point; "p" or "p/q" entries.
void write_points_csv(std::ostream& out, const PointSet& set);
/// Throws PreconditionError on malformed input, with the line number.
PointSet read_points_csv(std::istream& in);

/// Integers that fit in 64 bits become JSON numbers, anything else a "p/q"
/// string. Parsing accepts both.
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const json& j);
json to_json(std::span<const Hyperplane> hs);
std::vector<Hyperplane> hyperplanes_from_json(const json& j);

json to_json(const CensusProfile& c);
json to_json(const Arrangement& a);
json to_json(const DichotomyWitness& w);

/// Beta procedure log: header line, then one row per report.
std::string beta_report_header();
std::string beta_report_row(const BetaRunReport& r);

}  // namespace genpos::io
