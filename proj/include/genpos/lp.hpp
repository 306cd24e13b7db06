#pragma once

// Exact linear programming over rationals. Sized for arrangements at desk
// scale (tens of constraints, a handful of variables): a dense two-phase
// tableau simplex with Bland's rule, so it always terminates.

#include "genpos/rational.hpp"

namespace genpos::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rat value;    // objective at x when optimal
  VectorXq x;   // an optimal vertex when optimal
};

/// max c.x subject to a x <= b, x free.
Result maximize(const VectorXq& c, const MatrixXq& a, const VectorXq& b);

}  // namespace genpos::lp
