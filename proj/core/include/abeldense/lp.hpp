#pragma once

#include "abeldense/rational.hpp"

namespace abeldense {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RationalVector x;
  Rational value;
};

// maximize c.x subject to A x = b, x >= 0. Exact two-phase tableau simplex
// with Bland's rule, so it terminates on degenerate problems.
LpResult solve_lp(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace abeldense
