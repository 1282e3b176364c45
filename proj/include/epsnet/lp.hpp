#pragma once

#include "epsnet/rational.hpp"

#include <optional>
#include <vector>

namespace epsnet {

enum class Relation { LessEq, Less, Eq };

struct LinearConstraint {
    std::vector<Scalar> coeffs;
    Relation rel = Relation::LessEq;
    Scalar rhs;
};

// Exact feasibility over free real variables. Strict rows are handled by a
// slack variable t in [0,1] that is maximized; the system is feasible iff the
// optimum is positive.
std::optional<std::vector<Scalar>> find_feasible(std::size_t num_vars,
                                                 const std::vector<LinearConstraint>& rows);

// Same, with the flagged variables restricted to be nonnegative.
std::optional<std::vector<Scalar>> find_feasible(std::size_t num_vars,
                                                 const std::vector<LinearConstraint>& rows,
                                                 const std::vector<bool>& nonneg_vars);

struct LpResult {
    enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
    Scalar value;
    std::vector<Scalar> x;
};

// maximize c.x subject to rows (non-strict only), free variables.
LpResult maximize(const std::vector<Scalar>& c, std::size_t num_vars,
                  const std::vector<LinearConstraint>& rows);

}  // namespace epsnet
