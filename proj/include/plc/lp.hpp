#pragma once

#include <optional>

#include "plc/rational.hpp"

/// Exact rational feasibility oracle for systems A x >= b with x free.
///
/// Dense two-phase-free simplex (phase one only) with Bland's rule, over GMP
/// rationals. Every branch decision in the polyhedral kernel is made through
/// this oracle; no floating point is involved anywhere.
namespace plc::lp {

/// Returns some x with rows[i] . x >= rhs[i] for every i, or nullopt if the
/// system is infeasible. An empty system is feasible (x = 0).
std::optional<Vector> find_point(const Matrix& rows, const Vector& rhs, std::size_t dim);

bool feasible(const Matrix& rows, const Vector& rhs, std::size_t dim);

/// Number of simplex solves since process start (diagnostics only).
std::size_t solve_count();

}  // namespace plc::lp
