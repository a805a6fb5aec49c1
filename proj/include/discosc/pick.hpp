#pragma once

#include <optional>
#include <vector>

#include "discosc/oracle.hpp"

namespace discosc {

/// Bounded-interpolation problem h(node_j) = target_j with minimal sup norm.
struct InterpolationProblem {
    std::vector<cplx> nodes;    // pairwise distinct (rho_p > 1e-10)
    std::vector<cplx> targets;
    std::optional<double> norm_cap;
};

struct PickSolution {
    AnalyticOracle h;
    double min_norm = 0.0;    // c*: smallest feasible sup norm (bisection)
    double norm_bound = 0.0;  // realized bound 1.05 * c*
};

/// Is the Pick matrix [(c^2 - t_j conj(t_k)) / (1 - z_j conj(z_k))] positive
/// semidefinite? LDL^H with a small relative pivot tolerance.
bool pick_matrix_psd(const std::vector<cplx>& nodes, const std::vector<cplx>& targets, double c);

/// Minimal feasible norm c* by bisection on PSD-ness.
double pick_min_norm(const std::vector<cplx>& nodes, const std::vector<cplx>& targets);

/// Solve the problem: c* by bisection, then a Schur-recursion realization of
/// h at norm 1.05 c*. The realized h hits every node exactly (up to
/// rounding) and satisfies |h| <= 1.05 c* on the disc by construction.
PickSolution pick_solve(const InterpolationProblem& problem);

}  // namespace discosc
