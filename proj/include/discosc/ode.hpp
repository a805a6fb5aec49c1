#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "discosc/oracle.hpp"

namespace discosc {

/// One power-series patch of a solution of f'' + A f = 0, in the scaled
/// local variable. Coefficients satisfy the scaled recurrence
///   (k+2)(k+1) c_{k+2} = -scale^2 * sum_j a_j c_{k-j}
/// with a_j the scaled Taylor coefficients of A at the center. The tail
/// bound |c_k| <= tol * amplitude holds at the stored scale for the last
/// few coefficients.
struct LocalSolution {
    cplx center;
    double scale = 0.0;        // validity radius in z units
    std::vector<cplx> coeffs;  // f(center + scale*tau)
    cplx f0, f0p;              // initial data at the center

    cplx eval(cplx z) const;
    std::pair<cplx, cplx> eval_with_derivative(cplx z) const;
    bool covers(cplx z, double margin = 1.0) const {
        return std::abs(z - center) <= margin * scale;
    }
    Jet as_jet() const;
};

struct OdeOptions {
    int order_start = 24;
    int order_cap = 192;
    double series_tol = 1e-14;
    double rho_safe = 0.5;
    double min_step_factor = 1e-6;  // relative to the boundary distance
};

/// Expand the solution with data (f0, f0p) at z0. `order` < 0 selects the
/// adaptive strategy (start 24, double until the tail bound is met, cap 192,
/// halving the radius on failure).
LocalSolution series_solve(const AnalyticOracle& A, cplx z0, cplx f0, cplx f0p, int order = -1,
                           const OdeOptions& opt = OdeOptions{});

/// A chain of local solutions along a polyline.
class SolutionChain {
public:
    std::vector<LocalSolution> cells;

    const LocalSolution* cell_for(cplx z) const;
    bool covered(cplx z) const { return cell_for(z) != nullptr; }
    cplx eval(cplx z) const;
    std::pair<cplx, cplx> eval_with_derivative(cplx z) const;

    /// Jet of the solution at z to any order: hand off (f, f') from the
    /// covering cell and rerun the recurrence at z.
    Jet jet(const AnalyticOracle& A, cplx z, int order, double scale = 0.0) const;
};

/// Analytic continuation along a polyline inside the disc. Throws
/// std::runtime_error (with the failure location) if steps shrink below
/// min_step_factor times the local boundary distance.
SolutionChain continue_along(const AnalyticOracle& A, const std::vector<cplx>& path, cplx f0,
                             cplx f0p, const OdeOptions& opt = OdeOptions{});

/// Disc-covering evaluator for one solution: rays from the base point are
/// continued on demand and cached per direction. Thread-safe; values do not
/// depend on query order.
class SolutionField {
public:
    SolutionField(AnalyticOracle A, cplx z0, cplx f0, cplx f0p,
                  const OdeOptions& opt = OdeOptions{});

    Jet jet(cplx z, int order, double scale = 0.0) const;
    cplx value(cplx z) const;
    std::pair<cplx, cplx> value_with_derivative(cplx z) const;

    AnalyticOracle oracle() const;
    AnalyticOracle derivative_oracle() const;
    const AnalyticOracle& coefficient() const { return A_; }
    cplx base_point() const { return z0_; }

private:
    struct Ray {
        std::mutex mu;
        SolutionChain chain;
        double reach = 0.0;
        cplx end_f, end_fp;
    };

    AnalyticOracle A_;
    cplx z0_;
    cplx f0_, f0p_;
    OdeOptions opt_;
    LocalSolution base_;
    std::shared_ptr<std::mutex> map_mu_;
    std::shared_ptr<std::map<std::pair<double, double>, std::shared_ptr<Ray>>> rays_;

    const SolutionChain& ray_through(cplx z) const;
};

/// Two linearly independent solutions with Wronskian tracking. f1 has data
/// (0, 1) and f2 has (1, 0) at the base point, so W(f1, f2) = -1.
struct SolutionBasis {
    SolutionField f1;
    SolutionField f2;
    cplx wronskian;

    cplx wronskian_at(cplx z) const;
};

SolutionBasis solution_basis(const AnalyticOracle& A, cplx z0, const OdeOptions& opt = OdeOptions{});

/// Max relative deviation of f1 f2' - f1' f2 from its base value.
double wronskian_drift(const SolutionBasis& basis, const std::vector<cplx>& checkpoints);

/// max |f''(z) + A(z) f(z)| over the samples.
double residual(const AnalyticOracle& A, const AnalyticOracle& f, const std::vector<cplx>& samples);

}  // namespace discosc
