#pragma once

#include <vector>

#include "discosc/oracle.hpp"

namespace discosc {

/// Zeros found in a disc region, with the contour-certified total count.
/// The sum of multiplicities always equals certified_count.
struct ZeroSet {
    std::vector<cplx> points;
    std::vector<int> multiplicities;
    cplx region_center;
    double region_radius = 0.0;
    int certified_count = 0;

    size_t size() const { return points.size(); }
};

struct LocatorOptions {
    double tol = 1e-12;
    int quad_nodes_start = 256;
    int64_t quad_nodes_cap = 1 << 16;
    double guard_factor = 1e-9;   // zero-on-contour trip threshold
    int newton_max_iters = 50;
};

/// Argument-principle count of zeros of f inside |z - center| = radius.
/// Throws zero_on_contour (perturb the radius and retry) or a precision
/// failure when the winding number refuses to become an integer.
int count_zeros(const AnalyticOracle& f, cplx center, double radius,
                const LocatorOptions& opt = LocatorOptions{});

struct zero_on_contour : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive subdivision + Newton polishing inside a disc region; every zero
/// re-certified by a small argument-principle contour.
ZeroSet locate_zeros(const AnalyticOracle& f, cplx center, double radius, double tol = 1e-12,
                     const LocatorOptions& opt = LocatorOptions{});

/// Real-segment scan for functions real on the real axis: bracket sign
/// changes on a density that follows the local validity scale, then
/// bisection + Newton. Zeros of solutions clustering exponentially toward
/// +-1 are exactly the intended workload.
std::vector<double> locate_real_zeros(const AnalyticOracle& f, double x_lo, double x_hi,
                                      double tol = 1e-13);

/// Zeros of f' (critical points of f).
ZeroSet locate_critical_points(const AnalyticOracle& f, cplx center, double radius,
                               double tol = 1e-12, const LocatorOptions& opt = LocatorOptions{});

/// Order of vanishing at z: smallest k with |c_k| above the noise floor of
/// the local jet. Throws if everything is below the floor.
int multiplicity(const AnalyticOracle& f, cplx z, int max_order = 8);

}  // namespace discosc
