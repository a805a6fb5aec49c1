#pragma once

#include <optional>
#include <vector>

#include "discosc/grid.hpp"
#include "discosc/oracle.hpp"

namespace discosc {

/// Result of a grid sup scan. `value` is a LOWER bound for the true sup;
/// `stable` records whether one refinement step moved it by less than 1%.
struct SupEstimate {
    double value = 0.0;
    cplx argmax;
    double refined_value = 0.0;
    bool stable = false;
};

enum class SupKind { Modulus, Spherical };

/// max over the grid of (1 - |z|^2)^beta * |g(z)|   (SupKind::Modulus)
///                  or (1 - |z|^2)^beta * g^#(z)    (SupKind::Spherical).
/// Evaluation failures propagate with the offending point in the message.
SupEstimate weighted_sup_estimate(const AnalyticOracle& g, double beta,
                                  const GridSpec& grid = GridSpec{},
                                  SupKind kind = SupKind::Modulus);

/// Ring sup: max over |z| = r of (1 - r^2)^beta * g-quantity.
double ring_sup(const AnalyticOracle& g, double beta, double r, int64_t angles,
                SupKind kind = SupKind::Modulus);

/// Integral means ((1/2pi) \int |f(r e^{i t})|^p dt)^{1/p} per radius, by
/// trapezoid quadrature. Diagnostic: a boundedness trend, not an H^p
/// membership proof.
std::vector<std::pair<double, double>> hardy_norm_estimate(const AnalyticOracle& f, double p,
                                                           const std::vector<double>& radii);

/// max over sampled a of the H^2 mean of g(phi_a(.)) - g(a) at radius 0.99.
/// Diagnostic only.
double bmoa_seminorm_estimate(const AnalyticOracle& g, const std::vector<cplx>& samples);

/// Carleson box: the arc {|theta - theta_center| <= length/2} times depth
/// {1 - length <= r < 1}.
struct CarlesonBox {
    double theta_center;
    double length;
};

/// max over boxes of (2-D quadrature of |A|^2 (1-|z|^2)^3 over the box) / length.
/// Diagnostic only.
double carleson_measure_estimate(const AnalyticOracle& A, const std::vector<CarlesonBox>& boxes);

}  // namespace discosc
