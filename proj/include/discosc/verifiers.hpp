#pragma once

#include <optional>

#include "discosc/gauge.hpp"
#include "discosc/grid.hpp"
#include "discosc/locator.hpp"
#include "discosc/norms.hpp"
#include "discosc/ode.hpp"
#include "discosc/report.hpp"

namespace discosc {

inline constexpr double kTheoremSlack = 1e-12;

/// Default constant gauge for a coefficient with sup (1-|z|^2)^2 |A| = M0:
/// psi == c with c = min(1 / sqrt(2 max(M0, 1)), 0.99). With this choice
/// K sqrt(M) = c sqrt(M0) <= 1/sqrt(2), the max{...} clamp is 1, and the
/// separation displays reduce to artanh powers of c. The factor 2 keeps the
/// zero-critical bound inside what the rescaling argument actually yields
/// (the Schwarzian of the solution quotient carries 2A, not A).
GaugePsi default_constant_gauge(double M0);

/// Lower bound for the hyperbolic distance between two zeros:
/// log((1+Psi)/(1-Psi)) with Psi = psi(|t_h(z1,z2)|)/max{K sqrt(M), 1}.
double zero_separation_bound(const GaugePsi& psi, double M, const DiscPoint& z1,
                             const DiscPoint& z2);

/// Lower bound for the hyperbolic distance between a zero and a critical
/// point at a: (1/2) log((1+Psi)/(1-Psi)), Psi = psi(|a|)/max{K sqrt(M), 1}.
double zero_critical_bound(const GaugePsi& psi, double M, const DiscPoint& a);

/// Every (zero, critical point) pair must clear zero_critical_bound, and
/// every zero pair must clear zero_separation_bound, with slack 1e-12.
VerificationReport verify_separation(const ZeroSet& zeros, const ZeroSet& criticals,
                                     const GaugePsi& psi, double M);

/// (f')^# f^# <= |A|/4 pointwise on the grid, plus the logarithmic-derivative
/// bound (f'/f)^# <= |A| + 1 on the same grid.
VerificationReport verify_balance(const AnalyticOracle& A, const SolutionField& f,
                                  const GridSpec& grid = GridSpec::light());

/// (1 - |zeta_n|^2) |f'(zeta_n)| per zero, ordered by boundary approach.
std::vector<std::pair<int, double>> normality_functional(const SolutionField& f,
                                                         const std::vector<cplx>& zeros);
std::vector<std::pair<int, double>> normality_functional(const AnalyticOracle& f,
                                                         const std::vector<cplx>& zeros);

/// Grid sup of (1-|z|^2)^alpha w^# for w = f1/f2, via the Wronskian identity
/// w^# = |W(f1,f2)| / (|f1|^2 + |f2|^2). alpha must exceed the threshold
/// alpha* = sqrt(1 + ||S_w||/2) + 1 computed from ||S_w|| = 2 ||A||.
VerificationReport quotient_growth_check(const SolutionBasis& basis, double alpha,
                                         const GridSpec& grid = GridSpec::light());

/// Pseudo-hyperbolic radius of guaranteed univalence: 1 if ||S_w|| <= 2,
/// else sqrt(2/||S_w||).
double local_univalence_radius(double schwarzian_norm);

/// Spot check: w takes each sampled value at most once on Delta_p(a, delta).
bool univalence_spot_check(const AnalyticOracle& w, cplx a, double delta,
                           const std::vector<cplx>& values);

/// Smallest C with (1-|z|^2)^2 |A| <= 1 + C (1-|z|) on the grid, or nullopt
/// if the grid max keeps growing under refinement.
struct GrowthMargin {
    std::optional<double> C;
    VerificationReport report;
};
GrowthMargin coefficient_growth_margin(const AnalyticOracle& A,
                                       const GridSpec& grid = GridSpec{});

/// Fitted delta* = min over cross pairs of
/// rho_p(z1, z2) / max{(1-|z1|^2)^{alpha-1}, (1-|z2|^2)^{alpha-1}}.
/// Diagnostic (the constant is existential); fails only when a pair
/// coincides.
VerificationReport cross_zero_separation(const ZeroSet& zeros1, const ZeroSet& zeros2,
                                         double alpha);

}  // namespace discosc
