#pragma once

#include <map>
#include <string>
#include <vector>

#include "discosc/blaschke.hpp"
#include "discosc/gauge.hpp"
#include "discosc/oracle.hpp"
#include "discosc/pick.hpp"

namespace discosc {

/// A coefficient/solution pair with construction metadata. Every bundle
/// satisfies |f'' + A f| < 1e-8 on a standard sample grid (tested).
struct WitnessBundle {
    AnalyticOracle f;
    AnalyticOracle A;
    std::map<std::string, double> metadata;
    std::vector<cplx> prescribed_zeros;
};

/// A(z) = (1 + 4 gamma^2) / (1 - z^2)^2 with the bounded-frequency solution
/// f(z) = sqrt(1 - z^2) sin(gamma log((1+z)/(1-z))); real zeros
/// z_n = tanh(pi n / (2 gamma)).
WitnessBundle example_gamma(double gamma);

/// Closed-form zero of the gamma family; `gap` receives 1 - z_n computed in
/// small-number space (full relative precision arbitrarily close to 1).
double gamma_zero(double gamma, int n, double* gap = nullptr);
/// Boundary gap 1 - z_n alone (never rounds to 0 until e^{-pi n/gamma} underflows).
double gamma_zero_gap(double gamma, int n);

/// A = (p')^2 + S_p/2 for p(z) = (log(e/(1-z)))^q, with solution
/// f = sin(p)/sqrt(p'); zeros z_n = 1 - exp(1 - (n pi)^{1/q}). The bundled
/// gauge psi(r) = (1/2) (log(e/(1-r)))^{1-q} has K = (log 2e)^{q-1}.
struct QExample {
    WitnessBundle bundle;
    GaugePsi gauge;
    double K;
};
QExample example_q(double q);

double q_zero(double q, int n, double* gap = nullptr);
double q_zero_gap(double q, int n);

/// f = 2/(B+2), A = (2B'' + B''B - 2(B')^2)/(B+2)^2: a bounded zero-free
/// solution whose critical points are the zeros of B'.
WitnessBundle example_blaschke_quotient(const BlaschkeProduct& B);

/// g = B h + log(1/(xi - z)) with g'(zeta_n) = w_n: the bounded-interpolation
/// route to prescribed logarithmic derivatives on a uniformly separated set.
struct BmoaInterpolant {
    AnalyticOracle g;
    AnalyticOracle h;
    BlaschkeProduct B;
    cplx xi;
    double delta;    // separation constant of the zero set
    double S;        // sup (1-|zeta_n|^2) |w_n|
    double h_norm;   // realized sup-norm bound of h
    double interpolation_residual;  // max |g'(zeta_n) - w_n|
};
BmoaInterpolant build_bmoa_interpolant(const std::vector<cplx>& zeros,
                                       const std::vector<cplx>& w_targets, cplx xi);

/// f = B e^g with g'(zeta_n) = -B''(zeta_n)/(2 B'(zeta_n)): the prescribed
/// uniformly separated zero set becomes the zero set of a solution whose
/// normality functional (1-|zeta_n|^2)|f'(zeta_n)| grows like
/// exp(Re g(zeta_n)). xi defaults to the boundary direction of the deepest
/// node. Metadata: delta, S, h_norm, xi components, truncation N.
WitnessBundle build_nonnormal_witness(std::vector<cplx> zeros, cplx xi = cplx(0.0));

/// f = exp(log a + h log(b/a)) with h(alpha_n) = 0, h(beta_n) = 1 via the
/// minimal-norm interpolant on the merged node set; zero-free and bounded.
/// The corona-type condition min |B_alpha| + |B_beta| >= mu is verified on a
/// grid first; mu below 1e-6 rejects the input.
WitnessBundle build_prescribed_values_witness(const std::vector<cplx>& alpha,
                                              const std::vector<cplx>& beta, cplx a, cplx b);

/// (1-z)^{-(1+10i)/100} - (1-z)^{-i/100}: analytic, uniformly locally
/// univalent; w(0) = 0.
AnalyticOracle lappan_function();

}  // namespace discosc
