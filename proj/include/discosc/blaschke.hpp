#pragma once

#include <vector>

#include "discosc/oracle.hpp"

namespace discosc {

/// Finite Blaschke product with the unimodular normalization
///   B(z) = prod_n (|z_n|/z_n) (z_n - z)/(1 - conj(z_n) z),
/// and |z_n|/z_n = 1 for z_n = 0. Multiplicities are expressed by repeating
/// a zero in the list.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<cplx> zeros);

    const std::vector<cplx>& zeros() const { return zeros_; }
    int degree() const { return static_cast<int>(zeros_.size()); }

    Jet jet(cplx center, int order, double scale) const;
    cplx value(cplx z) const { return jet(z, 0, 1.0).value(); }
    cplx derivative(cplx z) const { return jet(z, 1, 0.5 * boundary_distance(z)).derivative(1); }

    AnalyticOracle oracle() const;

    /// min_k (1 - |z_k|^2) |B'(z_k)|, computed both from the derivative and
    /// from the pseudo-hyperbolic product over the other zeros. The two
    /// routes agree to ~1e-10 for moderate degrees; both are returned.
    struct Separation {
        double derivative_form;
        double product_form;
    };
    Separation separation() const;

    /// The derivative-form separation constant; throws std::invalid_argument
    /// if any zero is repeated (the constant is only defined for simple zeros).
    double separation_constant() const;

private:
    std::vector<cplx> zeros_;
};

}  // namespace discosc
