#include "discosc/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace discosc {

cplx schwarzian(const Jet& w3) {
    if (w3.order() < 3) throw std::invalid_argument("schwarzian: need an order-3 jet");
    const cplx c1 = w3.coeff(1), c2 = w3.coeff(2), c3 = w3.coeff(3);
    const double scale = w3.scale();
    double mag = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
    if (std::abs(c1) <= 1e-14 * std::max(1.0, mag)) {
        throw std::domain_error("schwarzian: critical point (w' ~ 0)");
    }
    // In tau units: w' = c1, w'' = 2 c2, w''' = 6 c3; S rescales by 1/scale^2.
    const cplx s_tau = 6.0 * c3 / c1 - 1.5 * (2.0 * c2 / c1) * (2.0 * c2 / c1);
    return s_tau / (scale * scale);
}

cplx schwarzian(const AnalyticOracle& w, cplx z) {
    return schwarzian(w.jet(z, 3));
}

double spherical_derivative(const Jet& w1) {
    if (w1.order() < 1) throw std::invalid_argument("spherical_derivative: need an order-1 jet");
    const cplx v = w1.value();
    const cplx d = w1.coeff(1) / w1.scale();
    const double av = std::abs(v);
    if (av > 1.0) {
        // (1/w)' = -w'/w^2; same spherical derivative, better scaling.
        const cplx rv = 1.0 / v;
        const cplx rd = -d * rv * rv;
        return std::abs(rd) / (1.0 + std::norm(rv));
    }
    return std::abs(d) / (1.0 + std::norm(v));
}

double spherical_derivative(const AnalyticOracle& w, cplx z) {
    return spherical_derivative(w.jet(z, 1));
}

double spherical_derivative_quotient(const Jet& n, const Jet& d) {
    const cplx nv = n.value(), dv = d.value();
    const cplx np = n.coeff(1) / n.scale(), dp = d.coeff(1) / d.scale();
    const double denom = std::norm(nv) + std::norm(dv);
    if (denom == 0.0) throw std::domain_error("spherical_derivative_quotient: 0/0");
    return std::abs(np * dv - nv * dp) / denom;
}

}  // namespace discosc
