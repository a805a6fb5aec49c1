#pragma once

#include <functional>
#include <utility>

#include "discosc/jet.hpp"

namespace discosc {

/// An evaluatable analytic function on the unit disc. `jet_at` produces the
/// Taylor jet of requested order at a requested center, in the scaled local
/// variable; `validity_radius` hints how far that jet can be trusted.
/// Oracles are immutable after construction and freely shareable.
struct AnalyticOracle {
    std::function<Jet(cplx center, int order, double scale)> jet_at;
    std::function<double(cplx center)> validity_radius;

    Jet jet(cplx center, int order, double scale = 0.0) const {
        if (scale <= 0.0) scale = default_scale(center);
        return jet_at(center, order, scale);
    }

    cplx value(cplx z) const { return jet(z, 0).value(); }
    cplx derivative(cplx z, int k = 1) const { return jet(z, k).derivative(k); }

    double default_scale(cplx center) const {
        double r = validity_radius ? validity_radius(center) : 0.5 * (1.0 - std::abs(center));
        if (r <= 0.0) r = 1e-3;
        return r;
    }
};

inline double boundary_distance(cplx z) { return 1.0 - std::abs(z); }

inline AnalyticOracle oracle_constant(cplx value) {
    return AnalyticOracle{
        [value](cplx center, int order, double scale) {
            return Jet::constant(value, center, scale, order);
        },
        [](cplx) { return 1e3; }};
}

inline AnalyticOracle oracle_identity() {
    return AnalyticOracle{
        [](cplx center, int order, double scale) { return Jet::variable(center, scale, order); },
        [](cplx) { return 1e3; }};
}

/// Oracle from a jet-building function of the identity jet; validity
/// defaults to the distance to the unit circle.
inline AnalyticOracle oracle_from(std::function<Jet(const Jet&)> build) {
    return AnalyticOracle{
        [build = std::move(build)](cplx center, int order, double scale) {
            return build(Jet::variable(center, scale, order));
        },
        [](cplx z) { return 0.5 * boundary_distance(z); }};
}

inline AnalyticOracle oracle_derivative(AnalyticOracle f) {
    return AnalyticOracle{
        [f](cplx center, int order, double scale) {
            return f.jet_at(center, order + 1, scale).differentiated();
        },
        f.validity_radius};
}

inline AnalyticOracle oracle_sum(AnalyticOracle a, AnalyticOracle b) {
    auto va = a.validity_radius, vb = b.validity_radius;
    return AnalyticOracle{
        [a, b](cplx center, int order, double scale) {
            return a.jet_at(center, order, scale) + b.jet_at(center, order, scale);
        },
        [va, vb](cplx z) { return std::min(va(z), vb(z)); }};
}

inline AnalyticOracle oracle_product(AnalyticOracle a, AnalyticOracle b) {
    auto va = a.validity_radius, vb = b.validity_radius;
    return AnalyticOracle{
        [a, b](cplx center, int order, double scale) {
            return a.jet_at(center, order, scale) * b.jet_at(center, order, scale);
        },
        [va, vb](cplx z) { return std::min(va(z), vb(z)); }};
}

inline AnalyticOracle oracle_scale(AnalyticOracle a, cplx s) {
    return AnalyticOracle{
        [a, s](cplx center, int order, double scale) {
            Jet j = a.jet_at(center, order, scale);
            j *= s;
            return j;
        },
        a.validity_radius};
}

/// w(phi_a(z)) for the disc automorphism phi_a.
inline AnalyticOracle oracle_precompose_automorphism(AnalyticOracle w, cplx a) {
    return AnalyticOracle{
        [w, a](cplx center, int order, double scale) {
            Jet z = Jet::variable(center, scale, order);
            Jet num = a - z;
            Jet den = 1.0 - std::conj(a) * z;
            Jet inner = num / den;
            const cplx u0 = inner.value();
            Jet outer = w.jet(u0, order, 0.5 * boundary_distance(u0));
            return compose(outer, inner);
        },
        [w, a](cplx z) {
            cplx u = automorphism(a, z);
            return 0.25 * boundary_distance(u) / (1.0 + std::abs(a));
        }};
}

}  // namespace discosc
