#pragma once

#include <complex>
#include <stdexcept>

namespace discosc {

using cplx = std::complex<double>;

/// A point of the open unit disc. Construction rejects |z| >= 1 - 1e-15,
/// since everything downstream divides by 1 - |z|^2.
class DiscPoint {
public:
    DiscPoint() : value_(0.0, 0.0) {}

    explicit DiscPoint(cplx value) : value_(value) {
        if (!(std::abs(value) < 1.0 - 1e-15)) {
            throw std::domain_error("DiscPoint: |z| must be < 1 - 1e-15");
        }
    }

    DiscPoint(double re, double im) : DiscPoint(cplx(re, im)) {}

    cplx value() const { return value_; }
    double abs() const { return std::abs(value_); }

    operator cplx() const { return value_; }

private:
    cplx value_;
};

/// 1 - conj(u)*v evaluated as (1 - conj(u)) + conj(u)*(1 - v).
/// Keeps full relative accuracy when u, v are both close to the boundary,
/// where the direct form cancels catastrophically.
inline cplx one_minus_conj_prod(cplx u, cplx v) {
    const cplx cu = std::conj(u);
    return (1.0 - cu) + cu * (1.0 - v);
}

/// Disc automorphism phi_a(z) = (a - z) / (1 - conj(a) z); an involution.
inline cplx automorphism(cplx a, cplx z) {
    return (a - z) / one_minus_conj_prod(a, z);
}

inline DiscPoint automorphism(const DiscPoint& a, const DiscPoint& z) {
    return DiscPoint(automorphism(a.value(), z.value()));
}

/// Pseudo-hyperbolic distance rho_p(u, v) = |phi_u(v)| in [0, 1).
inline double pseudo_distance(cplx u, cplx v) {
    if (u == v) return 0.0;
    return std::abs(u - v) / std::abs(one_minus_conj_prod(u, v));
}

inline double pseudo_distance(const DiscPoint& u, const DiscPoint& v) {
    return pseudo_distance(u.value(), v.value());
}

/// Hyperbolic distance rho_h = artanh(rho_p) = (1/2) log((1+rho_p)/(1-rho_p)).
inline double hyperbolic_distance(cplx u, cplx v) {
    return std::atanh(pseudo_distance(u, v));
}

inline double hyperbolic_distance(const DiscPoint& u, const DiscPoint& v) {
    return hyperbolic_distance(u.value(), v.value());
}

/// Hyperbolic distance between two real points written as 1-a and 1-b with
/// a, b the (tiny) boundary gaps. Works entirely in gap space, so it stays
/// accurate where the points themselves round to neighbouring doubles.
inline double hyperbolic_distance_from_boundary_gaps(double a, double b) {
    if (a < b) std::swap(a, b);
    const double rho = (a - b) / (a + b - a * b);
    return std::atanh(rho);
}

/// Geodesic midpoint: conjugate u to the origin, halve the distance in
/// artanh scale along the image direction, conjugate back.
inline DiscPoint hyperbolic_midpoint(const DiscPoint& u, const DiscPoint& v) {
    if (u.value() == v.value()) return u;
    const cplx w = automorphism(u.value(), v.value());
    const double rho = std::abs(w);
    const double s = std::tanh(0.5 * std::atanh(rho));
    return DiscPoint(automorphism(u.value(), s * (w / rho)));
}

/// Euclidean center/radius of the pseudo-hyperbolic disc Delta_p(a, r).
struct EuclideanDisc {
    cplx center;
    double radius;
};

inline EuclideanDisc pseudo_hyperbolic_disc(cplx a, double r) {
    const double aa = std::norm(a);
    const double den = 1.0 - r * r * aa;
    return EuclideanDisc{a * (1.0 - r * r) / den, r * (1.0 - aa) / den};
}

}  // namespace discosc
