#pragma once

#include <complex>
#include <vector>

#include "discosc/disc_point.hpp"

namespace discosc {

/// Truncated Taylor expansion of an analytic function in the scaled local
/// variable tau = (z - center) / scale:
///
///     f(center + scale*tau) = sum_k coeff(k) tau^k,   k = 0..order.
///
/// The scale keeps coefficients O(1) near the boundary, where raw Taylor
/// coefficients of the functions we care about overflow doubles. All
/// arithmetic is exact truncation of formal power series at the common
/// order; operands must share center and scale.
class Jet {
public:
    Jet(cplx center, double scale, int order)
        : center_(center), scale_(scale), c_(static_cast<size_t>(order) + 1, cplx(0.0)) {}

    /// Jet of the identity map z at `center`: c0 = center, c1 = scale.
    static Jet variable(cplx center, double scale, int order);
    static Jet constant(cplx value, cplx center, double scale, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx center() const { return center_; }
    double scale() const { return scale_; }

    cplx value() const { return c_[0]; }
    cplx coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    cplx& coeff(int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<cplx>& coeffs() const { return c_; }

    /// k-th derivative with respect to z (not tau) at the center.
    cplx derivative(int k = 1) const;

    Jet truncated(int order) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator+=(cplx s) { c_[0] += s; return *this; }
    Jet& operator-=(cplx s) { c_[0] -= s; return *this; }
    Jet& operator*=(cplx s);

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator+(Jet a, cplx s) { a += s; return a; }
    friend Jet operator+(cplx s, Jet a) { a += s; return a; }
    friend Jet operator-(Jet a, cplx s) { a -= s; return a; }
    friend Jet operator-(cplx s, const Jet& a) { Jet r = -a; r += s; return r; }
    friend Jet operator*(Jet a, cplx s) { a *= s; return a; }
    friend Jet operator*(cplx s, Jet a) { a *= s; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(Jet a, cplx s) { a *= 1.0 / s; return a; }
    friend Jet operator/(cplx s, const Jet& b) {
        return Jet::constant(s, b.center(), b.scale(), b.order()) / b;
    }

    /// Division after dropping the constant terms of both operands:
    /// (a/tau) / (b/tau). Requires callers to know a(0) ~ b(0) ~ 0; used for
    /// removable singularities.
    static Jet divide_deflated(const Jet& a, const Jet& b);

    /// Jet of f' (order drops by one).
    Jet differentiated() const;
    /// Jet of the antiderivative vanishing at the center (order grows by one).
    Jet integrated() const;

    /// Composition with principal branches; require value() in the domain.
    Jet log() const;
    Jet exp() const;
    Jet sqrt() const;
    Jet pow(cplx exponent) const;
    std::pair<Jet, Jet> sin_cos() const;
    Jet sin() const { return sin_cos().first; }

    /// Horner evaluation at a point z with |z - center| <= scale.
    cplx eval(cplx z) const;
    /// Value and first derivative (w.r.t. z) at z.
    std::pair<cplx, cplx> eval_with_derivative(cplx z) const;

    /// Taylor-shift: the same function expanded at a new center inside the
    /// current disc of convergence, truncated at `order`.
    Jet rebased(cplx new_center, double new_scale, int order) const;

private:
    cplx center_;
    double scale_;
    std::vector<cplx> c_;

    void check_compatible(const Jet& rhs) const;
};

/// Composition g(m(z)) as a jet at m's center. g must be expanded at
/// m.value() (g.center() == m.value()).
Jet compose(const Jet& g, const Jet& m);

}  // namespace discosc
