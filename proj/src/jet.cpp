#include "discosc/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discosc {

Jet Jet::variable(cplx center, double scale, int order) {
    Jet j(center, scale, order);
    j.c_[0] = center;
    if (order >= 1) j.c_[1] = scale;
    return j;
}

Jet Jet::constant(cplx value, cplx center, double scale, int order) {
    Jet j(center, scale, order);
    j.c_[0] = value;
    return j;
}

cplx Jet::derivative(int k) const {
    if (k > order()) throw std::out_of_range("Jet::derivative: order too low");
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c_[static_cast<size_t>(k)] * fact / std::pow(scale_, k);
}

Jet Jet::truncated(int order) const {
    Jet j(center_, scale_, order);
    const int m = std::min(order, this->order());
    std::copy(c_.begin(), c_.begin() + m + 1, j.c_.begin());
    return j;
}

void Jet::check_compatible(const Jet& rhs) const {
    if (center_ != rhs.center_ || scale_ != rhs.scale_) {
        throw std::invalid_argument("Jet: mixed centers or scales");
    }
}

Jet Jet::operator-() const {
    Jet j = *this;
    for (auto& x : j.c_) x = -x;
    return j;
}

Jet& Jet::operator+=(const Jet& rhs) {
    check_compatible(rhs);
    const size_t n = std::min(c_.size(), rhs.c_.size());
    if (rhs.c_.size() < c_.size()) c_.resize(rhs.c_.size());
    for (size_t k = 0; k < n; ++k) c_[k] += rhs.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    check_compatible(rhs);
    const size_t n = std::min(c_.size(), rhs.c_.size());
    if (rhs.c_.size() < c_.size()) c_.resize(rhs.c_.size());
    for (size_t k = 0; k < n; ++k) c_[k] -= rhs.c_[k];
    return *this;
}

Jet& Jet::operator*=(cplx s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    a.check_compatible(b);
    const int n = std::min(a.order(), b.order());
    Jet r(a.center_, a.scale_, n);
    for (int k = 0; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 0; j <= k; ++j) s += a.c_[static_cast<size_t>(j)] * b.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    a.check_compatible(b);
    if (b.value() == cplx(0.0)) throw std::domain_error("Jet division by series with zero constant term");
    const int n = std::min(a.order(), b.order());
    Jet r(a.center_, a.scale_, n);
    const cplx inv = 1.0 / b.c_[0];
    for (int k = 0; k <= n; ++k) {
        cplx s = a.c_[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j) s -= b.c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = s * inv;
    }
    return r;
}

Jet Jet::divide_deflated(const Jet& a, const Jet& b) {
    a.check_compatible(b);
    if (a.order() < 1 || b.order() < 1) throw std::invalid_argument("divide_deflated: order too low");
    Jet as(a.center_, a.scale_, a.order() - 1);
    Jet bs(b.center_, b.scale_, b.order() - 1);
    for (int k = 1; k <= a.order(); ++k) as.c_[static_cast<size_t>(k - 1)] = a.c_[static_cast<size_t>(k)];
    for (int k = 1; k <= b.order(); ++k) bs.c_[static_cast<size_t>(k - 1)] = b.c_[static_cast<size_t>(k)];
    return as / bs;
}

Jet Jet::differentiated() const {
    if (order() == 0) throw std::invalid_argument("Jet::differentiated: order 0");
    Jet r(center_, scale_, order() - 1);
    for (int k = 1; k <= order(); ++k) {
        r.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * double(k) / scale_;
    }
    return r;
}

Jet Jet::integrated() const {
    Jet r(center_, scale_, order() + 1);
    for (int k = 0; k <= order(); ++k) {
        r.c_[static_cast<size_t>(k + 1)] = c_[static_cast<size_t>(k)] * scale_ / double(k + 1);
    }
    return r;
}

Jet Jet::log() const {
    // log f = log f(0) + integral of f'/f, done coefficientwise in tau.
    if (value() == cplx(0.0)) throw std::domain_error("Jet::log at a zero");
    const int n = order();
    Jet r(center_, scale_, n);
    r.c_[0] = std::log(value());
    const cplx inv = 1.0 / c_[0];
    // r' f = f'  (in tau):  k r_k = k f_k/f_0 - sum_{j=1..k-1} j r_j f_{k-j}/f_0
    for (int k = 1; k <= n; ++k) {
        cplx s = double(k) * c_[static_cast<size_t>(k)];
        for (int j = 1; j < k; ++j) s -= double(j) * r.c_[static_cast<size_t>(j)] * c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = s * inv / double(k);
    }
    return r;
}

Jet Jet::exp() const {
    // e' = f' e  (in tau):  k e_k = sum_{j=1..k} j f_j e_{k-j}
    const int n = order();
    Jet r(center_, scale_, n);
    r.c_[0] = std::exp(value());
    for (int k = 1; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 1; j <= k; ++j) s += double(j) * c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = s / double(k);
    }
    return r;
}

Jet Jet::sqrt() const { return pow(cplx(0.5)); }

Jet Jet::pow(cplx exponent) const {
    Jet l = log();
    l *= exponent;
    return l.exp();
}

std::pair<Jet, Jet> Jet::sin_cos() const {
    // s' = f' c, c' = -f' s (in tau).
    const int n = order();
    Jet s(center_, scale_, n), c(center_, scale_, n);
    s.c_[0] = std::sin(value());
    c.c_[0] = std::cos(value());
    for (int k = 1; k <= n; ++k) {
        cplx as(0.0), ac(0.0);
        for (int j = 1; j <= k; ++j) {
            as += double(j) * c_[static_cast<size_t>(j)] * c.c_[static_cast<size_t>(k - j)];
            ac -= double(j) * c_[static_cast<size_t>(j)] * s.c_[static_cast<size_t>(k - j)];
        }
        s.c_[static_cast<size_t>(k)] = as / double(k);
        c.c_[static_cast<size_t>(k)] = ac / double(k);
    }
    return {s, c};
}

cplx Jet::eval(cplx z) const {
    const cplx tau = (z - center_) / scale_;
    cplx acc = c_.back();
    for (int k = order() - 1; k >= 0; --k) acc = acc * tau + c_[static_cast<size_t>(k)];
    return acc;
}

std::pair<cplx, cplx> Jet::eval_with_derivative(cplx z) const {
    const cplx tau = (z - center_) / scale_;
    cplx p = c_.back(), dp(0.0);
    for (int k = order() - 1; k >= 0; --k) {
        dp = dp * tau + p;
        p = p * tau + c_[static_cast<size_t>(k)];
    }
    return {p, dp / scale_};
}

Jet Jet::rebased(cplx new_center, double new_scale, int order) const {
    // Compose with the affine map z = new_center + new_scale * tau.
    Jet m(new_center, new_scale, order);
    m.c_[0] = (new_center - center_) / scale_;
    if (order >= 1) m.c_[1] = new_scale / scale_;
    // Horner on the shifted variable.
    Jet acc = Jet::constant(c_.back(), new_center, new_scale, order);
    for (int k = this->order() - 1; k >= 0; --k) {
        acc = acc * m;
        acc += c_[static_cast<size_t>(k)];
    }
    return acc;
}

Jet compose(const Jet& g, const Jet& m) {
    if (g.center() != m.value()) {
        throw std::invalid_argument("compose: outer jet not expanded at inner value");
    }
    const int n = m.order();
    Jet w = m;                       // (m - m0)/g.scale in tau
    w -= m.value();
    w *= 1.0 / g.scale();
    Jet acc = Jet::constant(g.coeff(g.order()), m.center(), m.scale(), n);
    for (int k = g.order() - 1; k >= 0; --k) {
        acc = acc * w;
        acc += g.coeff(k);
    }
    return acc;
}

}  // namespace discosc
