#include "discosc/blaschke.hpp"

#include <cmath>
#include <stdexcept>

namespace discosc {

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
    for (const cplx& z : zeros_) {
        if (!(std::abs(z) < 1.0)) throw std::domain_error("BlaschkeProduct: zero outside the open disc");
    }
}

Jet BlaschkeProduct::jet(cplx center, int order, double scale) const {
    Jet z = Jet::variable(center, scale, order);
    Jet b = Jet::constant(1.0, center, scale, order);
    for (const cplx& zn : zeros_) {
        if (zn == cplx(0.0)) {
            b = b * z;  // factor z at the origin (classical convention)
            continue;
        }
        Jet num = zn - z;
        Jet den = 1.0 - std::conj(zn) * z;
        b = b * (num / den);
        b *= std::abs(zn) / zn;
    }
    return b;
}

AnalyticOracle BlaschkeProduct::oracle() const {
    BlaschkeProduct copy = *this;
    return AnalyticOracle{
        [copy](cplx center, int order, double scale) { return copy.jet(center, order, scale); },
        [](cplx z) { return 0.5 * boundary_distance(z); }};
}

BlaschkeProduct::Separation BlaschkeProduct::separation() const {
    double dmin = 1e300, pmin = 1e300;
    for (size_t k = 0; k < zeros_.size(); ++k) {
        const cplx zk = zeros_[k];
        const double w = 1.0 - std::norm(zk);
        dmin = std::min(dmin, w * std::abs(derivative(zk)));
        double prod = 1.0;
        for (size_t n = 0; n < zeros_.size(); ++n) {
            if (n != k) prod *= pseudo_distance(zeros_[n], zk);
        }
        pmin = std::min(pmin, prod);
    }
    if (zeros_.empty()) dmin = pmin = 1.0;
    return Separation{dmin, pmin};
}

double BlaschkeProduct::separation_constant() const {
    for (size_t i = 0; i < zeros_.size(); ++i) {
        for (size_t j = i + 1; j < zeros_.size(); ++j) {
            if (pseudo_distance(zeros_[i], zeros_[j]) <= 1e-10) {
                throw std::invalid_argument("separation_constant: repeated zero (multiplicity > 1)");
            }
        }
    }
    return separation().derivative_form;
}

}  // namespace discosc
