#pragma once

#include <functional>

#include "discosc/disc_point.hpp"

namespace discosc {

/// Smoothness constant K = sup_r psi(r) / psi((r + psi(r)) / (1 + r psi(r)))
/// for a non-increasing gauge psi: [0,1) -> (0,1). Dense boundary-refined
/// sampling plus golden-section polish near the sampled argmax. Throws if
/// the estimate exceeds 1e6 (smoothness condition violated).
double smoothness_constant(const std::function<double(double)>& psi);

/// A gauge function together with its cached smoothness constant.
class GaugePsi {
public:
    /// Validates 0 < psi < 1 and monotonicity on a sample grid, then caches K.
    static GaugePsi make(std::function<double(double)> psi);

    /// psi == c; K = 1 exactly.
    static GaugePsi constant(double c);

    double operator()(double r) const { return psi_(r); }
    double K() const { return K_; }

private:
    GaugePsi(std::function<double(double)> psi, double K) : psi_(std::move(psi)), K_(K) {}
    std::function<double(double)> psi_;
    double K_;
};

}  // namespace discosc
