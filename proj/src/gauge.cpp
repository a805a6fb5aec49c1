#include "discosc/gauge.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace discosc {

namespace {

double ratio_at(const std::function<double(double)>& psi, double r) {
    const double p = psi(r);
    const double shifted = (r + p) / (1.0 + r * p);
    return psi(r) / psi(shifted);
}

}  // namespace

double smoothness_constant(const std::function<double(double)>& psi) {
    // r = 1 - 2^(-k/8), k = 0..8*48: resolves the boundary where the gauges live.
    std::vector<double> rs;
    for (int k = 0; k <= 8 * 48; ++k) rs.push_back(1.0 - std::pow(2.0, -k / 8.0));
    double best = 0.0;
    size_t best_i = 0;
    for (size_t i = 0; i < rs.size(); ++i) {
        const double v = ratio_at(psi, rs[i]);
        if (v > best) { best = v; best_i = i; }
        if (v > 1e6) throw std::domain_error("smoothness_constant: condition violated (ratio > 1e6)");
    }
    // Golden-section refinement around the sampled argmax.
    double lo = rs[best_i > 0 ? best_i - 1 : 0];
    double hi = rs[std::min(best_i + 1, rs.size() - 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = ratio_at(psi, x1), f2 = ratio_at(psi, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = ratio_at(psi, x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = ratio_at(psi, x1);
        }
    }
    best = std::max(best, std::max(f1, f2));
    if (best > 1e6) throw std::domain_error("smoothness_constant: condition violated (ratio > 1e6)");
    return best;
}

GaugePsi GaugePsi::make(std::function<double(double)> psi) {
    double prev = psi(0.0);
    for (int k = 0; k <= 8 * 48; ++k) {
        const double r = 1.0 - std::pow(2.0, -k / 8.0);
        const double v = psi(r);
        if (!(v > 0.0 && v < 1.0)) throw std::domain_error("GaugePsi: psi must map into (0,1)");
        if (v > prev + 1e-12) throw std::domain_error("GaugePsi: psi must be non-increasing");
        prev = v;
    }
    const double K = smoothness_constant(psi);
    return GaugePsi(std::move(psi), K);
}

GaugePsi GaugePsi::constant(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("GaugePsi::constant: c must be in (0,1)");
    return GaugePsi([c](double) { return c; }, 1.0);
}

}  // namespace discosc
