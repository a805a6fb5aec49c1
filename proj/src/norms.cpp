#include "discosc/norms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "discosc/calculus.hpp"
#include "discosc/parallel.hpp"

namespace discosc {

namespace {

double weighted_value(const AnalyticOracle& g, double beta, cplx z, SupKind kind) {
    const double w = std::pow(1.0 - std::norm(z), beta);
    try {
        if (kind == SupKind::Modulus) return w * std::abs(g.value(z));
        return w * spherical_derivative(g, z);
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "weighted_sup_estimate: oracle failed at z = (" << z.real() << ", " << z.imag()
           << "): " << e.what();
        throw std::runtime_error(os.str());
    }
}

double grid_sup(const AnalyticOracle& g, double beta, const GridSpec& grid, SupKind kind,
                cplx* argmax) {
    double best = weighted_value(g, beta, cplx(0.0), kind);
    cplx best_z(0.0);
    for (int k = 1; k <= grid.k_max; ++k) {
        const double r = grid.ring_radius(k);
        const int64_t m = grid.ring_angles(k);
        std::vector<double> vals(static_cast<size_t>(m));
        parallel_for(m, [&](int64_t j) {
            const double theta = 2.0 * M_PI * double(j) / double(m);
            vals[static_cast<size_t>(j)] =
                weighted_value(g, beta, cplx(r * std::cos(theta), r * std::sin(theta)), kind);
        });
        for (int64_t j = 0; j < m; ++j) {
            if (vals[static_cast<size_t>(j)] > best) {
                best = vals[static_cast<size_t>(j)];
                const double theta = 2.0 * M_PI * double(j) / double(m);
                best_z = cplx(r * std::cos(theta), r * std::sin(theta));
            }
        }
    }
    if (argmax) *argmax = best_z;
    return best;
}

}  // namespace

SupEstimate weighted_sup_estimate(const AnalyticOracle& g, double beta, const GridSpec& grid,
                                  SupKind kind) {
    if (beta < 0.0) throw std::invalid_argument("weighted_sup_estimate: beta must be >= 0");
    SupEstimate est;
    est.value = grid_sup(g, beta, grid, kind, &est.argmax);
    est.refined_value = grid_sup(g, beta, grid.refined(), kind, nullptr);
    est.stable = std::abs(est.refined_value - est.value) <= 0.01 * std::max(est.refined_value, 1e-300);
    return est;
}

double ring_sup(const AnalyticOracle& g, double beta, double r, int64_t angles, SupKind kind) {
    std::vector<double> vals(static_cast<size_t>(angles));
    parallel_for(angles, [&](int64_t j) {
        const double theta = 2.0 * M_PI * double(j) / double(angles);
        vals[static_cast<size_t>(j)] =
            weighted_value(g, beta, cplx(r * std::cos(theta), r * std::sin(theta)), kind);
    });
    double best = 0.0;
    for (double v : vals) best = std::max(best, v);
    return best;
}

std::vector<std::pair<double, double>> hardy_norm_estimate(const AnalyticOracle& f, double p,
                                                           const std::vector<double>& radii) {
    if (!(p > 0.0)) throw std::invalid_argument("hardy_norm_estimate: p must be positive");
    std::vector<std::pair<double, double>> out;
    for (double r : radii) {
        const int64_t m = std::min<int64_t>(1 << 17, std::max<int64_t>(1024, int64_t(64.0 / (1.0 - r))));
        std::vector<double> vals(static_cast<size_t>(m));
        parallel_for(m, [&](int64_t j) {
            const double theta = 2.0 * M_PI * double(j) / double(m);
            const cplx z(r * std::cos(theta), r * std::sin(theta));
            vals[static_cast<size_t>(j)] = std::pow(std::abs(f.value(z)), p);
        });
        double acc = 0.0;
        for (double v : vals) acc += v;  // fixed-order summation
        out.emplace_back(r, std::pow(acc / double(m), 1.0 / p));
    }
    return out;
}

double bmoa_seminorm_estimate(const AnalyticOracle& g, const std::vector<cplx>& samples) {
    if (samples.empty()) throw std::invalid_argument("bmoa_seminorm_estimate: no samples");
    const double r = 0.99;
    const int64_t m = 4096;
    double best = 0.0;
    for (const cplx& a : samples) {
        const cplx ga = g.value(a);
        std::vector<double> vals(static_cast<size_t>(m));
        parallel_for(m, [&](int64_t j) {
            const double theta = 2.0 * M_PI * double(j) / double(m);
            const cplx z(r * std::cos(theta), r * std::sin(theta));
            vals[static_cast<size_t>(j)] = std::norm(g.value(automorphism(a, z)) - ga);
        });
        double acc = 0.0;
        for (double v : vals) acc += v;
        best = std::max(best, std::sqrt(acc / double(m)));
    }
    return best;
}

double carleson_measure_estimate(const AnalyticOracle& A, const std::vector<CarlesonBox>& boxes) {
    double best = 0.0;
    for (const CarlesonBox& box : boxes) {
        const int nr = 96, nt = 96;
        const double r0 = std::max(0.0, 1.0 - box.length);
        std::vector<double> rows(nr);
        parallel_for(nr, [&](int64_t i) {
            const double r = r0 + (double(i) + 0.5) * (1.0 - r0) / nr;  // midpoint rule
            double acc = 0.0;
            for (int j = 0; j < nt; ++j) {
                const double theta =
                    box.theta_center + (-0.5 + (double(j) + 0.5) / nt) * box.length;
                const cplx z(r * std::cos(theta), r * std::sin(theta));
                const double w = std::pow(1.0 - r * r, 3.0);
                acc += std::norm(A.value(z)) * w * r;
            }
            rows[static_cast<size_t>(i)] = acc * ((1.0 - r0) / nr) * (box.length / nt);
        });
        double integral = 0.0;
        for (double v : rows) integral += v;
        best = std::max(best, integral / box.length);
    }
    return best;
}

}  // namespace discosc
