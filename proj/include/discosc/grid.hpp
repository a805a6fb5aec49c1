#pragma once

#include <cstdint>
#include <vector>

#include "discosc/disc_point.hpp"

namespace discosc {

/// Sampling grid of the disc: rings r_k = 1 - 2^-k for k = 0..k_max, with
/// 2^k * angle_base angles per ring, capped at angle_cap. Base and cap are
/// powers of two, so a refined() grid contains every point of the original
/// (the refinement-monotonicity of sup estimates depends on this nesting).
struct GridSpec {
    int k_max = 14;
    int64_t angle_base = 64;
    int64_t angle_cap = 65536;

    double ring_radius(int k) const { return 1.0 - std::pow(2.0, -k); }

    int64_t ring_angles(int k) const {
        int64_t m = angle_base;
        for (int i = 0; i < k && m < angle_cap; ++i) m *= 2;
        return m < angle_cap ? m : angle_cap;
    }

    /// One refinement step: one ring deeper, twice the angles everywhere.
    GridSpec refined() const { return GridSpec{k_max + 1, angle_base * 2, angle_cap}; }

    /// A light preset for fields that are expensive to evaluate
    /// (ODE-continued solutions).
    static GridSpec light() { return GridSpec{10, 16, 1024}; }

    template <typename F>
    void for_each(F&& f) const {
        f(cplx(0.0, 0.0));
        for (int k = 1; k <= k_max; ++k) {
            const double r = ring_radius(k);
            const int64_t m = ring_angles(k);
            for (int64_t j = 0; j < m; ++j) {
                const double theta = 2.0 * M_PI * double(j) / double(m);
                f(cplx(r * std::cos(theta), r * std::sin(theta)));
            }
        }
    }

    std::vector<cplx> points() const {
        std::vector<cplx> pts;
        for_each([&](cplx z) { pts.push_back(z); });
        return pts;
    }

    int64_t point_count() const {
        int64_t n = 1;
        for (int k = 1; k <= k_max; ++k) n += ring_angles(k);
        return n;
    }
};

}  // namespace discosc
