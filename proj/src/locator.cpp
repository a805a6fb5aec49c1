#include "discosc/locator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <sstream>

#include "discosc/parallel.hpp"

namespace discosc {

namespace {

/// Trapezoid winding integral (1/2pi i) \oint f'/f dz on a circle; exact for
/// analytic integrands up to spectral accuracy.
cplx winding_sum(const AnalyticOracle& f, cplx center, double radius, int64_t nodes,
                 const LocatorOptions& opt) {
    std::vector<cplx> terms(static_cast<size_t>(nodes));
    std::vector<double> mags(static_cast<size_t>(nodes));
    parallel_for(nodes, [&](int64_t k) {
        const double theta = 2.0 * M_PI * double(k) / double(nodes);
        const cplx z = center + radius * cplx(std::cos(theta), std::sin(theta));
        const Jet j = f.jet(z, 1);
        mags[static_cast<size_t>(k)] = std::abs(j.value());
        terms[static_cast<size_t>(k)] =
            (j.coeff(1) / j.scale()) / j.value() * (z - center);
    });
    double scale = 0.0;
    for (double m : mags) scale = std::max(scale, m);
    for (double m : mags) {
        if (m < opt.guard_factor * scale) {
            throw zero_on_contour("count_zeros: |f| below guard threshold on the contour");
        }
    }
    cplx acc(0.0);
    for (const cplx& t : terms) acc += t;
    return acc / double(nodes);
}

}  // namespace

int count_zeros(const AnalyticOracle& f, cplx center, double radius, const LocatorOptions& opt) {
    int64_t nodes = opt.quad_nodes_start;
    cplx prev = winding_sum(f, center, radius, nodes, opt);
    while (nodes <= opt.quad_nodes_cap) {
        nodes *= 2;
        const cplx cur = winding_sum(f, center, radius, nodes, opt);
        const double n_int = std::round(cur.real());
        if (std::abs(cur - prev) < 0.05 && std::abs(cur.real() - n_int) < 0.05 &&
            std::abs(cur.imag()) < 0.05) {
            if (std::abs(cur.real() - n_int) > 0.1) break;
            return static_cast<int>(n_int);
        }
        prev = cur;
    }
    std::ostringstream os;
    os << "count_zeros: winding number did not stabilize to an integer at (" << center.real()
       << ", " << center.imag() << "), r = " << radius;
    throw std::runtime_error(os.str());
}

namespace {

int count_zeros_robust(const AnalyticOracle& f, cplx center, double radius,
                       const LocatorOptions& opt) {
    const double bumps[] = {1.0, 1.03, 0.97, 1.06, 0.94};
    for (double b : bumps) {
        try {
            return count_zeros(f, center, radius * b, opt);
        } catch (const zero_on_contour&) {
            continue;
        }
    }
    throw zero_on_contour("count_zeros: all perturbed contours hit a zero");
}

struct Cell {
    cplx center;
    double half;  // half side of the square
    int depth;
};

std::optional<cplx> newton_polish(const AnalyticOracle& f, cplx start, double tol, int max_iters,
                                  double leash) {
    cplx z = start;
    for (int it = 0; it < max_iters; ++it) {
        if (std::abs(z) >= 1.0 - 1e-15) return std::nullopt;
        const Jet j = f.jet(z, 1);
        const cplx fv = j.value();
        const cplx fp = j.coeff(1) / j.scale();
        if (fp == cplx(0.0)) return std::nullopt;
        const cplx step = fv / fp;
        z -= step;
        if (std::abs(z - start) > leash) return std::nullopt;
        if (std::abs(step) <= 0.25 * tol) {
            const Jet jj = f.jet(z, 1);
            if (std::abs(jj.value()) <=
                tol * std::max(1.0, std::abs(jj.coeff(1) / jj.scale()))) {
                return z;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ZeroSet locate_zeros(const AnalyticOracle& f, cplx center, double radius, double tol,
                     const LocatorOptions& opt) {
    ZeroSet out;
    out.region_center = center;
    out.region_radius = radius;
    out.certified_count = count_zeros_robust(f, center, radius, opt);

    std::vector<cplx> found;
    if (out.certified_count > 0) {
        std::deque<Cell> queue;
        queue.push_back(Cell{center, radius, 0});
        while (!queue.empty()) {
            const Cell cell = queue.front();
            queue.pop_front();
            const double circ = cell.half * std::sqrt(2.0) * 1.05;
            if (std::abs(cell.center - center) - circ > radius + tol) continue;
            if (std::abs(cell.center) + circ >= 1.0 - 1e-15) {
                // clip to the disc; zeros on/near the boundary are out of scope
                if (std::abs(cell.center) - circ >= 1.0 - 1e-12) continue;
            }
            int n = 0;
            try {
                n = count_zeros_robust(f, cell.center, circ, opt);
            } catch (const zero_on_contour&) {
                n = 1;  // undetermined: keep subdividing
            }
            if (n == 0) continue;
            if (n == 1 || cell.depth >= 6) {
                auto z = newton_polish(f, cell.center, tol, opt.newton_max_iters, 4.0 * circ);
                if (z && std::abs(*z - center) <= radius + 10.0 * tol) {
                    found.push_back(*z);
                    if (n == 1) continue;
                }
            }
            if (cell.depth > 40) {
                std::ostringstream os;
                os << "locate_zeros: subdivision exhausted at (" << cell.center.real() << ", "
                   << cell.center.imag() << ")";
                throw std::runtime_error(os.str());
            }
            const double h = 0.5 * cell.half;
            for (int sx = -1; sx <= 1; sx += 2) {
                for (int sy = -1; sy <= 1; sy += 2) {
                    queue.push_back(Cell{cell.center + cplx(sx * h, sy * h), h, cell.depth + 1});
                }
            }
        }
    }

    // dedupe, then certify each zero by a tight contour
    std::sort(found.begin(), found.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<cplx> unique;
    for (const cplx& z : found) {
        bool dup = false;
        for (const cplx& u : unique) {
            if (std::abs(z - u) <= 10.0 * tol) { dup = true; break; }
        }
        if (!dup) unique.push_back(z);
    }
    int total = 0;
    for (const cplx& z : unique) {
        double gap = radius;
        for (const cplx& u : unique) {
            if (u != z) gap = std::min(gap, 0.4 * std::abs(u - z));
        }
        const double cert_r = std::max(std::min(gap, 1e4 * tol), 10.0 * tol);
        const int m = count_zeros_robust(f, z, cert_r, opt);
        if (m < 1) continue;
        out.points.push_back(z);
        out.multiplicities.push_back(m);
        total += m;
    }
    if (total != out.certified_count) {
        std::ostringstream os;
        os << "locate_zeros: found multiplicity total " << total << " but contour certifies "
           << out.certified_count;
        throw std::runtime_error(os.str());
    }
    return out;
}

std::vector<double> locate_real_zeros(const AnalyticOracle& f, double x_lo, double x_hi,
                                      double tol) {
    std::vector<double> zeros;
    auto fval = [&](double x) { return f.value(cplx(x, 0.0)).real(); };

    double x = x_lo;
    double fx = fval(x);
    if (fx == 0.0) zeros.push_back(x);
    while (x < x_hi) {
        // density follows the boundary distance so exponentially clustered
        // zeros near +-1 stay resolved
        const double h = std::max(1e-16, 0.02 * (1.0 - std::abs(x)));
        double xn = std::min(x + h, x_hi);
        if (xn <= x) break;
        double fn = fval(xn);
        if (fn == 0.0) {
            zeros.push_back(xn);
        } else if (std::signbit(fn) != std::signbit(fx) && fx != 0.0) {
            double a = x, b = xn, fa = fx;
            for (int it = 0; it < 200 && b - a > tol * std::max(1e-3, 1.0 - std::abs(b)); ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                const double fm = fval(mid);
                if (fm == 0.0) { a = b = mid; break; }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid; fa = fm;
                } else {
                    b = mid;
                }
            }
            // Newton polish from the bracket midpoint
            double zr = 0.5 * (a + b);
            for (int it = 0; it < 30; ++it) {
                const Jet j = f.jet(cplx(zr, 0.0), 1);
                const double fv = j.value().real();
                const double fp = (j.coeff(1) / j.scale()).real();
                if (fp == 0.0) break;
                const double step = fv / fp;
                const double next = zr - step;
                if (next <= a - (b - a) || next >= b + (b - a)) break;
                zr = next;
                if (std::abs(step) <= 1e-18 + 1e-16 * std::abs(zr)) break;
            }
            zeros.push_back(zr);
        }
        x = xn;
        fx = fn;
    }
    return zeros;
}

ZeroSet locate_critical_points(const AnalyticOracle& f, cplx center, double radius, double tol,
                               const LocatorOptions& opt) {
    return locate_zeros(oracle_derivative(f), center, radius, tol, opt);
}

int multiplicity(const AnalyticOracle& f, cplx z, int max_order) {
    const Jet j = f.jet(z, max_order);
    double top = 0.0;
    for (int k = 0; k <= max_order; ++k) top = std::max(top, std::abs(j.coeff(k)));
    if (top == 0.0) throw std::domain_error("multiplicity: jet is identically zero");
    for (int k = 0; k <= max_order; ++k) {
        if (std::abs(j.coeff(k)) > 1e-9 * top) return k;
    }
    throw std::domain_error("multiplicity: degenerate jet (all coefficients at noise floor)");
}

}  // namespace discosc
