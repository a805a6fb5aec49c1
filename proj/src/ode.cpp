#include "discosc/ode.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace discosc {

cplx LocalSolution::eval(cplx z) const {
    const cplx tau = (z - center) / scale;
    cplx acc = coeffs.back();
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) acc = acc * tau + coeffs[static_cast<size_t>(k)];
    return acc;
}

std::pair<cplx, cplx> LocalSolution::eval_with_derivative(cplx z) const {
    const cplx tau = (z - center) / scale;
    cplx p = coeffs.back(), dp(0.0);
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
        dp = dp * tau + p;
        p = p * tau + coeffs[static_cast<size_t>(k)];
    }
    return {p, dp / scale};
}

Jet LocalSolution::as_jet() const {
    Jet j(center, scale, static_cast<int>(coeffs.size()) - 1);
    for (size_t k = 0; k < coeffs.size(); ++k) j.coeff(static_cast<int>(k)) = coeffs[k];
    return j;
}

namespace {

/// Run the recurrence at a fixed order and scale; returns the scaled
/// coefficients.
std::vector<cplx> run_recurrence(const std::vector<cplx>& a, double scale, cplx f0, cplx f0p,
                                 int order) {
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    c[0] = f0;
    c[1] = f0p * scale;
    const double s2 = scale * scale;
    for (int k = 0; k + 2 <= order; ++k) {
        cplx s(0.0);
        const int jmax = std::min<int>(k, static_cast<int>(a.size()) - 1);
        for (int j = 0; j <= jmax; ++j) s += a[static_cast<size_t>(j)] * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k + 2)] = -s2 * s / (double(k + 2) * double(k + 1));
    }
    return c;
}

bool tail_ok(const std::vector<cplx>& c, double tol, double amp) {
    const size_t n = c.size();
    double tail = 0.0;
    for (size_t k = n - 4; k < n; ++k) tail = std::max(tail, std::abs(c[k]));
    return tail <= tol * amp;
}

}  // namespace

LocalSolution series_solve(const AnalyticOracle& A, cplx z0, cplx f0, cplx f0p, int order,
                           const OdeOptions& opt) {
    const double bd = boundary_distance(z0);
    if (bd <= 0.0) throw std::domain_error("series_solve: expansion center outside the disc");
    double rho = opt.rho_safe * bd;
    const bool adaptive = order < 0;
    int ord = adaptive ? opt.order_start : order;
    if (ord < 4) throw std::invalid_argument("series_solve: order must be >= 4");

    while (true) {
        const Jet aj = A.jet_at(z0, ord - 2, rho);
        std::vector<cplx> c = run_recurrence(aj.coeffs(), rho, f0, f0p, ord);
        const double amp = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
        if (tail_ok(c, opt.series_tol, amp)) {
            return LocalSolution{z0, rho, std::move(c), f0, f0p};
        }
        if (adaptive && ord < opt.order_cap) {
            ord = std::min(2 * ord, opt.order_cap);
            continue;
        }
        rho *= 0.5;
        if (rho < opt.min_step_factor * bd) {
            std::ostringstream os;
            os << "series_solve: no convergent expansion at (" << z0.real() << ", " << z0.imag()
               << ")";
            throw std::runtime_error(os.str());
        }
        if (adaptive) ord = opt.order_start;
    }
}

const LocalSolution* SolutionChain::cell_for(cplx z) const {
    const LocalSolution* best = nullptr;
    double best_d = 1e300;
    for (const LocalSolution& ls : cells) {
        const double d = std::abs(z - ls.center);
        if (d <= ls.scale && d < best_d) {
            best = &ls;
            best_d = d;
        }
    }
    return best;
}

cplx SolutionChain::eval(cplx z) const {
    const LocalSolution* c = cell_for(z);
    if (!c) throw std::runtime_error("SolutionChain::eval: point outside continued coverage");
    return c->eval(z);
}

std::pair<cplx, cplx> SolutionChain::eval_with_derivative(cplx z) const {
    const LocalSolution* c = cell_for(z);
    if (!c) throw std::runtime_error("SolutionChain: point outside continued coverage");
    return c->eval_with_derivative(z);
}

Jet SolutionChain::jet(const AnalyticOracle& A, cplx z, int order, double scale) const {
    const auto [f, fp] = eval_with_derivative(z);
    if (scale <= 0.0) scale = 0.5 * boundary_distance(z);
    const Jet aj = A.jet_at(z, std::max(order - 2, 0), scale);
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    c[0] = f;
    if (order >= 1) c[1] = fp * scale;
    const double s2 = scale * scale;
    for (int k = 0; k + 2 <= order; ++k) {
        cplx s(0.0);
        for (int j = 0; j <= k; ++j) s += aj.coeff(j) * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k + 2)] = -s2 * s / (double(k + 2) * double(k + 1));
    }
    Jet out(z, scale, order);
    for (int k = 0; k <= order; ++k) out.coeff(k) = c[static_cast<size_t>(k)];
    return out;
}

SolutionChain continue_along(const AnalyticOracle& A, const std::vector<cplx>& path, cplx f0,
                             cplx f0p, const OdeOptions& opt) {
    if (path.size() < 1) throw std::invalid_argument("continue_along: empty path");
    for (cplx p : path) {
        if (std::abs(p) >= 1.0) throw std::domain_error("continue_along: path leaves the disc");
    }
    SolutionChain chain;
    cplx cur = path[0];
    cplx f = f0, fp = f0p;
    for (size_t seg = 1; seg < path.size(); ++seg) {
        const cplx target = path[seg];
        while (true) {
            LocalSolution ls = series_solve(A, cur, f, fp, -1, opt);
            const double remaining = std::abs(target - cur);
            const double step = std::min(0.8 * ls.scale, remaining);
            if (remaining > 0.0 && step < opt.min_step_factor * boundary_distance(cur)) {
                std::ostringstream os;
                os << "continue_along: step collapsed at (" << cur.real() << ", " << cur.imag()
                   << ")";
                throw std::runtime_error(os.str());
            }
            chain.cells.push_back(ls);
            if (step >= remaining) {
                const auto v = ls.eval_with_derivative(target);
                f = v.first;
                fp = v.second;
                cur = target;
                break;
            }
            const cplx next = cur + (target - cur) * (step / remaining);
            const auto v = ls.eval_with_derivative(next);
            f = v.first;
            fp = v.second;
            cur = next;
        }
    }
    if (chain.cells.empty()) chain.cells.push_back(series_solve(A, cur, f, fp, -1, opt));
    return chain;
}

SolutionField::SolutionField(AnalyticOracle A, cplx z0, cplx f0, cplx f0p, const OdeOptions& opt)
    : A_(std::move(A)),
      z0_(z0),
      f0_(f0),
      f0p_(f0p),
      opt_(opt),
      base_(series_solve(A_, z0, f0, f0p, -1, opt)),
      map_mu_(std::make_shared<std::mutex>()),
      rays_(std::make_shared<std::map<std::pair<double, double>, std::shared_ptr<Ray>>>()) {}

const SolutionChain& SolutionField::ray_through(cplx z) const {
    const cplx d = z - z0_;
    const double dist = std::abs(d);
    const cplx dir = d / dist;
    const std::pair<double, double> key{dir.real(), dir.imag()};

    std::shared_ptr<Ray> ray;
    {
        std::lock_guard<std::mutex> lk(*map_mu_);
        auto& slot = (*rays_)[key];
        if (!slot) slot = std::make_shared<Ray>();
        ray = slot;
    }
    std::lock_guard<std::mutex> lk(ray->mu);
    if (ray->chain.cells.empty()) {
        ray->chain.cells.push_back(base_);
        ray->reach = 0.0;
        ray->end_f = f0_;
        ray->end_fp = f0p_;
    }
    while (ray->reach < dist) {
        const cplx cur = z0_ + dir * ray->reach;
        LocalSolution ls = (ray->reach == 0.0)
                               ? base_
                               : series_solve(A_, cur, ray->end_f, ray->end_fp, -1, opt_);
        if (ray->reach != 0.0) ray->chain.cells.push_back(ls);
        const double step = std::min(0.8 * ls.scale, dist - ray->reach);
        if (step < opt_.min_step_factor * boundary_distance(cur)) {
            std::ostringstream os;
            os << "SolutionField: continuation stalled at radius " << ray->reach;
            throw std::runtime_error(os.str());
        }
        ray->reach += step;
        const auto v = ls.eval_with_derivative(z0_ + dir * ray->reach);
        ray->end_f = v.first;
        ray->end_fp = v.second;
    }
    return ray->chain;
}

Jet SolutionField::jet(cplx z, int order, double scale) const {
    if (std::abs(z - z0_) <= 0.5 * base_.scale) {
        SolutionChain tmp;
        tmp.cells.push_back(base_);
        return tmp.jet(A_, z, order, scale);
    }
    return ray_through(z).jet(A_, z, order, scale);
}

cplx SolutionField::value(cplx z) const {
    if (std::abs(z - z0_) <= 0.5 * base_.scale) return base_.eval(z);
    return ray_through(z).eval(z);
}

std::pair<cplx, cplx> SolutionField::value_with_derivative(cplx z) const {
    if (std::abs(z - z0_) <= 0.5 * base_.scale) return base_.eval_with_derivative(z);
    return ray_through(z).eval_with_derivative(z);
}

AnalyticOracle SolutionField::oracle() const {
    SolutionField copy = *this;
    return AnalyticOracle{
        [copy](cplx center, int order, double scale) { return copy.jet(center, order, scale); },
        [](cplx z) { return 0.5 * boundary_distance(z); }};
}

AnalyticOracle SolutionField::derivative_oracle() const {
    SolutionField copy = *this;
    return AnalyticOracle{
        [copy](cplx center, int order, double scale) {
            return copy.jet(center, order + 1, scale).differentiated();
        },
        [](cplx z) { return 0.5 * boundary_distance(z); }};
}

cplx SolutionBasis::wronskian_at(cplx z) const {
    const auto [v1, d1] = f1.value_with_derivative(z);
    const auto [v2, d2] = f2.value_with_derivative(z);
    return v1 * d2 - d1 * v2;
}

SolutionBasis solution_basis(const AnalyticOracle& A, cplx z0, const OdeOptions& opt) {
    return SolutionBasis{SolutionField(A, z0, 0.0, 1.0, opt), SolutionField(A, z0, 1.0, 0.0, opt),
                         cplx(-1.0)};
}

double wronskian_drift(const SolutionBasis& basis, const std::vector<cplx>& checkpoints) {
    double worst = 0.0;
    for (cplx z : checkpoints) {
        worst = std::max(worst,
                         std::abs(basis.wronskian_at(z) - basis.wronskian) / std::abs(basis.wronskian));
    }
    return worst;
}

double residual(const AnalyticOracle& A, const AnalyticOracle& f, const std::vector<cplx>& samples) {
    double worst = 0.0;
    for (cplx z : samples) {
        const Jet fj = f.jet(z, 2);
        const cplx fpp = fj.derivative(2);
        worst = std::max(worst, std::abs(fpp + A.value(z) * fj.value()));
    }
    return worst;
}

}  // namespace discosc
