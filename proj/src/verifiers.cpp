#include "discosc/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discosc/calculus.hpp"
#include "discosc/parallel.hpp"

namespace discosc {

GaugePsi default_constant_gauge(double M0) {
    const double c = std::min(1.0 / std::sqrt(2.0 * std::max(M0, 1.0)), 0.99);
    return GaugePsi::constant(c);
}

namespace {

double clamp_denominator(const GaugePsi& psi, double M) {
    return std::max(psi.K() * std::sqrt(M), 1.0);
}

}  // namespace

double zero_separation_bound(const GaugePsi& psi, double M, const DiscPoint& z1,
                             const DiscPoint& z2) {
    if (!(M > 0.0)) throw std::domain_error("zero_separation_bound: M must be positive");
    const DiscPoint mid = hyperbolic_midpoint(z1, z2);
    const double p = psi(mid.abs()) / clamp_denominator(psi, M);
    return std::log((1.0 + p) / (1.0 - p));
}

double zero_critical_bound(const GaugePsi& psi, double M, const DiscPoint& a) {
    if (!(M > 0.0)) throw std::domain_error("zero_critical_bound: M must be positive");
    const double p = psi(a.abs()) / clamp_denominator(psi, M);
    return 0.5 * std::log((1.0 + p) / (1.0 - p));
}

VerificationReport verify_separation(const ZeroSet& zeros, const ZeroSet& criticals,
                                     const GaugePsi& psi, double M) {
    VerificationReport rep;
    rep.name = "separation";
    rep.parameters["slack"] = kTheoremSlack;
    rep.parameters["M"] = M;
    rep.parameters["K"] = psi.K();
    rep.parameters["pairs_zero_critical"] = double(zeros.size() * criticals.size());
    rep.parameters["pairs_zero_zero"] = double(zeros.size() * (zeros.size() - 1) / 2);

    double worst = 1e300;
    std::vector<cplx> worst_pair;
    for (const cplx& zeta : zeros.points) {
        for (const cplx& a : criticals.points) {
            const double margin =
                hyperbolic_distance(zeta, a) - zero_critical_bound(psi, M, DiscPoint(a));
            if (margin < worst) {
                worst = margin;
                worst_pair = {zeta, a};
            }
        }
    }
    for (size_t i = 0; i < zeros.points.size(); ++i) {
        for (size_t j = i + 1; j < zeros.points.size(); ++j) {
            const DiscPoint u(zeros.points[i]), v(zeros.points[j]);
            const double margin =
                hyperbolic_distance(u, v) - zero_separation_bound(psi, M, u, v);
            if (margin < worst) {
                worst = margin;
                worst_pair = {zeros.points[i], zeros.points[j]};
            }
        }
    }
    if (worst == 1e300) {
        rep.verdict = VerificationReport::Verdict::Pass;
        rep.worst_margin = 0.0;
        rep.note = "vacuous: no pairs to check";
        return rep;
    }
    rep.worst_margin = worst;
    rep.worst_points = worst_pair;
    rep.verdict = worst >= -kTheoremSlack ? VerificationReport::Verdict::Pass
                                          : VerificationReport::Verdict::Fail;
    return rep;
}

VerificationReport verify_balance(const AnalyticOracle& A, const SolutionField& f,
                                  const GridSpec& grid) {
    VerificationReport rep;
    rep.name = "balance";
    rep.parameters["slack"] = kTheoremSlack;
    rep.parameters["grid_points"] = double(grid.point_count());

    const std::vector<cplx> pts = grid.points();
    std::vector<double> balance(pts.size()), remark(pts.size());
    parallel_for(static_cast<int64_t>(pts.size()), [&](int64_t i) {
        const cplx z = pts[static_cast<size_t>(i)];
        const Jet fj = f.jet(z, 2);
        const Jet fpj = fj.differentiated();
        const double sph_f = spherical_derivative(fj);
        const double sph_fp = spherical_derivative(fpj);
        const double absA = std::abs(A.value(z));
        balance[static_cast<size_t>(i)] = sph_fp * sph_f - 0.25 * absA;  // (f')^# f^# - |A|/4
        // (f'/f)^# via the quotient form, pole-safe at zeros of f
        const double sph_quot = spherical_derivative_quotient(fpj.truncated(1), fj.truncated(1));
        remark[static_cast<size_t>(i)] = sph_quot - (absA + 1.0);
    });
    double worst = -1e300, worst_remark = -1e300;
    cplx worst_z(0.0), worst_rz(0.0);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (balance[i] > worst) { worst = balance[i]; worst_z = pts[i]; }
        if (remark[i] > worst_remark) { worst_remark = remark[i]; worst_rz = pts[i]; }
    }
    rep.parameters["worst_balance_excess"] = worst;
    rep.parameters["worst_remark_excess"] = worst_remark;
    rep.worst_margin = -std::max(worst, worst_remark);
    rep.worst_points = {worst_z, worst_rz};
    rep.verdict = (worst <= kTheoremSlack && worst_remark <= kTheoremSlack)
                      ? VerificationReport::Verdict::Pass
                      : VerificationReport::Verdict::Fail;
    return rep;
}

namespace {

std::vector<std::pair<int, double>> functional_impl(
    const std::function<Jet(cplx)>& jet1, const std::vector<cplx>& zeros) {
    std::vector<size_t> idx(zeros.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return std::abs(zeros[a]) < std::abs(zeros[b]); });
    std::vector<std::pair<int, double>> out;
    for (size_t i : idx) {
        const Jet j = jet1(zeros[i]);
        out.emplace_back(static_cast<int>(i),
                         (1.0 - std::norm(zeros[i])) * std::abs(j.derivative(1)));
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, double>> normality_functional(const SolutionField& f,
                                                         const std::vector<cplx>& zeros) {
    return functional_impl([&](cplx z) { return f.jet(z, 1); }, zeros);
}

std::vector<std::pair<int, double>> normality_functional(const AnalyticOracle& f,
                                                         const std::vector<cplx>& zeros) {
    return functional_impl([&](cplx z) { return f.jet(z, 1); }, zeros);
}

VerificationReport quotient_growth_check(const SolutionBasis& basis, double alpha,
                                         const GridSpec& grid) {
    const SupEstimate snorm2 =
        weighted_sup_estimate(basis.f1.coefficient(), 2.0, GridSpec{12, 64, 4096});
    const double s_w = 2.0 * snorm2.value;
    const double threshold = std::sqrt(1.0 + 0.5 * s_w) + 1.0;
    if (!(alpha > threshold)) {
        std::ostringstream os;
        os << "quotient_growth_check: alpha = " << alpha
           << " is not above the threshold alpha* = " << threshold
           << " (= sqrt(1 + ||S_w||/2) + 1 with ||S_w|| = " << s_w << ")";
        throw std::invalid_argument(os.str());
    }

    auto grid_value = [&](const GridSpec& g, cplx* argmax) {
        const std::vector<cplx> pts = g.points();
        std::vector<double> vals(pts.size());
        parallel_for(static_cast<int64_t>(pts.size()), [&](int64_t i) {
            const cplx z = pts[static_cast<size_t>(i)];
            const Jet j1 = basis.f1.jet(z, 1);
            const Jet j2 = basis.f2.jet(z, 1);
            const double wsharp =
                std::abs(basis.wronskian) / (std::norm(j1.value()) + std::norm(j2.value()));
            vals[static_cast<size_t>(i)] = std::pow(1.0 - std::norm(z), alpha) * wsharp;
        });
        double best = 0.0;
        cplx bz(0.0);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (vals[i] > best) { best = vals[i]; bz = pts[i]; }
        }
        if (argmax) *argmax = bz;
        return best;
    };

    VerificationReport rep;
    rep.name = "quotient_growth";
    cplx argmax;
    const double v = grid_value(grid, &argmax);
    const double vr = grid_value(grid.refined(), nullptr);
    rep.parameters["alpha"] = alpha;
    rep.parameters["alpha_threshold"] = threshold;
    rep.parameters["schwarzian_norm"] = s_w;
    rep.parameters["sup"] = v;
    rep.parameters["sup_refined"] = vr;
    rep.parameters["stable"] = std::abs(vr - v) <= 0.01 * std::max(vr, 1e-300) ? 1.0 : 0.0;
    rep.worst_margin = v;
    rep.worst_points = {argmax};
    rep.verdict = VerificationReport::Verdict::Diagnostic;
    return rep;
}

double local_univalence_radius(double schwarzian_norm) {
    if (schwarzian_norm < 0.0) throw std::domain_error("local_univalence_radius: negative norm");
    if (schwarzian_norm <= 2.0) return 1.0;
    return std::sqrt(2.0 / schwarzian_norm);
}

bool univalence_spot_check(const AnalyticOracle& w, cplx a, double delta,
                           const std::vector<cplx>& values) {
    const EuclideanDisc disc = pseudo_hyperbolic_disc(a, delta);
    for (const cplx& v : values) {
        AnalyticOracle shifted{[w, v](cplx center, int order, double scale) {
                                   Jet j = w.jet_at(center, order, scale);
                                   j -= v;
                                   return j;
                               },
                               w.validity_radius};
        int n = 0;
        try {
            n = count_zeros(shifted, disc.center, disc.radius * 0.98);
        } catch (const zero_on_contour&) {
            n = count_zeros(shifted, disc.center, disc.radius * 0.95);
        }
        if (n > 1) return false;
    }
    return true;
}

GrowthMargin coefficient_growth_margin(const AnalyticOracle& A, const GridSpec& grid) {
    auto grid_c = [&](const GridSpec& g) {
        double best = -1e300;
        g.for_each([&](cplx z) {
            const double w = 1.0 - std::norm(z);
            const double v = ((w * w) * std::abs(A.value(z)) - 1.0) / (1.0 - std::abs(z));
            best = std::max(best, v);
        });
        return std::max(best, 0.0);
    };
    GrowthMargin out;
    out.report.name = "coefficient_growth";
    const double c = grid_c(grid);
    const double cr = grid_c(grid.refined());
    out.report.parameters["C"] = c;
    out.report.parameters["C_refined"] = cr;
    const bool stable = cr <= c * 1.01 + 1e-9;
    out.report.parameters["stable"] = stable ? 1.0 : 0.0;
    out.report.worst_margin = c;
    if (stable) {
        out.C = cr;
        out.report.verdict = VerificationReport::Verdict::Pass;
    } else {
        out.report.verdict = VerificationReport::Verdict::Fail;
        out.report.note = "grid constant keeps growing under refinement (diverging)";
    }
    return out;
}

VerificationReport cross_zero_separation(const ZeroSet& zeros1, const ZeroSet& zeros2,
                                         double alpha) {
    VerificationReport rep;
    rep.name = "cross_zero_separation";
    rep.parameters["alpha"] = alpha;
    double fitted = 1e300;
    std::vector<cplx> worst;
    for (const cplx& z1 : zeros1.points) {
        for (const cplx& z2 : zeros2.points) {
            const double denom = std::max(std::pow(1.0 - std::norm(z1), alpha - 1.0),
                                          std::pow(1.0 - std::norm(z2), alpha - 1.0));
            const double v = pseudo_distance(z1, z2) / denom;
            if (v < fitted) {
                fitted = v;
                worst = {z1, z2};
            }
        }
    }
    if (fitted == 1e300) {
        rep.verdict = VerificationReport::Verdict::Pass;
        rep.note = "vacuous: no cross pairs";
        return rep;
    }
    rep.parameters["fitted_delta"] = fitted;
    rep.worst_margin = fitted;
    rep.worst_points = worst;
    rep.verdict = fitted > 0.0 ? VerificationReport::Verdict::Diagnostic
                               : VerificationReport::Verdict::Fail;
    if (fitted == 0.0) rep.note = "coincident zeros across the basis (simple-zero violation)";
    return rep;
}

}  // namespace discosc
