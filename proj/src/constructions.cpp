#include "discosc/constructions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "discosc/grid.hpp"

namespace discosc {

namespace {

constexpr cplx kOne{1.0, 0.0};

Jet log_one_minus(const Jet& z) {
    // principal Log(1 - z); Re(1 - z) > 0 on the disc, no cut inside
    return (kOne - z).log();
}

}  // namespace

double gamma_zero_gap(double gamma, int n) {
    // 1 - tanh(t) = 2 e^{-2t} / (1 + e^{-2t}), t = pi n / (2 gamma)
    const double e = std::exp(-M_PI * double(n) / gamma);
    return 2.0 * e / (1.0 + e);
}

double gamma_zero(double gamma, int n, double* gap) {
    const double g = gamma_zero_gap(gamma, n);
    if (gap) *gap = g;
    return 1.0 - g;
}

WitnessBundle example_gamma(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("example_gamma: gamma must be positive");
    const double amp = 1.0 + 4.0 * gamma * gamma;

    AnalyticOracle A = oracle_from([amp](const Jet& z) {
        Jet u = kOne - z * z;
        return Jet::constant(amp, z.center(), z.scale(), z.order()) / (u * u);
    });
    A.validity_radius = [](cplx z) { return 0.7 * boundary_distance(z); };

    AnalyticOracle f = oracle_from([gamma](const Jet& z) {
        Jet u = kOne - z * z;                       // 1 - z^2, Re > 0 on the disc
        Jet L = (kOne + z).log() - log_one_minus(z);  // log((1+z)/(1-z))
        return u.sqrt() * (L * cplx(gamma)).sin();
    });

    WitnessBundle wb{std::move(f), std::move(A), {}, {}};
    wb.metadata["gamma"] = gamma;
    wb.metadata["coefficient_norm"] = amp;  // sup (1-|z|^2)^2 |A| attained on the real axis
    for (int n = -8; n <= 8; ++n) {
        if (n == 0) {
            wb.prescribed_zeros.push_back(cplx(0.0));
        } else if (n > 0) {
            wb.prescribed_zeros.push_back(cplx(gamma_zero(gamma, n)));
        } else {
            wb.prescribed_zeros.push_back(cplx(-gamma_zero(gamma, -n)));
        }
    }
    return wb;
}

double q_zero_gap(double q, int n) {
    return std::exp(1.0 - std::pow(double(n) * M_PI, 1.0 / q));
}

double q_zero(double q, int n, double* gap) {
    const double g = q_zero_gap(q, n);
    if (gap) *gap = g;
    return 1.0 - g;
}

QExample example_q(double q) {
    if (!(q > 1.0)) throw std::domain_error("example_q: q must exceed 1");

    auto p_jet = [q](const Jet& z) {
        Jet L = kOne - log_one_minus(z);  // log(e/(1-z)), Re > 1 - log 2 > 0
        return L.pow(cplx(q));
    };

    AnalyticOracle A = oracle_from([p_jet](const Jet& z) {
        Jet p = p_jet(z);
        Jet p1 = p.differentiated();
        Jet p2 = p1.differentiated();
        Jet p3 = p2.differentiated();
        const int n = p3.order();
        Jet q1 = p1.truncated(n), q2 = p2.truncated(n);
        Jet ratio = q2 / q1;                       // p''/p'
        Jet sp = p3 / q1 - cplx(1.5) * ratio * ratio;  // S_p = p'''/p' - (3/2)(p''/p')^2
        return q1 * q1 + cplx(0.5) * sp;
    });
    A.jet_at = [A_inner = A.jet_at](cplx center, int order, double scale) {
        return A_inner(center, order + 3, scale).truncated(order);
    };
    A.validity_radius = [](cplx z) { return 0.6 * boundary_distance(z); };

    AnalyticOracle f = oracle_from([p_jet](const Jet& z) {
        Jet p = p_jet(z);
        Jet p1 = p.differentiated();
        return (p.truncated(p1.order()).sin() / p1.sqrt());
    });
    f.jet_at = [f_inner = f.jet_at](cplx center, int order, double scale) {
        return f_inner(center, order + 1, scale).truncated(order);
    };

    WitnessBundle wb{std::move(f), std::move(A), {}, {}};
    wb.metadata["q"] = q;
    for (int n = 1; n <= 24; ++n) wb.prescribed_zeros.push_back(cplx(q_zero(q, n)));

    const double K = std::pow(std::log(2.0 * M_E), q - 1.0);
    GaugePsi gauge = GaugePsi::make(
        [q](double r) { return 0.5 * std::pow(1.0 - std::log1p(-r), 1.0 - q); });
    QExample out{std::move(wb), std::move(gauge), K};
    out.bundle.metadata["K"] = K;
    return out;
}

WitnessBundle example_blaschke_quotient(const BlaschkeProduct& B) {
    AnalyticOracle f{[B](cplx center, int order, double scale) {
                         Jet b = B.jet(center, order, scale);
                         return Jet::constant(2.0, center, scale, order) / (b + cplx(2.0));
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};
    AnalyticOracle A{[B](cplx center, int order, double scale) {
                         Jet b = B.jet(center, order + 2, scale);
                         Jet b1 = b.differentiated();
                         Jet b2 = b1.differentiated();
                         const int n = b2.order();
                         Jet bt = b.truncated(n);
                         Jet b1t = b1.truncated(n);
                         Jet num = cplx(2.0) * b2 + b2 * bt - cplx(2.0) * b1t * b1t;
                         Jet den = bt + cplx(2.0);
                         return num / (den * den);
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};
    WitnessBundle wb{std::move(f), std::move(A), {}, {}};
    wb.metadata["degree"] = double(B.degree());
    return wb;
}

BmoaInterpolant build_bmoa_interpolant(const std::vector<cplx>& zeros,
                                       const std::vector<cplx>& w_targets, cplx xi) {
    if (zeros.size() != w_targets.size()) {
        throw std::invalid_argument("build_bmoa_interpolant: zero/target size mismatch");
    }
    if (std::abs(std::abs(xi) - 1.0) > 1e-12) {
        throw std::domain_error("build_bmoa_interpolant: xi must lie on the unit circle");
    }
    BlaschkeProduct B(zeros);
    const double delta = B.separation_constant();
    if (!(delta > 0.0)) throw std::domain_error("build_bmoa_interpolant: zeros not separated");

    double S = 0.0;
    for (size_t n = 0; n < zeros.size(); ++n) {
        S = std::max(S, (1.0 - std::norm(zeros[n])) * std::abs(w_targets[n]));
    }

    std::vector<cplx> nu(zeros.size());
    const double nu_cap = (S + 2.0) / delta;
    for (size_t n = 0; n < zeros.size(); ++n) {
        const cplx bp = B.derivative(zeros[n]);
        nu[n] = (w_targets[n] - 1.0 / (xi - zeros[n])) / bp;
        if (std::abs(nu[n]) > nu_cap * (1.0 + 1e-9)) {
            std::ostringstream os;
            os << "build_bmoa_interpolant: |nu_" << n << "| = " << std::abs(nu[n])
               << " exceeds (S+2)/delta = " << nu_cap;
            throw std::runtime_error(os.str());
        }
    }

    PickSolution ps = pick_solve(InterpolationProblem{zeros, nu, std::nullopt});

    const cplx log_inv_xi = -std::log(xi);  // branch fixed once: Log(1/xi)
    AnalyticOracle h = ps.h;
    AnalyticOracle g{[B, h, xi, log_inv_xi](cplx center, int order, double scale) {
                         Jet z = Jet::variable(center, scale, order);
                         Jet logterm = Jet::constant(log_inv_xi, center, scale, order) -
                                       (kOne - z * (1.0 / xi)).log();
                         return B.jet(center, order, scale) * h.jet_at(center, order, scale) +
                                logterm;
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};

    double resid = 0.0;
    for (size_t n = 0; n < zeros.size(); ++n) {
        resid = std::max(resid, std::abs(g.derivative(zeros[n]) - w_targets[n]));
    }

    return BmoaInterpolant{std::move(g), std::move(h), std::move(B), xi,
                           delta, S, ps.norm_bound, resid};
}

WitnessBundle build_nonnormal_witness(std::vector<cplx> zeros, cplx xi) {
    if (zeros.empty()) throw std::invalid_argument("build_nonnormal_witness: no zeros");
    if (xi == cplx(0.0)) {
        // default: boundary direction of the deepest node
        cplx deepest = zeros[0];
        for (const cplx& z : zeros) {
            if (std::abs(z) > std::abs(deepest)) deepest = z;
        }
        if (deepest == cplx(0.0)) throw std::domain_error("build_nonnormal_witness: no direction");
        xi = deepest / std::abs(deepest);
    }

    BlaschkeProduct B(zeros);
    std::vector<cplx> w(zeros.size());
    for (size_t n = 0; n < zeros.size(); ++n) {
        const Jet bj = B.jet(zeros[n], 2, 0.5 * boundary_distance(zeros[n]));
        const cplx b1 = bj.derivative(1), b2 = bj.derivative(2);
        w[n] = -0.5 * b2 / b1;
    }

    BmoaInterpolant bi = build_bmoa_interpolant(zeros, w, xi);
    const AnalyticOracle g = bi.g;

    if (bi.interpolation_residual > 1e-7) {
        std::ostringstream os;
        os << "build_nonnormal_witness: interpolation residual " << bi.interpolation_residual
           << " too large for removability";
        throw std::runtime_error(os.str());
    }

    AnalyticOracle f{[B, g](cplx center, int order, double scale) {
                         return B.jet(center, order, scale) * g.jet_at(center, order, scale).exp();
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};

    // A = -(B'' + 2 B' g')/B - (g')^2 - g''. At the prescribed zeros the
    // interpolation makes the numerator vanish with B; the quotient is taken
    // deflated there (the removable-singularity value).
    AnalyticOracle A{[B, g](cplx center, int order, double scale) {
                         const int m = order + 2;
                         Jet bj = B.jet(center, m + 1, scale);
                         Jet gj = g.jet_at(center, m + 1, scale);
                         Jet b1 = bj.differentiated();
                         Jet b2 = b1.differentiated();
                         Jet g1 = gj.differentiated();
                         Jet g2 = g1.differentiated();
                         const int n = std::min(b2.order(), g2.order());
                         Jet num = b2.truncated(n) + cplx(2.0) * b1.truncated(n) * g1.truncated(n);
                         Jet den = bj.truncated(n);
                         Jet ratio = (std::abs(den.value()) < 1e-9 * std::abs(den.coeff(1)))
                                         ? Jet::divide_deflated(num, den)
                                         : num / den;
                         Jet tail = g1.truncated(ratio.order()) * g1.truncated(ratio.order()) +
                                    g2.truncated(ratio.order());
                         return ((-ratio) - tail).truncated(order);
                     },
                     [](cplx z) { return 0.4 * boundary_distance(z); }};

    WitnessBundle wb{std::move(f), std::move(A), {}, zeros};
    wb.metadata["delta"] = bi.delta;
    wb.metadata["S"] = bi.S;
    wb.metadata["h_norm"] = bi.h_norm;
    wb.metadata["h_min_norm"] = bi.h_norm / 1.05;
    wb.metadata["xi_re"] = xi.real();
    wb.metadata["xi_im"] = xi.imag();
    wb.metadata["truncation"] = double(zeros.size());
    wb.metadata["interpolation_residual"] = bi.interpolation_residual;
    return wb;
}

WitnessBundle build_prescribed_values_witness(const std::vector<cplx>& alpha,
                                              const std::vector<cplx>& beta, cplx a, cplx b) {
    if (a == cplx(0.0) || b == cplx(0.0) || a == b) {
        throw std::domain_error("build_prescribed_values_witness: a, b must be non-zero and distinct");
    }
    BlaschkeProduct Ba(alpha), Bb(beta);

    // corona-type condition (only meaningful when both sequences are present)
    double mu = 2.0;
    if (!alpha.empty() && !beta.empty()) {
        GridSpec grid{12, 64, 4096};
        grid.for_each([&](cplx z) {
            mu = std::min(mu, std::abs(Ba.value(z)) + std::abs(Bb.value(z)));
        });
        if (mu < 1e-6) {
            std::ostringstream os;
            os << "build_prescribed_values_witness: corona estimate mu = " << mu << " below 1e-6";
            throw std::runtime_error(os.str());
        }
    }

    std::vector<cplx> nodes = alpha;
    nodes.insert(nodes.end(), beta.begin(), beta.end());
    std::vector<cplx> targets(alpha.size(), cplx(0.0));
    targets.insert(targets.end(), beta.size(), cplx(1.0));

    AnalyticOracle h = nodes.empty() ? oracle_constant(0.0)
                                     : pick_solve(InterpolationProblem{nodes, targets, {}}).h;

    const cplx log_a = std::log(a);
    const cplx lambda = std::log(b / a);  // branch fixed once

    AnalyticOracle f{[h, log_a, lambda](cplx center, int order, double scale) {
                         Jet hj = h.jet_at(center, order, scale);
                         return (hj * lambda + log_a).exp();
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};
    AnalyticOracle A{[h, lambda](cplx center, int order, double scale) {
                         Jet hj = h.jet_at(center, order + 2, scale);
                         Jet h1 = hj.differentiated();
                         Jet h2 = h1.differentiated();
                         Jet h1t = h1.truncated(h2.order());
                         return (-(h1t * lambda) * (h1t * lambda) - h2 * lambda).truncated(order);
                     },
                     [](cplx z) { return 0.5 * boundary_distance(z); }};

    WitnessBundle wb{std::move(f), std::move(A), {}, {}};
    wb.metadata["mu"] = mu;
    wb.metadata["a_re"] = a.real();
    wb.metadata["a_im"] = a.imag();
    wb.metadata["b_re"] = b.real();
    wb.metadata["b_im"] = b.imag();
    return wb;
}

AnalyticOracle lappan_function() {
    return oracle_from([](const Jet& z) {
        Jet L = log_one_minus(z);
        const cplx e1 = cplx(-0.01, -0.10);  // -(1+10i)/100
        const cplx e2 = cplx(0.0, -0.01);    // -i/100
        return (L * e1).exp() - (L * e2).exp();
    });
}

}  // namespace discosc
