#include "discosc/pick.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "discosc/disc_point.hpp"

namespace discosc {

namespace {

std::vector<cplx> pick_matrix(const std::vector<cplx>& z, const std::vector<cplx>& t, double c) {
    const size_t n = z.size();
    std::vector<cplx> P(n * n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
            P[j * n + k] = (c * c - t[j] * std::conj(t[k])) / (1.0 - z[j] * std::conj(z[k]));
        }
    }
    return P;
}

/// LDL^H pivots of a Hermitian matrix, in factorization order. Breakdown
/// (a vanishing pivot with a non-trivial column below it) is reported as an
/// infinite negative pivot: such a matrix cannot be PSD.
std::vector<double> ldl_pivots(std::vector<cplx> P, size_t n, double tol) {
    std::vector<double> d(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        const double piv = P[i * n + i].real();
        d[i] = piv;
        if (piv < -tol) return d;
        if (piv <= tol) {
            // PSD needs |P_ji|^2 <= P_ii P_jj; with P_ii ~ 0 the column must vanish
            for (size_t j = i + 1; j < n; ++j) {
                const double rhs = std::max(piv, 0.0) * std::max(P[j * n + j].real(), 0.0);
                if (std::norm(P[j * n + i]) > rhs + tol * tol) {
                    d[i] = -1e300;
                    return d;
                }
            }
            continue;  // genuine semidefinite direction, drop the row/column
        }
        for (size_t j = i + 1; j < n; ++j) {
            const cplx lji = P[j * n + i] / piv;
            for (size_t k = i + 1; k <= j; ++k) {
                P[j * n + k] -= lji * std::conj(P[k * n + i]);
            }
        }
    }
    return d;
}

double max_diag(const std::vector<cplx>& P, size_t n) {
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(P[i * n + i]));
    return m;
}

}  // namespace

bool pick_matrix_psd(const std::vector<cplx>& nodes, const std::vector<cplx>& targets, double c) {
    const size_t n = nodes.size();
    std::vector<cplx> P = pick_matrix(nodes, targets, c);
    const double scale = std::max(max_diag(P, n), 1e-300);
    const double tol = 1e-12 * scale * double(n);
    const std::vector<double> d = ldl_pivots(std::move(P), n, tol);
    for (double p : d) {
        if (p < -tol) return false;
    }
    return true;
}

double pick_min_norm(const std::vector<cplx>& nodes, const std::vector<cplx>& targets) {
    if (nodes.size() != targets.size()) throw std::invalid_argument("pick: node/target size mismatch");
    if (nodes.empty()) return 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(nodes[i]) >= 1.0) throw std::domain_error("pick: node outside the disc");
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            if (pseudo_distance(nodes[i], nodes[j]) <= 1e-10) {
                throw std::invalid_argument("pick: coincident nodes");
            }
        }
    }
    double lo = 0.0;
    for (const cplx& t : targets) lo = std::max(lo, std::abs(t));
    if (pick_matrix_psd(nodes, targets, lo)) return lo;
    double hi = std::max(1.0, 2.0 * lo);
    while (!pick_matrix_psd(nodes, targets, hi)) {
        hi *= 2.0;
        if (hi > 1e8) throw std::runtime_error("pick_min_norm: no feasible norm below 1e8");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pick_matrix_psd(nodes, targets, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

namespace {

struct SchurData {
    std::vector<cplx> nodes;
    std::vector<cplx> w;  // reduced value at each level's own node
    double scale_c;       // h = scale_c * H_1
};

/// H_k = (b_k H_{k+1} + w_k) / (1 + conj(w_k) b_k H_{k+1}), H_n = w_n.
Jet schur_eval(const SchurData& s, cplx center, int order, double scale) {
    const size_t n = s.nodes.size();
    const Jet z = Jet::variable(center, scale, order);
    Jet H = Jet::constant(s.w[n - 1], center, scale, order);
    for (size_t k = n - 1; k-- > 0;) {
        const cplx zk = s.nodes[k];
        Jet b = (z - zk) / (1.0 - std::conj(zk) * z);
        Jet bh = b * H;
        H = (bh + s.w[k]) / (1.0 + std::conj(s.w[k]) * bh);
    }
    H *= s.scale_c;
    return H;
}

}  // namespace

PickSolution pick_solve(const InterpolationProblem& problem) {
    const std::vector<cplx>& z = problem.nodes;
    const std::vector<cplx>& t = problem.targets;
    if (z.size() != t.size()) throw std::invalid_argument("pick_solve: node/target size mismatch");

    if (z.empty()) {
        return PickSolution{oracle_constant(0.0), 0.0, 0.0};
    }

    const double cstar = pick_min_norm(z, t);
    if (problem.norm_cap && cstar > *problem.norm_cap) {
        std::ostringstream os;
        os << "pick_solve: minimal norm " << cstar << " exceeds cap " << *problem.norm_cap;
        throw std::runtime_error(os.str());
    }
    double C = 1.05 * cstar;
    if (C == 0.0) {
        // all targets zero: h == 0
        return PickSolution{oracle_constant(0.0), 0.0, 0.0};
    }

    // Conditioning probe at the strictly feasible norm.
    {
        std::vector<cplx> P = pick_matrix(z, t, C);
        const size_t n = z.size();
        const double tol = 1e-12 * std::max(max_diag(P, n), 1e-300) * double(n);
        const std::vector<double> d = ldl_pivots(std::move(P), n, tol);
        double dmin = 1e300, dmax = 0.0;
        for (double p : d) {
            dmin = std::min(dmin, std::abs(p));
            dmax = std::max(dmax, std::abs(p));
        }
        if (dmin <= 0.0 || dmax / dmin > 1e12) {
            throw std::runtime_error(
                "pick_solve: Pick matrix condition number > 1e12; prune nearby nodes");
        }
    }

    SchurData s;
    s.nodes = z;
    s.scale_c = C;
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) v[i] = t[i] / C;

    // Schur reduction: peel one node per level.
    std::vector<cplx> nodes = z;
    for (size_t k = 0; k < nodes.size(); ++k) {
        const cplx wk = v[k];
        if (std::abs(wk) >= 1.0 - 1e-12) {
            throw std::runtime_error("pick_solve: Schur recursion left the disc (ill conditioning)");
        }
        s.w.push_back(wk);
        for (size_t j = k + 1; j < nodes.size(); ++j) {
            const cplx mob = (v[j] - wk) / (1.0 - std::conj(wk) * v[j]);
            const cplx b = (nodes[j] - nodes[k]) / (1.0 - std::conj(nodes[k]) * nodes[j]);
            v[j] = mob / b;
        }
    }

    AnalyticOracle h{
        [s](cplx center, int order, double scale) { return schur_eval(s, center, order, scale); },
        [](cplx zz) { return 0.5 * boundary_distance(zz); }};
    return PickSolution{std::move(h), cstar, C};
}

}  // namespace discosc
