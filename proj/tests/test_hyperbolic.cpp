#include <doctest.h>

#include <random>

#include "discosc/disc_point.hpp"

using namespace discosc;

namespace {

std::mt19937_64 rng(20240917);

cplx random_point(double rmax = 0.98) {
    std::uniform_real_distribution<double> ur(0.0, rmax), ua(0.0, 2.0 * M_PI);
    const double r = std::sqrt(ur(rng) * rmax);  // area-uniform-ish
    const double t = ua(rng);
    return cplx(r * std::cos(t), r * std::sin(t));
}

}  // namespace

TEST_CASE("construction rejects the closed boundary") {
    CHECK_THROWS_AS(DiscPoint(cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(cplx(0.8, 0.7)), std::domain_error);
    CHECK_NOTHROW(DiscPoint(cplx(0.99999, 0.0)));
}

TEST_CASE("pseudo distance closed-form values") {
    CHECK(pseudo_distance(cplx(0.0), cplx(0.5)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pseudo_distance(cplx(0.3, 0.2), cplx(0.3, 0.2)) == 0.0);
    CHECK(pseudo_distance(cplx(0.5), cplx(-0.5)) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("hyperbolic distance closed-form values") {
    CHECK(hyperbolic_distance(cplx(0.0), cplx(0.5)) ==
          doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
    CHECK(hyperbolic_distance(cplx(0.1, -0.4), cplx(0.1, -0.4)) == 0.0);
}

TEST_CASE("gamma-lattice consecutive gap is pi/(2 gamma)") {
    // zeros tanh(pi n / (2 gamma)); gap computed in boundary-gap space
    for (double gamma : {0.5, 1.0, 2.0}) {
        for (int n = 1; n <= 7; ++n) {
            const double e1 = std::exp(-M_PI * n / gamma);
            const double e2 = std::exp(-M_PI * (n + 1) / gamma);
            const double a1 = 2.0 * e1 / (1.0 + e1);
            const double a2 = 2.0 * e2 / (1.0 + e2);
            CHECK(hyperbolic_distance_from_boundary_gaps(a1, a2) ==
                  doctest::Approx(M_PI / (2.0 * gamma)).epsilon(1e-12));
        }
    }
}

TEST_CASE("automorphism values and involution") {
    const cplx a(0.5, 0.0);
    CHECK(automorphism(a, cplx(0.0)) == a);
    CHECK(std::abs(automorphism(a, a)) == 0.0);
    CHECK(automorphism(a, cplx(0.25)).real() == doctest::Approx(0.25 / 0.875).epsilon(1e-15));

    for (int i = 0; i < 2000; ++i) {
        const cplx aa = random_point(), z = random_point();
        CHECK(std::abs(automorphism(aa, automorphism(aa, z)) - z) < 1e-13);
    }
}

TEST_CASE("Moebius invariance of the pseudo distance") {
    for (int i = 0; i < 2000; ++i) {
        const cplx a = random_point(), u = random_point(), v = random_point();
        const double d1 = pseudo_distance(u, v);
        const double d2 = pseudo_distance(automorphism(a, u), automorphism(a, v));
        CHECK(std::abs(d1 - d2) < 1e-12);
    }
}

TEST_CASE("rho_h == artanh(rho_p) on random samples") {
    for (int i = 0; i < 2000; ++i) {
        const cplx u = random_point(), v = random_point();
        CHECK(hyperbolic_distance(u, v) ==
              doctest::Approx(std::atanh(pseudo_distance(u, v))).epsilon(1e-14));
    }
}

TEST_CASE("midpoint: radial case, identity case, symmetry, equidistance") {
    CHECK(hyperbolic_midpoint(DiscPoint(0.0, 0.0), DiscPoint(0.8, 0.0)).value().real() ==
          doctest::Approx(0.5).epsilon(1e-14));
    const DiscPoint u(0.3, -0.1);
    CHECK(hyperbolic_midpoint(u, u).value() == u.value());

    for (int i = 0; i < 500; ++i) {
        const DiscPoint a(random_point()), b(random_point());
        const DiscPoint m = hyperbolic_midpoint(a, b);
        const DiscPoint m2 = hyperbolic_midpoint(b, a);
        CHECK(std::abs(m.value() - m2.value()) < 1e-12);
        const double d = hyperbolic_distance(a, b);
        CHECK(std::abs(hyperbolic_distance(a, m) - 0.5 * d) < 1e-12);
        CHECK(std::abs(hyperbolic_distance(m, b) - 0.5 * d) < 1e-12);
    }
}

TEST_CASE("midpoint agrees with brute-force bisection along the geodesic") {
    // independent oracle: parametrize the geodesic through phi_u and bisect
    // on equal hyperbolic distances
    for (int i = 0; i < 50; ++i) {
        const cplx u = random_point(0.9), v = random_point(0.9);
        if (u == v) continue;
        const cplx w = automorphism(u, v);
        const cplx dir = w / std::abs(w);
        double lo = 0.0, hi = std::abs(w);
        for (int it = 0; it < 80; ++it) {
            const double s = 0.5 * (lo + hi);
            const cplx cand = automorphism(u, s * dir);
            if (hyperbolic_distance(cand, u) < hyperbolic_distance(cand, v)) {
                lo = s;
            } else {
                hi = s;
            }
        }
        const cplx bisected = automorphism(u, 0.5 * (lo + hi) * dir);
        const cplx mid = hyperbolic_midpoint(DiscPoint(u), DiscPoint(v)).value();
        CHECK(std::abs(bisected - mid) < 1e-10);
    }
}
