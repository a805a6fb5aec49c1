#include <doctest.h>

#include "discosc/constructions.hpp"
#include "discosc/locator.hpp"
#include "discosc/ode.hpp"

using namespace discosc;

TEST_CASE("count_zeros on Blaschke products") {
    BlaschkeProduct B({cplx(0.0), cplx(0.5)});
    const AnalyticOracle f = B.oracle();
    CHECK(count_zeros(f, cplx(0.0), 0.25) == 1);
    CHECK(count_zeros(f, cplx(0.0), 0.75) == 2);
}

TEST_CASE("count additivity over a subdivision") {
    BlaschkeProduct B({cplx(0.3, 0.2), cplx(-0.4, 0.1), cplx(0.1, -0.5), cplx(0.6)});
    const AnalyticOracle f = B.oracle();
    const int total = count_zeros(f, cplx(0.0), 0.8);
    CHECK(total == 4);
    // non-overlapping zero-free-boundary contours around each zero
    int sum = 0;
    for (const cplx& z : B.zeros()) sum += count_zeros(f, z, 0.12);
    CHECK(sum == total);
    // and a contour avoiding them all counts nothing
    CHECK(count_zeros(f, cplx(-0.1, 0.55), 0.1) == 0);
}

TEST_CASE("count_zeros: gamma solution inside |z| = 0.95") {
    const auto wb = example_gamma(1.0);
    const SolutionField f1(wb.A, cplx(0.0), cplx(0.0), cplx(1.0));
    CHECK(count_zeros(f1.oracle(), cplx(0.0), 0.95) == 3);  // 0 and +-tanh(pi/2)
}

TEST_CASE("locate_zeros: single complex zero of a Blaschke product") {
    BlaschkeProduct B({cplx(0.3, 0.4)});
    const ZeroSet zs = locate_zeros(B.oracle(), cplx(0.0), 0.8, 1e-12);
    REQUIRE(zs.points.size() == 1);
    CHECK(std::abs(zs.points[0] - cplx(0.3, 0.4)) < 1e-12);
    CHECK(zs.multiplicities[0] == 1);
    CHECK(zs.certified_count == 1);
}

TEST_CASE("locate_zeros: several zeros with certification") {
    BlaschkeProduct B({cplx(0.3, 0.4), cplx(-0.25, -0.55), cplx(0.62, 0.0)});
    const ZeroSet zs = locate_zeros(B.oracle(), cplx(0.0), 0.85, 1e-12);
    REQUIRE(zs.points.size() == 3);
    CHECK(zs.certified_count == 3);
    for (const cplx& truth : B.zeros()) {
        double best = 1.0;
        for (const cplx& p : zs.points) best = std::min(best, std::abs(p - truth));
        CHECK(best < 1e-11);
    }
}

TEST_CASE("real scan: gamma = 1 zero lattice on (-0.9999, 0.9999)") {
    const auto wb = example_gamma(1.0);
    const SolutionField f1(wb.A, cplx(0.0), cplx(0.0), cplx(1.0));
    const auto zs = locate_real_zeros(f1.oracle(), -0.9999, 0.9999);
    REQUIRE(zs.size() == 7);  // n = -3..3; tanh(2 pi) = 0.999993 stays outside
    for (int n = -3; n <= 3; ++n) {
        const double truth = (n == 0)   ? 0.0
                             : (n > 0)  ? gamma_zero(1.0, n)
                                        : -gamma_zero(1.0, -n);
        CHECK(std::abs(zs[static_cast<size_t>(n + 3)] - truth) < 1e-9);
    }
}

TEST_CASE("real scan: q = 2 zeros for n = 1..6") {
    const auto ex = example_q(2.0);
    const AnalyticOracle& f = ex.bundle.f;
    const double hi = q_zero(2.0, 6) + 0.2 * q_zero_gap(2.0, 6);
    const auto zs = locate_real_zeros(f, 0.0, std::min(hi, 0.9999));
    REQUIRE(zs.size() >= 6);
    for (int n = 1; n <= 6; ++n) {
        double best = 1.0;
        for (double z : zs) best = std::min(best, std::abs(z - q_zero(2.0, n)));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("critical points: Example-type quotient has one at the origin") {
    BlaschkeProduct B({cplx(0.5), cplx(-0.5)});
    const auto wb = example_blaschke_quotient(B);
    const ZeroSet crit = locate_critical_points(wb.f, cplx(0.0), 0.4, 1e-12);
    REQUIRE(crit.points.size() == 1);
    CHECK(std::abs(crit.points[0]) < 1e-12);
}

TEST_CASE("critical points: one in each real zero gap of the gamma example") {
    const auto wb = example_gamma(1.0);
    const SolutionField f1(wb.A, cplx(0.0), cplx(0.0), cplx(1.0));
    const auto crits = locate_real_zeros(f1.derivative_oracle(), 1e-6, 0.995);
    const double z1 = gamma_zero(1.0, 1), z2 = gamma_zero(1.0, 2);
    int in01 = 0, in12 = 0;
    for (double a : crits) {
        if (a > 0.0 && a < z1) ++in01;
        if (a > z1 && a < z2) ++in12;
    }
    CHECK(in01 == 1);
    CHECK(in12 == 1);
}

TEST_CASE("multiplicity from jets") {
    AnalyticOracle zsq = oracle_from([](const Jet& z) { return z * z; });
    CHECK(multiplicity(zsq, cplx(0.0)) == 2);

    // triple Blaschke zero: B' vanishes to order 2, so does f' of the quotient
    BlaschkeProduct B3({cplx(0.4), cplx(0.4), cplx(0.4)});
    const auto wb = example_blaschke_quotient(B3);
    AnalyticOracle fprime = oracle_derivative(wb.f);
    CHECK(multiplicity(fprime, cplx(0.4)) == 2);

    // doubled zero: B' still has a simple zero there
    BlaschkeProduct B2({cplx(0.4), cplx(0.4)});
    AnalyticOracle bp = oracle_derivative(B2.oracle());
    CHECK(multiplicity(bp, cplx(0.4)) == 1);

    CHECK_THROWS_AS(multiplicity(oracle_constant(cplx(0.0)), cplx(0.1)), std::domain_error);
}

TEST_CASE("located zeros of solved bases are simple and disjoint") {
    const auto wb = example_gamma(1.0);
    const SolutionBasis basis = solution_basis(wb.A, cplx(0.0));
    const auto z1 = locate_real_zeros(basis.f1.oracle(), -0.99, 0.99);
    const auto z2 = locate_real_zeros(basis.f2.oracle(), -0.99, 0.99);
    for (double a : z1) {
        CHECK(multiplicity(basis.f1.oracle(), cplx(a)) == 1);
        for (double b : z2) CHECK(std::abs(a - b) > 1e-9);
    }
}
