#include <doctest.h>

#include <random>

#include "discosc/blaschke.hpp"

using namespace discosc;

namespace {

std::mt19937_64 rng(51423);

cplx random_zero(double rmax = 0.9) {
    std::uniform_real_distribution<double> ur(0.05, rmax), ua(0.0, 2.0 * M_PI);
    const double r = ur(rng), t = ua(rng);
    return cplx(r * std::cos(t), r * std::sin(t));
}

}  // namespace

TEST_CASE("single-factor values") {
    BlaschkeProduct B({cplx(0.0)});
    CHECK(std::abs(B.value(cplx(0.3)) - 0.3) < 1e-15);  // B(z) = z

    BlaschkeProduct B2({cplx(0.5), cplx(-0.5)});
    // B = (0.25 - z^2)/(1 - 0.25 z^2); B'(0) = 0
    CHECK(std::abs(B2.value(cplx(0.0)) - 0.25) < 1e-15);
    CHECK(std::abs(B2.derivative(cplx(0.0))) < 1e-14);

    BlaschkeProduct B3({cplx(0.5)});
    CHECK((1.0 - 0.25) * std::abs(B3.derivative(cplx(0.5))) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("jet vanishes exactly at stored zeros") {
    BlaschkeProduct B({cplx(0.3, 0.4), cplx(-0.2, 0.1), cplx(0.7)});
    for (const cplx& z : B.zeros()) {
        CHECK(std::abs(B.jet(z, 2, 0.1).value()) == 0.0);
    }
}

TEST_CASE("separation constant: spec cases") {
    CHECK(BlaschkeProduct({cplx(0.5)}).separation_constant() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(BlaschkeProduct({cplx(0.0), cplx(0.5)}).separation_constant() ==
          doctest::Approx(0.5).epsilon(1e-12));

    std::vector<cplx> dyadic;
    for (int n = 1; n <= 10; ++n) dyadic.push_back(cplx(1.0 - std::pow(2.0, -n)));
    const auto sep = BlaschkeProduct(dyadic).separation();
    CHECK(sep.derivative_form > 0.0);
    CHECK(sep.derivative_form < 1.0);
    CHECK(std::abs(sep.derivative_form - sep.product_form) < 1e-10);
}

TEST_CASE("duplicate zero rejected by separation_constant") {
    BlaschkeProduct B({cplx(0.4), cplx(0.4)});
    CHECK_THROWS_AS(B.separation_constant(), std::invalid_argument);
}

TEST_CASE("derivative identity equals pseudo-hyperbolic product, random sets") {
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nd(1, 12);
        const int n = nd(rng);
        std::vector<cplx> zs;
        for (int i = 0; i < n; ++i) zs.push_back(random_zero());
        const auto sep = BlaschkeProduct(zs).separation();
        CHECK(std::abs(sep.derivative_form - sep.product_form) <
              1e-10 * std::max(1.0, sep.derivative_form));
    }
}

TEST_CASE("modulus below one inside, one on the boundary") {
    std::vector<cplx> zs = {random_zero(), random_zero(), random_zero()};
    BlaschkeProduct B(zs);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI), ur(0.0, 0.95);
    for (int i = 0; i < 500; ++i) {
        const double t = ua(rng);
        const cplx inside = ur(rng) * cplx(std::cos(t), std::sin(t));
        CHECK(std::abs(B.value(inside)) < 1.0);
        const cplx boundary(std::cos(t), std::sin(t));
        Jet z = Jet::variable(boundary, 1.0, 0);
        // evaluate the finite product directly on the circle
        cplx val(1.0);
        for (const cplx& zn : zs) {
            const cplx unimod = std::abs(zn) / zn;
            val *= unimod * (zn - boundary) / (1.0 - std::conj(zn) * boundary);
        }
        CHECK(std::abs(std::abs(val) - 1.0) < 1e-12);
    }
}
