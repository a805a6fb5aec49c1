#include <doctest.h>

#include <random>

#include "discosc/jet.hpp"
#include "discosc/oracle.hpp"

using namespace discosc;

namespace {

std::mt19937_64 rng(77001);

cplx random_coeff() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return cplx(u(rng), u(rng));
}

Jet random_poly_jet(cplx center, double scale, int order, int degree) {
    // jet of a random polynomial in z, expanded at `center`
    Jet z = Jet::variable(center, scale, order);
    Jet acc = Jet::constant(random_coeff(), center, scale, order);
    for (int d = 0; d < degree; ++d) acc = acc * z + random_coeff();
    return acc;
}

}  // namespace

TEST_CASE("product coefficients equal brute-force convolution") {
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 6;
        Jet a(cplx(0.1, 0.2), 0.7, n), b(cplx(0.1, 0.2), 0.7, n);
        for (int k = 0; k <= n; ++k) {
            a.coeff(k) = random_coeff();
            b.coeff(k) = random_coeff();
        }
        const Jet p = a * b;
        for (int k = 0; k <= n; ++k) {
            cplx s(0.0);
            for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
            CHECK(std::abs(p.coeff(k) - s) < 1e-14);
        }
    }
}

TEST_CASE("division inverts multiplication") {
    for (int trial = 0; trial < 200; ++trial) {
        Jet a = random_poly_jet(cplx(0.0), 0.5, 8, 5);
        Jet b = random_poly_jet(cplx(0.0), 0.5, 8, 5);
        b.coeff(0) += 3.0;  // keep the constant term away from zero
        const Jet q = (a * b) / b;
        for (int k = 0; k <= 8; ++k) CHECK(std::abs(q.coeff(k) - a.coeff(k)) < 1e-12);
    }
}

TEST_CASE("exp/log/sqrt/pow round trips") {
    for (int trial = 0; trial < 200; ++trial) {
        Jet a = random_poly_jet(cplx(0.2, -0.1), 0.4, 8, 4);
        a.coeff(0) = 2.0 + 0.3 * random_coeff();  // inside the principal domain
        const Jet l = a.log();
        const Jet back = l.exp();
        for (int k = 0; k <= 8; ++k) CHECK(std::abs(back.coeff(k) - a.coeff(k)) < 1e-12);
        const Jet s = a.sqrt();
        const Jet sq = s * s;
        for (int k = 0; k <= 8; ++k) CHECK(std::abs(sq.coeff(k) - a.coeff(k)) < 1e-12);
        const Jet p3 = a.pow(cplx(3.0));
        const Jet cube = a * a * a;
        for (int k = 0; k <= 8; ++k) CHECK(std::abs(p3.coeff(k) - cube.coeff(k)) < 5e-12);
    }
}

TEST_CASE("sin against sum formula and derivatives of the exponential") {
    const cplx c(0.3, 0.1);
    Jet z = Jet::variable(c, 0.5, 10);
    const Jet s = z.sin();
    // derivative of sin is cos in jets
    const Jet sc = z.sin_cos().second;
    const Jet ds = s.differentiated();
    for (int k = 0; k <= 9; ++k) CHECK(std::abs(ds.coeff(k) - sc.coeff(k)) < 1e-13);

    CHECK(std::abs(s.value() - std::sin(c)) < 1e-15);
    CHECK(std::abs(s.derivative(1) - std::cos(c)) < 1e-14);
    CHECK(std::abs(s.derivative(2) + std::sin(c)) < 1e-13);
}

TEST_CASE("eval agrees with direct evaluation and honors the scale") {
    Jet z = Jet::variable(cplx(0.9), 0.05, 48);  // near-boundary scaled jet
    const Jet f = (cplx(1.0) - z * z).pow(cplx(-2.0));
    const cplx at = cplx(0.93);
    const cplx expect = std::pow(1.0 - at * at, -2.0);
    CHECK(std::abs(f.eval(at) - expect) / std::abs(expect) < 1e-10);
    const auto [v, d] = f.eval_with_derivative(at);
    CHECK(std::abs(v - expect) / std::abs(expect) < 1e-10);
    const cplx dexpect = 4.0 * at * std::pow(1.0 - at * at, -3.0);
    CHECK(std::abs(d - dexpect) / std::abs(dexpect) < 1e-9);
}

TEST_CASE("rebased jets reproduce the function at the new center") {
    Jet z = Jet::variable(cplx(0.0), 0.5, 24);
    const Jet f = (z + cplx(2.0)).log() * (z - cplx(0.3, 0.1));
    const Jet g = f.rebased(cplx(0.1, 0.05), 0.3, 24);
    const cplx at(0.15, 0.02);
    CHECK(std::abs(g.eval(at) - f.eval(at)) < 1e-12);
    CHECK(std::abs(g.value() - f.eval(cplx(0.1, 0.05))) < 1e-13);
}

TEST_CASE("compose: jets of g(m(z)) match direct evaluation") {
    Jet m = Jet::variable(cplx(0.2), 0.3, 8);
    m = (m * m + cplx(0.1));  // inner map
    Jet u = Jet::variable(m.value(), 0.4, 8);
    const Jet g = (u + cplx(2.0)).log();
    const Jet comp = compose(g, m);
    const cplx at(0.25, 0.03);
    const cplx inner = at * at + cplx(0.1);
    CHECK(std::abs(comp.eval(at) - std::log(inner + 2.0)) < 1e-10);
}

TEST_CASE("deflated division takes the removable value") {
    // (z^2 + z) / z at 0 -> z + 1
    Jet z = Jet::variable(cplx(0.0), 1.0, 6);
    const Jet num = z * z + z;
    const Jet q = Jet::divide_deflated(num, z);
    CHECK(std::abs(q.value() - 1.0) < 1e-15);
    CHECK(std::abs(q.coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(q.coeff(2)) < 1e-15);
}

TEST_CASE("mixed centers or scales are rejected") {
    Jet a = Jet::variable(cplx(0.0), 1.0, 4);
    Jet b = Jet::variable(cplx(0.1), 1.0, 4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    Jet c = Jet::variable(cplx(0.0), 0.5, 4);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("oracle combinators: derivative and product") {
    AnalyticOracle f = oracle_from([](const Jet& z) { return (z * z) * z; });
    AnalyticOracle df = oracle_derivative(f);
    CHECK(std::abs(df.value(cplx(0.5)) - 0.75) < 1e-13);
    AnalyticOracle p = oracle_product(f, f);
    CHECK(std::abs(p.value(cplx(0.5)) - std::pow(0.5, 6)) < 1e-13);
}
