#include "doctest.h"

#include "disclab/jet.hpp"

using namespace disclab;

namespace {
const cplx kZ0(0.3, 0.2);

// g(z) = exp(z^2 + 1/(2-z)), derivatives at 0.3+0.2i frozen from a 50-digit
// reference evaluation
const cplx kG0(1.844813714018106685561, 0.3514655065249177769823);
const cplx kG1(1.550900861024913483789, 1.211609250742280727638);
const cplx kG3(11.49687125222185409894, 12.22987127958285406504);
const cplx kG6(628.348472800658380879, 1130.235890321025373036);

Jet composite_g(cplx z, int order) {
    Jet zv = Jet::variable(z, order);
    return exp(zv * zv + cplx(1.0) / (cplx(2.0) - zv));
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("factories fill value and first-derivative lanes") {
    Jet c = Jet::constant(cplx(2.0, -1.0), 4);
    CHECK(c.order() == 4);
    CHECK(c.value() == cplx(2.0, -1.0));
    for (int k = 1; k <= 4; ++k) CHECK(c[k] == cplx(0.0));

    Jet v = Jet::variable(kZ0, 3);
    CHECK(v.value() == kZ0);
    CHECK(v[1] == cplx(1.0));
    CHECK(v[2] == cplx(0.0));
}

TEST_CASE("composite exp/quotient jet matches the frozen reference derivatives") {
    Jet g = composite_g(kZ0, 6);
    CHECK(rel(g[0], kG0) < 1e-14);
    CHECK(rel(g[1], kG1) < 1e-14);
    CHECK(rel(g[3], kG3) < 1e-13);
    CHECK(rel(g[6], kG6) < 1e-13);
}

TEST_CASE("product rule is exact against hand-assembled Leibniz data") {
    Jet a = Jet::variable(kZ0, 3);        // z
    Jet b = exp(Jet::variable(kZ0, 3));   // e^z
    Jet p = a * b;                        // z e^z
    cplx e = std::exp(kZ0);
    CHECK(rel(p[0], kZ0 * e) < 1e-15);
    CHECK(rel(p[1], (kZ0 + 1.0) * e) < 1e-15);
    CHECK(rel(p[2], (kZ0 + 2.0) * e) < 1e-15);
    CHECK(rel(p[3], (kZ0 + 3.0) * e) < 1e-15);
}

TEST_CASE("division round-trips the product") {
    Jet g = composite_g(kZ0, 6);
    Jet h = exp(Jet::variable(kZ0, 6)) + cplx(2.0);
    Jet q = g / h;
    Jet back = q * h;
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(back[k] - g[k]) <= 1e-13 * std::abs(g[k]));
}

TEST_CASE("log inverts exp lane by lane") {
    Jet f = cplx(0.4) * Jet::variable(kZ0, 6) + cplx(0.1, -0.2);
    Jet back = log(exp(f));
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(back[k] - f[k]) < 1e-14);
}

TEST_CASE("principal branch powers match the reference square root") {
    const cplx want(0.8449884581839126597402, -0.1183448117326058090462);
    Jet s = sqrt(cplx(1.0) - Jet::variable(kZ0, 4));
    CHECK(rel(s[0], want) < 1e-15);
    // (sqrt(1-z))' = -1/(2 sqrt(1-z))
    CHECK(rel(s[1], -0.5 / want) < 1e-14);
    Jet sq = square(s);
    CHECK(rel(sq[0], cplx(1.0) - kZ0) < 1e-14);
    CHECK(std::abs(sq[1] - cplx(-1.0)) < 1e-14);
}

TEST_CASE("pow agrees with repeated multiplication for integer exponents") {
    Jet f = composite_g(kZ0, 5);
    Jet cube = pow(f, 3.0);
    Jet direct = f * f * f;
    for (int k = 0; k <= 5; ++k) CHECK(std::abs(cube[k] - direct[k]) <= 1e-12 * std::abs(direct[k]));
}

TEST_CASE("derivative and truncation shift the stack") {
    Jet g = composite_g(kZ0, 6);
    Jet d = g.derivative();
    CHECK(d.order() == 5);
    for (int k = 0; k <= 5; ++k) CHECK(d[k] == g[k + 1]);
    Jet t = g.truncated(2);
    CHECK(t.order() == 2);
    CHECK(t[2] == g[2]);
}

TEST_CASE("domain guards throw") {
    CHECK_THROWS_AS(Jet(-1), std::invalid_argument);
    CHECK_THROWS_AS(Jet(Jet::kMaxOrder + 1), std::invalid_argument);
    CHECK_THROWS_AS(Jet(0).derivative(), std::logic_error);
    Jet zero = Jet::constant(cplx(0.0), 2);
    CHECK_THROWS_AS(composite_g(kZ0, 2) / zero, std::domain_error);
    CHECK_THROWS_AS(log(zero), std::domain_error);
}
