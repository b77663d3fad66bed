#include "doctest.h"

#include <cmath>

#include "disclab/interpolation.hpp"
#include "disclab/measures.hpp"
#include "disclab/ode.hpp"
#include "disclab/report.hpp"

using namespace disclab;

namespace {
ProviderPtr sin_provider(double freq = 1.0) {
    return make_closed_form([freq](cplx z, int order) {
        Jet j(order);
        cplx c = std::cos(freq * z), s = std::sin(freq * z);
        cplx cyc[4] = {s, c, -s, -c};
        cplx scale(1.0);
        for (int k = 0; k <= order; ++k) {
            j[k] = scale * cyc[k % 4];
            scale *= freq;
        }
        return j;
    });
}
ProviderPtr cos_provider(double freq = 1.0) {
    return make_closed_form([freq](cplx z, int order) {
        Jet j(order);
        cplx c = std::cos(freq * z), s = std::sin(freq * z);
        cplx cyc[4] = {c, -s, -c, s};
        cplx scale(1.0);
        for (int k = 0; k <= order; ++k) {
            j[k] = scale * cyc[k % 4];
            scale *= freq;
        }
        return j;
    });
}
}  // namespace

TEST_CASE("derivative provider shifts the jet by one order") {
    ProviderPtr s = sin_provider();
    ProviderPtr sp = make_derivative(s);
    cplx z(0.3, -0.1);
    CHECK(std::abs(sp->value(z) - std::cos(z)) < 1e-15);
    Jet j = sp->jet(z, 2);
    CHECK(std::abs(j[1] + std::sin(z)) < 1e-15);
    CHECK(std::abs(j[2] + std::cos(z)) < 1e-15);
}

TEST_CASE("threshold solves its defining equation and is strictly inside the bound") {
    double eta = earl_eta(0.5);
    CHECK(eta == doctest::Approx(0.02000800640640718).epsilon(1e-12));
    // 25 - sqrt(624) is the exact positive root for delta = 1/2
    CHECK(std::abs(eta - (25.0 - std::sqrt(624.0))) < 1e-12);
    CHECK(12.0 * eta / ((1.0 - eta) * (1.0 - eta)) < 0.25);
    CHECK(eta < 0.5 / 3.0);
    for (double d : {0.05, 0.3, 0.9}) {
        double e = earl_eta(d);
        CHECK(12.0 * e / ((1.0 - e) * (1.0 - e)) < d / 2.0);
        CHECK(e < d / 3.0);
    }
    CHECK_THROWS(earl_eta(0.0));
    CHECK_THROWS(earl_eta(1.0));
    CHECK_THROWS(earl_eta(-0.3));
}

TEST_CASE("node-value interpolant hits its targets and honors its bound") {
    std::vector<cplx> nodes{cplx(0.3, 0.0), cplx(-0.2, 0.4), cplx(0.0, -0.55)};
    std::vector<cplx> targets{cplx(1.0, 0.0), cplx(0.0), cplx(-0.5, 0.25)};
    LagrangeBlaschke h(nodes, targets);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        CHECK(std::abs(h.value(nodes[n]) - targets[n]) < 1e-13);
    }
    SampleGrid grid = make_grid(24, 96, 0.95);
    double sup = growth_norm(h, 0.0, grid);
    CHECK(sup <= h.apriori_bound() + 1e-12);
    // jets are consistent with a finite difference of values
    cplx z(0.1, 0.2), step(1e-5);
    Jet j = h.jet(z, 1);
    cplx fd = (h.value(z + step) - h.value(z - step)) / (2.0 * step);
    CHECK(std::abs(j[1] - fd) < 1e-8);
    CHECK_THROWS(LagrangeBlaschke({cplx(0.1)}, {cplx(0.0)}));          // all-zero targets
    CHECK_THROWS(LagrangeBlaschke({cplx(0.1), cplx(0.1)}, {cplx(1.0), cplx(2.0)}));  // dup nodes
    CHECK_THROWS(LagrangeBlaschke({cplx(0.1)}, {cplx(1.0), cplx(2.0)}));             // size clash
}

TEST_CASE("osculating interpolant matches frozen value and node data") {
    std::vector<cplx> nodes{cplx(0.3, 0.0), cplx(0.0, -0.4)};
    std::vector<cplx> values{cplx(1.0, 0.0), cplx(0.0, 2.0)};
    std::vector<cplx> derivs{cplx(0.5, 0.0), cplx(-1.0, 0.0)};
    ProviderPtr g = hermite_solve(nodes, values, derivs);
    CHECK(std::abs(g->value(cplx(0.1, 0.1)) - cplx(1.9919761370464510, -0.3079174817083401)) <
          1e-13);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        Jet j = g->jet(nodes[n], 1);
        CHECK(std::abs(j[0] - values[n]) < 1e-13);
        CHECK(std::abs(j[1] - derivs[n]) < 1e-13);
    }
    // the all-zero data set is the zero function here (no degeneracy)
    ProviderPtr z0 = hermite_solve({cplx(0.2)}, {cplx(0.0)}, {cplx(0.0)});
    CHECK(std::abs(z0->value(cplx(0.5, 0.1))) == 0.0);
}

TEST_CASE("deflated coefficient of sin through its zero is exactly one") {
    // f = sin has -f''/f = 1; the z = 0 zero needs the series branch
    ProviderPtr A = removable_log_derivative_coefficient(sin_provider(), nullptr, {cplx(0.0)});
    for (cplx z : {cplx(0.0), cplx(0.005, 0.0), cplx(0.0, 0.003), cplx(0.5, 0.2)}) {
        CHECK(std::abs(A->value(z) - cplx(1.0)) < 1e-12);
    }
    Jet j = A->jet(cplx(0.002), 3);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(j[k]) < 1e-9);
    // a function whose second derivative does not vanish at the claimed zero
    // is rejected: sin'' = -sin vanishes at 0, but cos''(pi/2 shift trick)
    ProviderPtr bad = make_closed_form([](cplx z, int order) {
        Jet j2(order);  // f = z + z^2: f(0) = 0 but f''(0) = 2 != 0
        j2[0] = z + z * z;
        if (order >= 1) j2[1] = cplx(1.0) + 2.0 * z;
        if (order >= 2) j2[2] = cplx(2.0);
        return j2;
    });
    CHECK_THROWS(removable_log_derivative_coefficient(bad, nullptr, {cplx(0.0)})->value(cplx(0.0)));
}

TEST_CASE("prescribed zero set construction audits pass") {
    SampleGrid grid = make_grid(48, 192, 0.9);
    PrescribedZeroResult res = prescribed_zero_equation({cplx(0.4, 0.0), cplx(-0.4, 0.0)}, grid);
    CHECK(all_pass(res.rows));
    // f1 vanishes at the prescribed points and nowhere else on the grid scan
    for (cplx zn : res.zeros) CHECK(std::abs(res.f1->value(zn)) < 1e-12);
    // the interpolant carries the regularizing target at each zero
    cplx want_k(1.6825, 0.0);  // -B''/(2 B'^2) at 0.4 for this two-point product
    CHECK(std::abs(res.k->value(cplx(0.4)) - want_k) < 1e-12);
    // spherical display value at the zeros
    bool saw_display = false;
    for (const auto& row : res.rows) {
        if (row.quantity.rfind("display", 0) == 0 && !row.extra.empty()) saw_display = true;
        CHECK(row.pass);
    }
    (void)saw_display;
    // displayed quantity equals |B'(z_n)|^2 (1-|z_n|^2)^2
    double want_display = 0.4756242568370987;
    bool found = false;
    for (const auto& row : res.rows) {
        for (const auto& kv : row.extra) {
            if (kv.first == "expected") {
                double v = std::stod(kv.second);
                if (std::abs(v - want_display) < 1e-10) found = true;
            }
        }
    }
    CHECK(found);
}

TEST_CASE("interpolating solution hits targets and solves its equation") {
    SampleGrid grid = make_grid(48, 192, 0.9);
    std::vector<cplx> nodes{cplx(0.35, 0.1), cplx(-0.3, -0.25), cplx(0.05, 0.5)};
    std::vector<cplx> targets{cplx(1.0, 0.0), cplx(0.5, -0.5), cplx(0.0, 0.75)};
    InterpolatingSolutionResult res = interpolating_solution_equation(nodes, targets, grid);
    CHECK(all_pass(res.rows));
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        CHECK(std::abs(res.f->value(nodes[n]) - targets[n]) < 1e-9);
    }
    // the equation is satisfied away from the surrogate zeros
    std::vector<ExclusionDisc> excl;
    for (cplx z : res.surrogate_zeros) excl.push_back({z, 0.05});
    double r = residual_metric(*res.A, *res.f, grid, excl);
    CHECK(r < 1e-9);
}

TEST_CASE("cubic-perturbation fixed points with their multiplier data") {
    SampleGrid grid = make_grid(48, 192, 0.9);
    std::vector<cplx> lambda{cplx(0.5, 0.0), cplx(0.0, -0.3)};
    FixedPointSimpleResult res = fixed_point_simple(lambda, 0.3, grid);
    CHECK(all_pass(res.rows));
    REQUIRE(res.fixed_points.size() == 3);  // origin plus the two prescribed
    CHECK(std::abs(res.fixed_points[0]) < 1e-10);
    // A(0) = -6 eps B(0); B(0) = 0.5 * 0.3 = 0.15
    CHECK(std::abs(res.A->value(cplx(0.0)) - cplx(-0.27, 0.0)) < 1e-12);
    // f1 is sandwiched: (1 - eps)|z| <= |f1| <= (1 + eps)|z|
    for (cplx z : {cplx(0.2, 0.6), cplx(-0.7, 0.1)}) {
        double m = std::abs(res.f1->value(z)), r = std::abs(z);
        CHECK(m >= 0.7 * r - 1e-12);
        CHECK(m <= 1.3 * r + 1e-12);
    }
}

TEST_CASE("typed fixed points carry prescribed multipliers") {
    SampleGrid grid = make_grid(48, 192, 0.9);
    std::vector<cplx> nodes{cplx(0.4, 0.1), cplx(-0.2, 0.35), cplx(0.1, -0.45)};
    std::vector<FixedPointType> types{FixedPointType::attractive, FixedPointType::neutral,
                                      FixedPointType::repulsive};
    FixedPointTypedResult res = fixed_point_typed(nodes, types, grid);
    CHECK(all_pass(res.rows));
    // f1 fixes each node with derivative equal to the requested multiplier
    double want[3] = {0.5, 1.0, 2.0};
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        Jet j = res.f1->jet(nodes[n], 1);
        CHECK(std::abs(j[0] - nodes[n]) < 1e-9);
        CHECK(std::abs(j[1] - cplx(want[n])) < 1e-9);
    }
    CHECK(multiplier(FixedPointType::attractive) == 0.5);
    CHECK(multiplier(FixedPointType::neutral) == 1.0);
    CHECK(multiplier(FixedPointType::repulsive) == 2.0);
    // nodes on the positive real axis sit on the log cut used by the recipe
    CHECK_THROWS(fixed_point_typed({cplx(-0.4, 0.0)}, {FixedPointType::neutral}, grid));
}

TEST_CASE("two-point separation scales for an oscillatory basis") {
    // f1 = sin(4z), f2 = cos(4z): W = -4; zeros of f1 at 0, +-pi/4; zeros of f2
    // at +-pi/8; critical points interleave at the same spacing
    SolutionBasis b;
    b.f1 = sin_provider(4.0);
    b.f2 = cos_provider(4.0);
    b.wronskian = cplx(-4.0);
    SampleGrid grid = make_grid(32, 128, 0.9);
    auto rows = separation_audit(b, grid);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.claim == "two-point-separation");
        CHECK(row.pass);  // informational
        CHECK(row.value > 0.0);
        CHECK(std::isfinite(row.value));
    }
    // every category's closest pair is separated by pi/8 in this lattice, so
    // all three ratios coincide
    CHECK(rows[0].value == doctest::Approx(rows[1].value).epsilon(1e-9));
    CHECK(rows[1].value == doctest::Approx(rows[2].value).epsilon(1e-9));
}
