#include "doctest.h"

#include <cmath>

#include "disclab/blaschke.hpp"
#include "disclab/ode.hpp"
#include "disclab/quadrature.hpp"

using namespace disclab;

namespace {
// closed-form jets of cos and sin through the four-cycle of derivatives
Jet cos_jet(cplx z, int order, cplx freq = cplx(1.0)) {
    Jet j(order);
    cplx c = std::cos(freq * z), s = std::sin(freq * z);
    cplx cycle[4] = {c, -s, -c, s};
    cplx scale(1.0);
    for (int k = 0; k <= order; ++k) {
        j[k] = scale * cycle[k % 4];
        scale *= freq;
    }
    return j;
}
Jet sin_jet(cplx z, int order, cplx freq = cplx(1.0)) {
    Jet j(order);
    cplx c = std::cos(freq * z), s = std::sin(freq * z);
    cplx cycle[4] = {s, c, -s, -c};
    cplx scale(1.0);
    for (int k = 0; k <= order; ++k) {
        j[k] = scale * cycle[k % 4];
        scale *= freq;
    }
    return j;
}

ProviderPtr cos_provider() {
    return make_closed_form([](cplx z, int o) { return cos_jet(z, o); });
}
}  // namespace

TEST_CASE("Gauss-Legendre rules: weight sums and polynomial exactness") {
    for (int n : {2, 8, 32, 64}) {
        const GaussRule& r = gauss_legendre(n);
        REQUIRE(r.x.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (double w : r.w) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        for (std::size_t i = 1; i < r.x.size(); ++i) CHECK(r.x[i] > r.x[i - 1]);
    }
    // degree-5 monomial integrated exactly by a 3-point rule
    cplx v = integrate_segment([](cplx z) { return z * z * z * z * z; }, cplx(0.0), cplx(1.0), 3);
    CHECK(std::abs(v - cplx(1.0 / 6.0)) < 1e-15);
}

TEST_CASE("polyline quadrature is path-exact for entire integrands") {
    auto f = [](cplx z) { return std::exp(z); };
    cplx a(0.0), b(0.4, 0.6);
    cplx want = std::exp(b) - std::exp(a);
    cplx straight = integrate_polyline(f, {a, b});
    cplx dogleg = integrate_polyline(f, {a, cplx(0.0, 0.6), b});
    CHECK(std::abs(straight - want) < 1e-14);
    CHECK(std::abs(dogleg - want) < 1e-14);
    double real = integrate_real([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(real == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("unit-coefficient basis reproduces cos and sin along every ray") {
    PropagatedBasis pb = propagate_basis(make_constant(cplx(1.0)), cplx(0.0), 4, 0.9);
    REQUIRE(pb.traces.size() == 4);
    for (const auto& tr : pb.traces) {
        REQUIRE(tr.samples.size() >= 3);
        for (std::size_t i = 0; i < tr.samples.size(); ++i) {
            const auto& s = tr.samples[i];
            CHECK(std::abs(s.y[0] - std::cos(s.z)) < 1e-9);
            CHECK(std::abs(s.y[2] - std::sin(s.z)) < 1e-9);
            CHECK(std::abs(tr.wronskian_at_sample(i) - cplx(1.0)) < 1e-10);
        }
    }
    // trace providers evaluate between samples and off the stored rays
    for (cplx z : {cplx(0.31, 0.17), cplx(-0.5, 0.4), cplx(0.0, -0.83)}) {
        CHECK(std::abs(pb.basis.f1->value(z) - std::cos(z)) < 1e-9);
        CHECK(std::abs(pb.basis.f2->value(z) - std::sin(z)) < 1e-9);
    }
    // jets from the trace match closed-form derivative stacks
    Jet j = pb.basis.f1->jet(cplx(0.2, 0.1), 4);
    Jet want = cos_jet(cplx(0.2, 0.1), 4);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(j[k] - want[k]) < 1e-8);
}

TEST_CASE("dense output interpolates between accepted steps") {
    PropagatedBasis pb = propagate_basis(make_constant(cplx(1.0)), cplx(0.0), 1, 0.9);
    const SolutionTrace& tr = pb.traces[0];
    double L = tr.total_length();
    for (double f : {0.237, 0.5, 0.811}) {
        BasisState st = tr.dense_eval(f * L);
        CHECK(std::abs(st.f1 - std::cos(st.z)) < 1e-6);
        CHECK(std::abs(st.f2 - std::sin(st.z)) < 1e-6);
        CHECK(std::abs(st.f1p * std::conj(st.f1p)) > 0.0);  // derivatives populated
    }
}

TEST_CASE("explicit dog-leg path arrives with path-independent values") {
    PathSpec path;
    path.vertices = {cplx(0.0), cplx(0.0, 0.5), cplx(0.3, 0.5)};
    PropagatedBasis pb = propagate_basis(make_constant(cplx(1.0)), cplx(0.0), {path});
    const auto& last = pb.traces[0].samples.back();
    CHECK(std::abs(last.z - cplx(0.3, 0.5)) < 1e-12);
    CHECK(std::abs(last.y[0] - std::cos(last.z)) < 1e-9);
    CHECK(std::abs(last.y[3] - std::cos(last.z)) < 1e-9);
}

TEST_CASE("zero coefficient keeps the integrator polynomial-exact") {
    PathSpec path;
    path.vertices = {cplx(0.0), cplx(0.6, -0.4)};
    SolutionTrace tr = integrate_basis(*make_constant(cplx(0.0)), path, {cplx(1.0), cplx(0.0)},
                                       {cplx(0.0), cplx(1.0)});
    const auto& last = tr.samples.back();
    CHECK(std::abs(last.y[0] - cplx(1.0)) < 1e-13);
    CHECK(std::abs(last.y[2] - last.z) < 1e-13);
}

TEST_CASE("step budget exhaustion raises a diagnosable numerical error") {
    IntegrationOptions opts;
    opts.max_steps = 3;
    PathSpec path;
    path.vertices = {cplx(0.0), cplx(0.9)};
    try {
        integrate_basis(*make_constant(cplx(400.0)), path, {}, {}, opts);
        FAIL("expected a numerical error");
    } catch (const NumericalError& e) {
        CHECK(std::isfinite(e.last_point().real()));
        CHECK(e.last_point().real() >= 0.0);
        CHECK(e.last_point().real() <= 0.9);
    }
}

TEST_CASE("solution jets follow the coefficient recurrence") {
    // f'' = -f with f = cos: jets to order 6 from value/derivative data alone
    cplx z(0.3, -0.2);
    Jet A = Jet::constant(cplx(1.0), 4);
    Jet j = solution_jet_from_ode(A, std::cos(z), -std::sin(z), 6);
    Jet want = cos_jet(z, 6);
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(j[k] - want[k]) < 1e-14);
}

TEST_CASE("residual metric is tiny for a true solution pair") {
    SampleGrid grid = make_grid(16, 64, 0.9);
    double r = residual_metric(*make_constant(cplx(1.0)), *cos_provider(), grid);
    CHECK(r < 1e-12);
    // excluding the whole disc silences the sweep
    double r0 = residual_metric(*make_constant(cplx(1.0)), *cos_provider(), grid,
                                {{cplx(0.0), 0.9999}});
    CHECK(r0 == 0.0);
}

TEST_CASE("zero search recovers a Blaschke zero set exactly") {
    std::vector<cplx> zeros{cplx(0.3, 0.0), cplx(-0.2, 0.4), cplx(0.0, 0.55)};
    BlaschkeProduct b(zeros);
    SampleGrid grid = make_grid(32, 128, 0.9);
    auto found = find_zeros(b, grid);
    REQUIRE(found.size() == zeros.size());
    for (cplx z : zeros) {
        double best = 1.0;
        for (cplx f : found) best = std::min(best, pseudo_hyperbolic(z, f));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("zero search handles oscillatory closed forms") {
    auto f = make_closed_form([](cplx z, int o) { return sin_jet(z, o, cplx(4.0)); });
    SampleGrid grid = make_grid(32, 128, 0.9);
    auto found = find_zeros(*f, grid);
    REQUIRE(found.size() == 3);  // 0, +-pi/4
    CHECK(std::abs(found[0]) < 1e-12);
    CHECK(std::abs(std::abs(found[1]) - kPi / 4.0) < 1e-12);
    CHECK(std::abs(std::abs(found[2]) - kPi / 4.0) < 1e-12);
}

TEST_CASE("inverse-square quadrature of cos gives the tangent") {
    cplx w(0.5, 0.2);
    cplx got = inverse_square_integral(*cos_provider(), {cplx(0.0), w});
    CHECK(std::abs(got - std::tan(w)) < 1e-13);
    // path independence across a dog-leg
    cplx dog = inverse_square_integral(*cos_provider(), {cplx(0.0), cplx(0.0, 0.2), w});
    CHECK(std::abs(dog - std::tan(w)) < 1e-13);
}

TEST_CASE("second solution against cos is sin, Wronskian one") {
    ProviderPtr f2 = second_solution(cos_provider(), cplx(0.0));
    for (cplx z : {cplx(0.2, 0.1), cplx(-0.4, 0.3), cplx(0.6, -0.5)}) {
        CHECK(std::abs(f2->value(z) - std::sin(z)) < 1e-12);
        Jet j1 = cos_jet(z, 1);
        Jet j2 = f2->jet(z, 1);
        CHECK(std::abs(j1[0] * j2[1] - j1[1] * j2[0] - cplx(1.0)) < 1e-12);
    }
    // shifted base point subtracts the tangent at alpha
    cplx alpha(0.1, 0.0);
    ProviderPtr g2 = second_solution(cos_provider(), alpha);
    cplx z(0.4, 0.2);
    CHECK(std::abs(g2->value(z) - std::cos(z) * (std::tan(z) - std::tan(alpha))) < 1e-12);
}

TEST_CASE("trace provider descriptor names its strategy") {
    PropagatedBasis pb = propagate_basis(make_constant(cplx(1.0)), cplx(0.0), 2, 0.5);
    CHECK(pb.basis.f1->descriptor() == "ode-trace");
}
