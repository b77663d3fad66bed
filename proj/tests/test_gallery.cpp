#include "doctest.h"

#include <cmath>

#include "disclab/gallery.hpp"
#include "disclab/report.hpp"

using namespace disclab;

namespace {
const cplx kZ0(0.3, 0.2);

void check_close(cplx got, cplx want, double tol) {
    CHECK(std::abs(got - want) < tol);
}
}  // namespace

TEST_CASE("catalog names are stable") {
    auto names = gallery_names();
    REQUIRE(names.size() == 5);
    CHECK(names[0] == "thm1_i");
    CHECK(names[1] == "thm1_ii");
    CHECK(names[2] == "legendre");
    CHECK(names[3] == "log_univalent");
    CHECK(names[4] == "exp_singular");
}

TEST_CASE("principal-branch entry matches frozen spot values at p = 1/4") {
    GalleryEntry e = gallery_entry("thm1_i", 0.25);
    CHECK(e.p.has_value());
    CHECK(*e.p == 0.25);
    check_close(e.f1->value(kZ0), cplx(0.8579045679663109, -0.0821004514935900), 1e-14);
    check_close(e.f1->jet(kZ0, 1)[1], cplx(-0.1886022796163426, 0.0619327592237442), 1e-14);
    check_close(e.A->value(kZ0), cplx(0.3472953540823589, -0.0868615117527185), 1e-14);
    CHECK(std::abs(e.wronskian - cplx(1.0)) == 0.0);
    REQUIRE(e.f2 != nullptr);
    // basis solves the same equation: residual at one spot
    Jet j2 = e.f2->jet(kZ0, 2);
    check_close(j2[2] + e.A->value(kZ0) * j2[0], cplx(0.0), 1e-12);
    CHECK(e.profile_expectation == "growing");
}

TEST_CASE("two-cut entry matches frozen spot values at p = 1/4") {
    GalleryEntry e = gallery_entry("thm1_ii", 0.25);
    check_close(e.f1->value(kZ0), cplx(0.9601604098945702, 0.0125433295840924), 1e-14);
    check_close(e.A->value(kZ0), cplx(0.3584720892331467, -0.6320587180437290), 1e-14);
    CHECK(e.profile_expectation == "growing");
}

TEST_CASE("legendre entry: closed forms, Wronskian two, bounded profile") {
    GalleryEntry e = gallery_entry("legendre");
    CHECK_FALSE(e.p.has_value());
    cplx z = kZ0;
    check_close(e.f1->value(z), std::sqrt(cplx(1.0) - z * z), 1e-15);
    check_close(e.f2->value(z),
                std::sqrt(cplx(1.0) - z * z) * std::log((cplx(1.0) + z) / (cplx(1.0) - z)),
                1e-15);
    check_close(e.f2->value(cplx(0.5)), cplx(0.9514261508963460, 0.0), 2e-15);
    cplx one_minus = cplx(1.0) - z * z;
    check_close(e.A->value(z), cplx(1.0) / (one_minus * one_minus), 1e-14);
    CHECK(std::abs(e.wronskian - cplx(2.0)) == 0.0);
    CHECK(e.profile_expectation == "stabilized");
}

TEST_CASE("log-univalent entry: closed forms and unit Wronskian") {
    GalleryEntry e = gallery_entry("log_univalent");
    cplx z = kZ0;
    cplx i(0.0, 1.0);
    check_close(e.f1->value(z), -i * std::sqrt(cplx(1.0) - z) * std::log(cplx(1.0) - z), 1e-15);
    check_close(e.f1->value(z), cplx(-0.1975927249635593, 0.3011677270302763), 1e-14);
    check_close(e.f2->value(z), i * std::sqrt(cplx(1.0) - z), 1e-15);
    // Wronskian spot check against the declared constant
    Jet j1 = e.f1->jet(z, 1), j2 = e.f2->jet(z, 1);
    check_close(j1[0] * j2[1] - j1[1] * j2[0], e.wronskian, 1e-14);
    CHECK(std::abs(e.wronskian - cplx(1.0)) == 0.0);
    CHECK(e.profile_expectation == "stabilized");
}

TEST_CASE("essential-singularity entry ships one solution only") {
    GalleryEntry e = gallery_entry("exp_singular");
    cplx z = kZ0;
    check_close(e.f1->value(z), std::exp(-(cplx(1.0) + z) / (cplx(1.0) - z)), 1e-15);
    CHECK(e.f1->value(z).real() == doctest::Approx(0.1410946276055327).epsilon(1e-14));
    CHECK(e.A->value(z).real() == doctest::Approx(0.6676399068700628).epsilon(1e-13));
    cplx omz = cplx(1.0) - z;
    check_close(e.A->value(z), -4.0 * z / (omz * omz * omz * omz), 1e-13);
    CHECK(e.f2 == nullptr);
    CHECK_THROWS(gallery_basis(e));
}

TEST_CASE("envelopes sandwich the bounded solution") {
    GalleryEntry e = gallery_entry("thm1_i", 0.25);
    REQUIRE(e.envelope_lower);
    REQUIRE(e.envelope_upper);
    CHECK(e.envelope_upper(0.5) == doctest::Approx(1.0));
    CHECK(e.envelope_lower(0.5) ==
          doctest::Approx(std::pow(2.0, -0.25) * std::pow(0.5, 0.25)).epsilon(1e-14));
    for (double r : {0.1, 0.5, 0.9}) {
        for (int k = 0; k < 8; ++k) {
            cplx z = std::polar(r, 0.37 + k * kPi / 4.0);
            double m = std::abs(e.f1->value(z));
            CHECK(m <= e.envelope_upper(r) + 1e-12);
            CHECK(m >= e.envelope_lower(r) - 1e-12);
        }
    }
    CHECK_FALSE(gallery_entry("legendre").envelope_lower);
}

TEST_CASE("every catalog entry verifies on a medium grid") {
    SampleGrid grid = make_grid(32, 128, 0.9);
    for (const auto& name : gallery_names()) {
        std::optional<double> p;
        if (name.rfind("thm1", 0) == 0) p = 0.25;
        GalleryEntry e = gallery_entry(name, p);
        auto rows = verify_entry(e, grid);
        CHECK(rows.size() >= 2);
        CHECK(all_pass(rows));
    }
}

TEST_CASE("parameter validation") {
    GalleryEntry def = gallery_entry("thm1_i");        // p defaults to 1/4
    CHECK(def.p.has_value());
    CHECK(*def.p == 0.25);
    CHECK_THROWS(gallery_entry("thm1_i", 0.0));        // p in (0, 1/2]
    CHECK_THROWS(gallery_entry("thm1_i", 0.6));
    CHECK_THROWS(gallery_entry("legendre", 0.25));     // no parameter accepted
    CHECK_THROWS(gallery_entry("exp_singular", 0.1));
    CHECK_THROWS(gallery_entry("no_such_entry"));
    CHECK_NOTHROW(gallery_entry("thm1_i", 0.5));       // boundary value allowed
}
