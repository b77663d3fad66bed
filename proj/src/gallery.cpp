#include "disclab/gallery.hpp"

#include <cmath>

#include "disclab/ode.hpp"
#include "disclab/sweep.hpp"

namespace disclab {

namespace {

const cplx kI(0.0, 1.0);

// f1 = exp(i (p/2pi) L^2), L = log(2i/(1-z)); 2i/(1-z) lies in the upper half
// plane, so the principal log never meets its cut
GalleryEntry make_thm1_i(double p) {
    GalleryEntry e;
    e.name = "thm1_i";
    e.p = p;
    e.f1 = make_closed_form([p](cplx z, int order) {
        Jet L = log(2.0 * kI / (1.0 - Jet::variable(z, order)));
        return exp(kI * (p / (2.0 * kPi)) * square(L));
    });
    e.A = make_closed_form([p](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        Jet L = log(2.0 * kI / (1.0 - Z));
        Jet num = p * square(L) - kI * kPi * L - Jet::constant(kI * kPi, order);
        return (p * num) / (kPi * kPi * square(1.0 - Z));
    });
    e.f2 = second_solution(e.f1, cplx(0.0));
    e.wronskian = cplx(1.0);
    e.envelope_lower = [p](double r) { return std::pow(2.0, -p) * std::pow(1.0 - r, p); };
    e.envelope_upper = [](double) { return 1.0; };
    e.profile_expectation = "growing";
    return e;
}

// f1 = exp(i (p/pi) L^2), L = log((1+z)/(1-z)); the argument has positive real
// part on the disc
GalleryEntry make_thm1_ii(double p) {
    GalleryEntry e;
    e.name = "thm1_ii";
    e.p = p;
    e.f1 = make_closed_form([p](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        Jet L = log((1.0 + Z) / (1.0 - Z));
        return exp(kI * (p / kPi) * square(L));
    });
    e.A = make_closed_form([p](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        Jet L = log((1.0 + Z) / (1.0 - Z));
        Jet num = 2.0 * p * square(L) - kI * kPi * Z * L - Jet::constant(kI * kPi, order);
        return (8.0 * p * num) / (kPi * kPi * square(1.0 - square(Z)));
    });
    e.f2 = second_solution(e.f1, cplx(0.0));
    e.wronskian = cplx(1.0);
    e.envelope_lower = [p](double r) { return std::pow((1.0 - r) / (1.0 + r), p); };
    e.envelope_upper = [p](double r) { return std::pow((1.0 + r) / (1.0 - r), p); };
    e.profile_expectation = "growing";
    return e;
}

// f1 = (1-z^2)^{1/2}, f2 = f1 log((1+z)/(1-z)), A = (1-z^2)^{-2}, W = 2
GalleryEntry make_legendre() {
    GalleryEntry e;
    e.name = "legendre";
    e.f1 = make_closed_form([](cplx z, int order) {
        return sqrt(1.0 - square(Jet::variable(z, order)));
    });
    e.f2 = make_closed_form([](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        return sqrt(1.0 - square(Z)) * log((1.0 + Z) / (1.0 - Z));
    });
    e.A = make_closed_form([](cplx z, int order) {
        return 1.0 / square(1.0 - square(Jet::variable(z, order)));
    });
    e.wronskian = cplx(2.0);
    e.profile_expectation = "stabilized";
    return e;
}

// quotient -log(1-z); both members carry a factor i so that W = +1
GalleryEntry make_log_univalent() {
    GalleryEntry e;
    e.name = "log_univalent";
    e.f1 = make_closed_form([](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        return (-kI) * sqrt(1.0 - Z) * log(1.0 - Z);
    });
    e.f2 = make_closed_form([](cplx z, int order) {
        return kI * sqrt(1.0 - Jet::variable(z, order));
    });
    e.A = make_closed_form([](cplx z, int order) {
        return 0.25 / square(1.0 - Jet::variable(z, order));
    });
    e.wronskian = cplx(1.0);
    e.profile_expectation = "stabilized";
    return e;
}

// f = exp(-(1+z)/(1-z)): one bounded solution, coefficient profile unbounded
GalleryEntry make_exp_singular() {
    GalleryEntry e;
    e.name = "exp_singular";
    e.f1 = make_closed_form([](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        return exp(-(1.0 + Z) / (1.0 - Z));
    });
    e.A = make_closed_form([](cplx z, int order) {
        Jet Z = Jet::variable(z, order);
        return (-4.0 * Z) / square(square(1.0 - Z));
    });
    e.wronskian = cplx(1.0);
    e.envelope_upper = [](double) { return 1.0; };
    e.profile_expectation = "growing";
    return e;
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"thm1_i", "thm1_ii", "legendre", "log_univalent", "exp_singular"};
}

GalleryEntry gallery_entry(const std::string& name, std::optional<double> p) {
    if (name == "thm1_i" || name == "thm1_ii") {
        double pv = p.value_or(0.25);
        if (!(pv > 0.0 && pv <= 0.5)) throw std::invalid_argument("gallery_entry: p must lie in (0, 1/2]");
        return name == "thm1_i" ? make_thm1_i(pv) : make_thm1_ii(pv);
    }
    if (p.has_value()) throw std::invalid_argument("gallery_entry: " + name + " takes no parameter");
    if (name == "legendre") return make_legendre();
    if (name == "log_univalent") return make_log_univalent();
    if (name == "exp_singular") return make_exp_singular();
    throw std::invalid_argument("gallery_entry: unknown entry " + name);
}

SolutionBasis gallery_basis(const GalleryEntry& e) {
    if (!e.f2) throw std::invalid_argument("gallery_basis: entry " + e.name + " defines no solution pair");
    return {e.f1, e.f2, e.wronskian};
}

std::vector<ReportRow> verify_entry(const GalleryEntry& e, const SampleGrid& grid,
                                    const GalleryVerifyOptions& opts) {
    std::vector<ReportRow> rows;

    rows.push_back(audit_row("residual-sup[" + e.name + "]", residual_metric(*e.A, *e.f1, grid),
                             opts.residual_tol, "ode-residual"));

    if (e.envelope_lower || e.envelope_upper) {
        auto margin = sweep::max(grid.nodes.size(), [&](std::size_t i) {
            cplx z = grid.nodes[i].z;
            double m = std::abs(e.f1->value(z));
            double r = std::abs(z);
            double worst = -1e308;  // violation depth; negative margin means pass
            if (e.envelope_lower) worst = std::max(worst, e.envelope_lower(r) - m);
            if (e.envelope_upper) worst = std::max(worst, m - e.envelope_upper(r));
            return worst;
        });
        rows.push_back(audit_row("envelope-violation[" + e.name + "]", margin.value, opts.envelope_slack,
                                 "modulus-envelope"));
    }

    if (e.f2) {
        SolutionBasis b = gallery_basis(e);
        auto wmax = sweep::max((grid.nodes.size() + opts.wronskian_stride - 1) / opts.wronskian_stride,
                               [&](std::size_t k) {
                                   cplx z = grid.nodes[k * opts.wronskian_stride].z;
                                   return std::abs(wronskian_at(b, z) - e.wronskian);
                               });
        rows.push_back(audit_row("wronskian-drift[" + e.name + "]", wmax.value, opts.wronskian_tol,
                                 "wronskian-constant"));
    }
    return rows;
}

}  // namespace disclab
