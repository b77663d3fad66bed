#include "disclab/aux_field.hpp"

#include <cmath>

#include "disclab/sweep.hpp"

namespace disclab {

AuxField eval_aux(const SolutionBasis& b, cplx z) {
    Jet j1 = b.f1->jet(z, 2), j2 = b.f2->jet(z, 2);
    double S = std::norm(j1[0]) + std::norm(j2[0]);
    if (S <= 0.0) throw std::domain_error("eval_aux: degenerate basis (both members vanish)");
    double absW = std::abs(b.wronskian);
    AuxField a;
    a.u = std::log(S) - std::log(absW);
    a.du = (j1[1] * std::conj(j1[0]) + j2[1] * std::conj(j2[0])) / S;
    a.d2u = (j1[2] * std::conj(j1[0]) + j2[2] * std::conj(j2[0])) / S - a.du * a.du;
    a.grad_norm = 2.0 * std::abs(a.du);
    a.quotient_spherical = absW / S;
    a.laplacian = 4.0 * a.quotient_spherical * a.quotient_spherical;
    return a;
}

double aux_u(const SolutionBasis& b, cplx z) {
    Jet j1 = b.f1->jet(z, 0), j2 = b.f2->jet(z, 0);
    double S = std::norm(j1[0]) + std::norm(j2[0]);
    return std::log(S) - std::log(std::abs(b.wronskian));
}

double fd_laplacian(const std::function<double(cplx)>& f, cplx z, double h) {
    return (f(z + h) + f(z - h) + f(z + cplx(0.0, h)) + f(z - cplx(0.0, h)) - 4.0 * f(z)) / (h * h);
}

namespace {
// one Richardson step on the second-order five-point stencil
double richardson_laplacian(const std::function<double(cplx)>& f, cplx z, double h) {
    return (4.0 * fd_laplacian(f, z, 0.5 * h) - fd_laplacian(f, z, h)) / 3.0;
}
}  // namespace

IdentityResiduals identity_residuals(const SolutionBasis& b, const JetProvider& A, cplx z, double fd_step) {
    auto ufn = [&](cplx w) { return aux_u(b, w); };
    auto eu = [&](cplx w) { return std::exp(aux_u(b, w)); };
    AuxField a = eval_aux(b, z);

    IdentityResiduals r;
    double lap_u = richardson_laplacian(ufn, z, fd_step);
    r.r1 = std::abs(lap_u - a.laplacian);
    r.r2 = std::abs(lap_u + a.grad_norm * a.grad_norm -
                    std::exp(-a.u) * richardson_laplacian(eu, z, fd_step));
    r.r3 = std::abs(A.jet(z, 0).value() + a.d2u + a.du * a.du);
    return r;
}

double liouville_residual(const SolutionBasis& b, cplx z, double fd_step) {
    auto vfn = [&](cplx w) { return -aux_u(b, w); };
    AuxField a = eval_aux(b, z);
    // lap(-u) = -4 e^{-2u} = -4 e^{2v}
    return std::abs(richardson_laplacian(vfn, z, fd_step) + a.laplacian);
}

cplx schwarzian(const JetProvider& w, cplx z) {
    Jet j = w.jet(z, 3);
    if (j[1] == cplx(0.0)) throw std::domain_error("schwarzian: critical point of w");
    cplx q = j[2] / j[1];
    return j[3] / j[1] - 1.5 * q * q;
}

cplx quotient_schwarzian(const SolutionBasis& b, cplx z) {
    Jet j1 = b.f1->jet(z, 3), j2 = b.f2->jet(z, 3);
    // invariance under w -> 1/w lets us keep the larger member downstairs
    const Jet& num = (std::abs(j2[0]) >= std::abs(j1[0])) ? j1 : j2;
    const Jet& den = (std::abs(j2[0]) >= std::abs(j1[0])) ? j2 : j1;
    Jet w = num / den;
    if (w[1] == cplx(0.0)) throw std::domain_error("quotient_schwarzian: degenerate quotient");
    cplx q = w[2] / w[1];
    return w[3] / w[1] - 1.5 * q * q;
}

cplx bank_laine_coefficient(const SolutionBasis& b, cplx z) {
    Jet j1 = b.f1->jet(z, 2), j2 = b.f2->jet(z, 2);
    Jet E = j1 * j2;
    if (E[0] == cplx(0.0)) throw std::domain_error("bank_laine_coefficient: zero of the product E");
    cplx lp = E[1] / E[0];
    cplx we = b.wronskian / E[0];
    return 0.25 * (lp * lp - we * we - 2.0 * E[2] / E[0]);
}

double spherical_derivative(const JetProvider& w, cplx z) {
    Jet j = w.jet(z, 1);
    return std::abs(j[1]) / (1.0 + std::norm(j[0]));
}

double normality_sup(const JetProvider& w, const SampleGrid& grid) {
    return sweep::max(grid.nodes.size(), [&](std::size_t i) {
               cplx z = grid.nodes[i].z;
               return spherical_derivative(w, z) * (1.0 - std::norm(z));
           }).value;
}

double normality_sup(const SolutionBasis& b, const SampleGrid& grid) {
    return sweep::max(grid.nodes.size(), [&](std::size_t i) {
               cplx z = grid.nodes[i].z;
               return eval_aux(b, z).quotient_spherical * (1.0 - std::norm(z));
           }).value;
}

double grad_sup(const SolutionBasis& b, const SampleGrid& grid, double alpha) {
    return sweep::max(grid.nodes.size(), [&](std::size_t i) {
               cplx z = grid.nodes[i].z;
               return eval_aux(b, z).grad_norm * std::pow(1.0 - std::norm(z), alpha);
           }).value;
}

std::vector<double> u_circle_means(const SolutionBasis& b, const std::vector<double>& radii,
                                   int angular_count) {
    std::vector<double> means;
    means.reserve(radii.size());
    for (double r : radii)
        means.push_back(circle_mean([&](cplx z) { return aux_u(b, z); }, r, angular_count));
    return means;
}

std::vector<ReportRow> subharmonicity_audit(const SolutionBasis& b, const std::vector<double>& radii,
                                            int angular_count, double tol) {
    if (radii.size() < 2) throw std::invalid_argument("subharmonicity_audit: need at least two radii");
    auto means = u_circle_means(b, radii, angular_count);
    double worst_mono = -1e308;
    for (std::size_t k = 0; k + 1 < means.size(); ++k) worst_mono = std::max(worst_mono, means[k] - means[k + 1]);

    double worst_convex = -1e308;
    for (std::size_t k = 1; k + 1 < means.size(); ++k) {
        double x0 = std::log(radii[k - 1]), x1 = std::log(radii[k]), x2 = std::log(radii[k + 1]);
        double slope_lo = (means[k] - means[k - 1]) / (x1 - x0);
        double slope_hi = (means[k + 1] - means[k]) / (x2 - x1);
        worst_convex = std::max(worst_convex, slope_lo - slope_hi);
    }

    std::vector<ReportRow> rows;
    rows.push_back(audit_row("circle-mean-decrease-max", worst_mono, tol, "u-circle-means-monotone"));
    if (radii.size() >= 3)
        rows.push_back(audit_row("circle-mean-concavity-max", worst_convex, tol, "u-circle-means-logconvex"));
    return rows;
}

std::vector<ReportRow> smoothness_check(const SolutionBasis& b, cplx z1, cplx z2,
                                        const std::function<double(cplx)>& omega, int knots) {
    double rho = weighted_distance(z1, z2, omega, knots);
    double lambda = 0.0;
    for (cplx z : hyperbolic_segment(z1, z2, knots))
        lambda = std::max(lambda, eval_aux(b, z).grad_norm * omega(z));
    double delta_u = std::abs(aux_u(b, z1) - aux_u(b, z2));

    std::vector<ReportRow> rows;
    ReportRow r = audit_row("log-sum-increment", delta_u, lambda * rho * (1.0 + 1e-9) + 1e-12,
                            "two-point-smoothness");
    r.extra.emplace_back("weighted_distance", format_sig17(rho));
    r.extra.emplace_back("lambda", format_sig17(lambda));
    rows.push_back(std::move(r));
    return rows;
}

}  // namespace disclab
