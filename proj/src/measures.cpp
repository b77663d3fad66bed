#include "disclab/measures.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/aux_field.hpp"
#include "disclab/quadrature.hpp"
#include "disclab/sweep.hpp"

namespace disclab {

std::string stability_verdict(const std::vector<double>& values) {
    if (values.size() < 2) return "inconclusive";
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (values.back() >= 2.0 * values.front()) return "growing";
    if (hi > 0.0 && (hi - lo) / hi <= 0.10) return "stabilized";
    return "inconclusive";
}

double growth_norm(const JetProvider& f, double alpha, const SampleGrid& grid) {
    return sweep::max(grid.nodes.size(), [&](std::size_t i) {
               cplx z = grid.nodes[i].z;
               return std::abs(f.value(z)) * std::pow(1.0 - std::norm(z), alpha);
           }).value;
}

ProfileReport growth_profile(const JetProvider& f, double alpha, std::vector<double> radii,
                             int scan_count) {
    ProfileReport rep;
    rep.radii = std::move(radii);
    for (double r : rep.radii) {
        double w = std::pow(1.0 - r * r, alpha);
        rep.values.push_back(circle_sup([&](cplx z) { return std::abs(f.value(z)) * w; }, r, scan_count));
    }
    rep.verdict = stability_verdict(rep.values);
    return rep;
}

double carleson_constant(const DensityMeasure& mu, const std::vector<cplx>& a_grid,
                         const SampleGrid& grid) {
    // density once per node, then one deterministic kernel sum per grid point a
    std::vector<double> dens(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
        dens[i] = mu.density(grid.nodes[i].z) * grid.nodes[i].weight;

    auto best = sweep::max(a_grid.size(), [&](std::size_t k) {
        cplx a = a_grid[k];
        double na = 1.0 - std::norm(a);
        double s = 0.0;
        for (std::size_t i = 0; i < grid.nodes.size(); ++i)
            s += dens[i] * na / std::norm(1.0 - std::conj(a) * grid.nodes[i].z);
        return s;
    });
    return best.value;
}

CarlesonReport carleson_profile(const DensityMeasure& mu, const std::vector<cplx>& a_grid,
                                std::vector<double> r_maxes, int radial_count, int angular_count) {
    if (r_maxes.empty()) throw std::invalid_argument("carleson_profile: no radii");
    std::sort(r_maxes.begin(), r_maxes.end());
    SampleGrid grid = make_grid(radial_count, angular_count, r_maxes.back(), RadialScheme::boundary_refined);

    std::vector<double> dens(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
        dens[i] = mu.density(grid.nodes[i].z) * grid.nodes[i].weight;

    // nodes are radius-sorted: locate the prefix for each integration radius
    std::vector<std::size_t> cut(r_maxes.size(), 0);
    for (std::size_t j = 0; j < r_maxes.size(); ++j) {
        std::size_t c = 0;
        while (c < grid.nodes.size() && std::abs(grid.nodes[c].z) <= r_maxes[j]) ++c;
        cut[j] = c;
    }

    CarlesonReport rep;
    rep.r_maxes = r_maxes;
    rep.values.assign(r_maxes.size(), 0.0);
    std::vector<std::vector<double>> per_a(r_maxes.size(), std::vector<double>(a_grid.size(), 0.0));
    sweep::for_each(a_grid.size(), [&](std::size_t k) {  // per-a sums run in fixed node order
        cplx a = a_grid[k];
        double na = 1.0 - std::norm(a);
        double s = 0.0;
        std::size_t j = 0;
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            while (j < cut.size() && i == cut[j]) per_a[j++][k] = s;
            s += dens[i] * na / std::norm(1.0 - std::conj(a) * grid.nodes[i].z);
        }
        while (j < cut.size()) per_a[j++][k] = s;
    });
    for (std::size_t j = 0; j < r_maxes.size(); ++j)
        rep.values[j] = *std::max_element(per_a[j].begin(), per_a[j].end());
    rep.verdict = stability_verdict(rep.values);
    return rep;
}

DensityMeasure coefficient_density(ProviderPtr A) {
    return {[A](cplx z) {
                double w = 1.0 - std::norm(z);
                return std::norm(A->value(z)) * w * w * w;
            },
            "coefficient-alpha2"};
}

DensityMeasure derivative_density(const SolutionBasis& b, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("derivative_density: eps must lie in (0,1)");
    return {[b, eps](cplx z) {
                Jet j1 = b.f1->jet(z, 1), j2 = b.f2->jet(z, 1);
                double Sp = std::norm(j1[1]) + std::norm(j2[1]);
                double S = std::norm(j1[0]) + std::norm(j2[0]);
                return Sp * std::pow(S, eps - 1.0) * std::log(1.0 / std::abs(z));
            },
            "derivative-pair-eps"};
}

double ahlfors_shimizu_T0(const std::function<double(cplx)>& sph2, double r, const T0Options& opts) {
    // (1/pi) int sph2 log(r/|z|) dm  =  2 int_0^r M(s) log(r/s) s ds
    //                               =  2 r^2 int_0^inf M(r e^{-t}) t e^{-2t} dt
    auto mean_at = [&](double s) {
        return circle_mean([&](cplx z) { return sph2(z); }, s, opts.angular_count);
    };
    double I = integrate_real([&](double t) { return mean_at(r * std::exp(-t)) * t * std::exp(-2.0 * t); },
                              0.0, opts.t_max, opts.t_panels, opts.gl_points);
    return 2.0 * r * r * I;
}

double ahlfors_shimizu_T0_nested(const std::function<double(cplx)>& sph2, double r, int outer_panels,
                                 int gl_points, int angular_count) {
    auto mean_at = [&](double s) {
        return circle_mean([&](cplx z) { return sph2(z); }, s, angular_count);
    };
    // F(t) = int_{D(0,t)} sph2 dm = 2 pi int_0^t M(s) s ds; result = (1/pi) int_0^r F(t)/t dt
    auto F = [&](double t) {
        return 2.0 * kPi * integrate_real([&](double s) { return mean_at(s) * s; }, 0.0, t, 6, gl_points);
    };
    return (1.0 / kPi) *
           integrate_real([&](double t) { return F(t) / t; }, 1e-12, r, outer_panels, gl_points);
}

double circle_mean_u_balance(const SolutionBasis& b, double r, const T0Options& opts) {
    double mean = circle_mean([&](cplx z) { return aux_u(b, z); }, r, opts.angular_count);
    double u0 = aux_u(b, cplx(0.0));
    auto sph2 = [&](cplx z) {
        double q = eval_aux(b, z).quotient_spherical;
        return q * q;
    };
    return std::abs(mean - u0 - 2.0 * ahlfors_shimizu_T0(sph2, r, opts));
}

LittlewoodPaleyResult littlewood_paley_check(const JetProvider& f, double r_max, const T0Options& opts) {
    LittlewoodPaleyResult res;
    res.lhs = circle_mean([&](cplx z) { return std::norm(f.value(z)); }, r_max, opts.angular_count);
    auto dmean = [&](double s) {
        return circle_mean([&](cplx z) { return std::norm(f.derivative(z)); }, s, opts.angular_count);
    };
    double I = integrate_real(
        [&](double t) { return dmean(r_max * std::exp(-t)) * t * std::exp(-2.0 * t); }, 0.0, opts.t_max,
        opts.t_panels, opts.gl_points);
    res.rhs = std::norm(f.value(cplx(0.0))) + 4.0 * r_max * r_max * I;
    res.residual = std::abs(res.lhs - res.rhs);
    return res;
}

std::vector<double> sublevel_mass_profile(const SolutionBasis& b, double delta,
                                          const std::vector<double>& r_maxes, int radial_count,
                                          int angular_count) {
    if (r_maxes.empty()) throw std::invalid_argument("sublevel_mass_profile: no radii");
    std::vector<double> sorted = r_maxes;
    std::sort(sorted.begin(), sorted.end());
    SampleGrid grid = make_grid(radial_count, angular_count, sorted.back(), RadialScheme::boundary_refined);
    std::vector<double> mass(sorted.size(), 0.0);
    double acc = 0.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        cplx z = grid.nodes[i].z;
        while (j < sorted.size() && std::abs(z) > sorted[j]) mass[j++] = acc;
        Jet j1 = b.f1->jet(z, 0), j2 = b.f2->jet(z, 0);
        double S = std::norm(j1[0]) + std::norm(j2[0]);
        if (S < delta) acc += grid.nodes[i].weight / (1.0 - std::norm(z));
    }
    while (j < sorted.size()) mass[j++] = acc;
    return mass;
}

ReportRow lipschitz_audit(const JetProvider& f, double alpha, const SampleGrid& grid, std::size_t stride) {
    double norm = growth_norm(f, alpha, grid);
    if (norm <= 0.0) throw std::domain_error("lipschitz_audit: zero growth norm");
    auto g = [&](cplx z) { return std::abs(f.value(z)) * std::pow(1.0 - std::norm(z), alpha); };

    int M = grid.angular_count;
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); i += stride) {
        cplx z1 = grid.nodes[i].z;
        // angular neighbor and radial neighbor
        for (std::size_t nb : {i + 1, i + static_cast<std::size_t>(M)}) {
            if (nb >= grid.nodes.size()) continue;
            cplx z2 = grid.nodes[nb].z;
            double rho = pseudo_hyperbolic(z1, z2);
            if (rho <= 0.0 || rho > 0.5) continue;
            worst = std::max(worst, std::abs(g(z1) - g(z2)) / (rho * norm));
        }
    }
    ReportRow r = info_row("lipschitz-ratio-max", worst, "weighted-modulus-lipschitz");
    r.extra.emplace_back("alpha", format_sig17(alpha));
    return r;
}

ReportRow derivative_counterweight_audit(const SolutionBasis& b, const SampleGrid& grid) {
    double w2 = std::norm(b.wronskian);
    auto worst = sweep::max(grid.nodes.size(), [&](std::size_t i) {
        cplx z = grid.nodes[i].z;
        Jet j1 = b.f1->jet(z, 1), j2 = b.f2->jet(z, 1);
        double S = std::norm(j1[0]) + std::norm(j2[0]);
        double Sp = std::norm(j1[1]) + std::norm(j2[1]);
        return (w2 - S * Sp) / w2;  // positive means violation
    });
    return audit_row("pair-derivative-floor-violation", worst.value, 1e-12, "wronskian-cauchy-schwarz");
}

std::vector<ReportRow> min_modulus_audit(const SolutionBasis& b, const SampleGrid& grid) {
    double d1 = 0.0, d2 = 0.0;
    for (const auto& n : grid.nodes) {
        double w = 1.0 - std::norm(n.z);
        d1 = std::max(d1, std::abs(b.f1->derivative(n.z)) * w);
        d2 = std::max(d2, std::abs(b.f2->derivative(n.z)) * w);
    }
    double floor = std::abs(b.wronskian) / std::sqrt(d1 * d1 + d2 * d2);
    auto measured = sweep::max(grid.nodes.size(), [&](std::size_t i) {
        cplx z = grid.nodes[i].z;
        double m = std::abs(b.f1->value(z)) + std::abs(b.f2->value(z));
        return -(m / (1.0 - std::norm(z)));  // min via max of negation
    });
    double min_ratio = -measured.value;

    std::vector<ReportRow> rows;
    rows.push_back(audit_row("modulus-floor-violation", (floor - min_ratio) / floor, 1e-9,
                             "pair-modulus-floor"));
    ReportRow inf = info_row("modulus-floor-min-ratio", min_ratio, "pair-modulus-floor");
    inf.extra.emplace_back("floor", format_sig17(floor));
    rows.push_back(std::move(inf));
    return rows;
}

double min_modulus_outside(const JetProvider& f, const std::vector<ExclusionDisc>& exclusions,
                           const SampleGrid& grid) {
    double best = 1e308;
    for (const auto& n : grid.nodes) {
        bool inside = false;
        for (const auto& d : exclusions)
            if (contains(d, n.z)) {
                inside = true;
                break;
            }
        if (!inside) best = std::min(best, std::abs(f.value(n.z)));
    }
    return best;
}

}  // namespace disclab
