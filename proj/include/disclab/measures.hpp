#pragma once

#include "disclab/disc_geometry.hpp"
#include "disclab/jet_provider.hpp"
#include "disclab/report.hpp"

namespace disclab {

// verdict over a profile sampled at increasing radii:
//   growing     -- last value >= 2x the first
//   stabilized  -- relative spread (max-min)/max <= 10%
//   inconclusive otherwise
std::string stability_verdict(const std::vector<double>& values);

// sup over grid nodes of |f(z)| (1-|z|^2)^alpha
double growth_norm(const JetProvider& f, double alpha, const SampleGrid& grid);

struct ProfileReport {
    std::vector<double> radii;
    std::vector<double> values;
    std::string verdict;
};

// per-radius circle suprema of |f|(1-|z|^2)^alpha (polished scan, so narrow
// boundary peaks are captured)
ProfileReport growth_profile(const JetProvider& f, double alpha,
                             std::vector<double> radii = {0.9, 0.99, 0.999}, int scan_count = 512);

// absolutely continuous measure density(z) dm(z)
struct DensityMeasure {
    std::function<double(cplx)> density;
    std::string label;
};

// lower bound for the Carleson constant: sup over the a-grid of
// int (1-|a|^2)/|1 - conj(a) z|^2 density dm over D(0, grid.r_max)
double carleson_constant(const DensityMeasure& mu, const std::vector<cplx>& a_grid,
                         const SampleGrid& grid);

struct CarlesonReport {
    std::vector<double> r_maxes;
    std::vector<double> values;  // non-decreasing in r_max by construction
    std::string verdict;
};

// profile across integration radii with one fixed a-grid and one fixed node
// family (prefix sums over radius-sorted nodes)
CarlesonReport carleson_profile(const DensityMeasure& mu, const std::vector<cplx>& a_grid,
                                std::vector<double> r_maxes = {0.9, 0.99, 0.999},
                                int radial_count = 160, int angular_count = 256);

// |A|^2 (1-|z|^2)^3 dm, the Carleson density attached to the alpha = 2
// coefficient growth class
DensityMeasure coefficient_density(ProviderPtr A);

// (|f1'|^2 + |f2'|^2) (|f1|^2 + |f2|^2)^{eps-1} log(1/|z|) dm
DensityMeasure derivative_density(const SolutionBasis& b, double eps);

struct T0Options {
    int angular_count = 256;
    int t_panels = 10;   // panels for the substituted radial integral
    int gl_points = 24;
    double t_max = 20.0;
};

// Ahlfors-Shimizu height of w at radius r from the squared spherical
// derivative field sph2:  (1/pi) int_{D(0,r)} sph2 log(r/|z|) dm,
// evaluated through the substitution s = r e^{-t}
double ahlfors_shimizu_T0(const std::function<double(cplx)>& sph2, double r, const T0Options& opts = {});
// independent evaluation through the nested form
// (1/pi) int_0^r [ int_{D(0,t)} sph2 dm ] dt/t
double ahlfors_shimizu_T0_nested(const std::function<double(cplx)>& sph2, double r,
                                 int outer_panels = 12, int gl_points = 24, int angular_count = 256);

// residual of: circle_mean(u, r) = u(0) + 2 T0(r, f1/f2)
double circle_mean_u_balance(const SolutionBasis& b, double r, const T0Options& opts = {});

struct LittlewoodPaleyResult {
    double lhs = 0.0;  // circle mean of |f|^2 at r_max
    double rhs = 0.0;  // |f(0)|^2 + (2/pi) int |f'|^2 log(r_max/|z|) dm
    double residual = 0.0;
};
LittlewoodPaleyResult littlewood_paley_check(const JetProvider& f, double r_max,
                                             const T0Options& opts = {});

// mass of { S < delta } in the hyperbolic area element dm/(1-|z|^2), profiled
// over integration radii
std::vector<double> sublevel_mass_profile(const SolutionBasis& b, double delta,
                                          const std::vector<double>& r_maxes,
                                          int radial_count = 160, int angular_count = 256);

// empirical Lipschitz ratio of g = |f|(1-|z|^2)^alpha over node pairs with
// pseudo-hyperbolic separation <= 1/2:
// max |g(z1)-g(z2)| / (rho_p(z1,z2) * sup g)
ReportRow lipschitz_audit(const JetProvider& f, double alpha, const SampleGrid& grid,
                          std::size_t stride = 17);

// pointwise floor |W|^2 <= S * (|f1'|^2 + |f2'|^2): reports the worst relative
// violation over the grid
ReportRow derivative_counterweight_audit(const SolutionBasis& b, const SampleGrid& grid);

// (|f1|+|f2|)/(1-|z|^2) >= |W| / sqrt(d1^2 + d2^2) with d_j = sup |f_j'|(1-|z|^2);
// returns the audit row plus the measured minimum
std::vector<ReportRow> min_modulus_audit(const SolutionBasis& b, const SampleGrid& grid);

// smallest |f| over nodes outside the exclusion discs (informational)
double min_modulus_outside(const JetProvider& f, const std::vector<ExclusionDisc>& exclusions,
                           const SampleGrid& grid);

}  // namespace disclab
