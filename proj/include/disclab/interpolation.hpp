#pragma once

#include "disclab/blaschke.hpp"
#include "disclab/disc_geometry.hpp"
#include "disclab/jet_provider.hpp"
#include "disclab/report.hpp"

namespace disclab {

// jets of f' as a provider (order shifted by one)
ProviderPtr make_derivative(ProviderPtr f);

// Interpolant h(z) = sum_n w_n prod_{k != n} phi_{z_k}(z) / phi_{z_k}(z_n):
// value w_n at node z_n, bounded surrogate of the separated-sequence
// interpolation operator.  All-zero target lists are rejected as degenerate.
class LagrangeBlaschke final : public JetProvider {
public:
    LagrangeBlaschke(std::vector<cplx> nodes, std::vector<cplx> targets);
    Jet jet(cplx z, int order) const override;
    std::string descriptor() const override { return "composite"; }

    const std::vector<cplx>& nodes() const { return nodes_; }
    const std::vector<cplx>& targets() const { return targets_; }
    // sum_n |w_n| / prod_{k != n} rho_p(z_k, z_n); bounds |h| on the disc
    double apriori_bound() const;

private:
    std::vector<cplx> nodes_, targets_;
    std::vector<cplx> denom_;  // prod_{k != n} phi_{z_k}(z_n)
};

ProviderPtr lagrange_blaschke_solve(std::vector<cplx> nodes, std::vector<cplx> targets);

// Osculating variant g(z) = sum_n (a_n + b_n phi_{z_n}(z)) prod_{k != n}
// (phi_{z_k}(z)/phi_{z_k}(z_n))^2 matching g(z_n) = v_n, g'(z_n) = d_n;
// the per-node 2x2 systems are solved in closed form.
ProviderPtr hermite_solve(std::vector<cplx> nodes, std::vector<cplx> values, std::vector<cplx> derivatives);

// largest eta in (0,1) with 12 eta/(1-eta)^2 = delta/2, shrunk by a relative
// 1e-13 so the strict inequality survives roundoff; satisfies eta < delta/3
double earl_eta(double delta);

// ---- constructions ------------------------------------------------------

// coefficient A = -f''/f for f = F e^G when F carries simple zeros at `zeros`
// (where f''(zero) = 0 must hold); near a zero the ratio is evaluated through
// a deflated local Taylor series, elsewhere through provider jets
ProviderPtr removable_log_derivative_coefficient(ProviderPtr F, ProviderPtr G, std::vector<cplx> zeros,
                                                 double near_pseudo = 1e-2, int series_order = 8);

struct PrescribedZeroResult {
    std::vector<cplx> zeros;
    ProviderPtr A;
    ProviderPtr f1;      // B e^{Bk}
    ProviderPtr k;       // interpolant with k(z_n) = -B''(z_n) / (2 B'(z_n)^2)
    std::shared_ptr<const BlaschkeProduct> B;
    std::vector<ReportRow> rows;
};

// solution with zero set exactly Lambda; audits include the spherical-derivative
// identity (f1/f2)^#(z_n)(1-|z_n|^2)^2 = |B'(z_n)|^2 (1-|z_n|^2)^2 with f2
// recovered by quadrature plus re-integration across the zero
PrescribedZeroResult prescribed_zero_equation(std::vector<cplx> zeros, const SampleGrid& grid,
                                              double display_rel_tol = 1e-6);

struct InterpolatingSolutionResult {
    ProviderPtr f;  // h e^{Bg}
    ProviderPtr A;
    ProviderPtr h;
    ProviderPtr g;
    std::vector<cplx> surrogate_zeros;
    std::vector<ReportRow> rows;
};

// solution of f'' + A f = 0 with f(z_n) = w_n via the bounded surrogate
InterpolatingSolutionResult interpolating_solution_equation(std::vector<cplx> nodes,
                                                            std::vector<cplx> targets,
                                                            const SampleGrid& grid);

struct FixedPointSimpleResult {
    ProviderPtr f1;  // z + eps z^3 B(z)
    ProviderPtr A;
    std::vector<cplx> fixed_points;  // detected
    std::vector<ReportRow> rows;
};

// f1 = z + eps z^3 B: fixes {0} u Lambda, sandwiched between (1 +- eps)|z|
FixedPointSimpleResult fixed_point_simple(std::vector<cplx> lambda, double eps, const SampleGrid& grid,
                                          double audit_tol = 1e-9);

enum class FixedPointType { attractive, neutral, repulsive };
double multiplier(FixedPointType t);  // 1/2, 1, 2

struct FixedPointTypedResult {
    ProviderPtr f1;  // exp(h + B g)
    ProviderPtr A;
    std::vector<ReportRow> rows;
};

// zero-free solution fixing each node with prescribed multiplier type;
// nodes on (or within 1e-6 of) the principal-log cut are rejected
FixedPointTypedResult fixed_point_typed(std::vector<cplx> nodes, std::vector<FixedPointType> types,
                                        const SampleGrid& grid, double audit_tol = 1e-9);

// empirical two-point separation constants: pseudo-hyperbolic gaps between
// zeros / critical points of the pair against the normalized-Wronskian scale
std::vector<ReportRow> separation_audit(const SolutionBasis& b, const SampleGrid& grid);

}  // namespace disclab
