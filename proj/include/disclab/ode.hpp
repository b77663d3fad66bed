#pragma once

#include <optional>

#include "disclab/disc_geometry.hpp"
#include "disclab/jet_provider.hpp"

namespace disclab {

// thrown when step control collapses or step budgets are exhausted;
// carries the last trusted point for diagnostics
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& msg, cplx last_point)
        : std::runtime_error(msg), last_point_(last_point) {}
    cplx last_point() const { return last_point_; }

private:
    cplx last_point_;
};

struct IntegrationOptions {
    double tol = 1e-10;           // relative local error target
    double abs_tol = 1e-12;
    double boundary_frac = 0.05;  // step <= boundary_frac * (1 - |z|)
    double safety = 0.9;
    double min_step = 1e-13;
    long max_steps = 4000000;
};

struct InitialData {
    cplx f{1.0, 0.0};
    cplx fp{0.0, 0.0};
};

// one accepted step of the joint basis system (f1, f1', f2, f2')
struct BasisSample {
    double s = 0.0;  // arclength from the path start
    cplx z;
    std::array<cplx, 4> y;     // f1, f1', f2, f2'
    std::array<cplx, 4> ydot;  // d/ds of the above
};

struct BasisState {
    cplx z;
    cplx f1, f1p, f2, f2p;
};

// adaptive trace of a solution pair along one polyline path
class SolutionTrace {
public:
    std::vector<BasisSample> samples;  // ordered by s
    PathSpec path;

    double total_length() const { return samples.empty() ? 0.0 : samples.back().s; }
    // cubic-Hermite dense output at arclength s in [0, total_length]
    BasisState dense_eval(double s) const;
    cplx wronskian_at_sample(std::size_t i) const {
        const auto& y = samples[i].y;
        return y[0] * y[3] - y[1] * y[2];
    }
};

// integrate the joint system f'' + A f = 0 for two initial jets along a path
SolutionTrace integrate_basis(const JetProvider& A, const PathSpec& path, InitialData init1,
                              InitialData init2, const IntegrationOptions& opts = {});

struct PropagatedBasis {
    SolutionBasis basis;                // ode-trace providers, Wronskian exactly the initial one
    std::vector<SolutionTrace> traces;  // one per path
};

// basis with initial jets (1,0), (0,1) at z0 along an explicit path family
PropagatedBasis propagate_basis(ProviderPtr A, cplx z0, const std::vector<PathSpec>& paths,
                                const IntegrationOptions& opts = {});
// default family: `rays` radial paths from z0 out to radius r, ray angles
// offset off the positive real axis
PropagatedBasis propagate_basis(ProviderPtr A, cplx z0, int rays = 8, double r = 0.9,
                                const IntegrationOptions& opts = {});

// jets of a solution from its value/derivative and the coefficient jets:
// f^(k+2) = -sum_j C(k,j) A^(j) f^(k-j)
Jet solution_jet_from_ode(const Jet& A_jet, cplx f, cplx fp, int order);

// max over grid nodes of |f'' + A f| / (1 + |f|)
double residual_metric(const JetProvider& A, const JetProvider& f, const SampleGrid& grid);
// same restricted to nodes outside the exclusion discs
double residual_metric(const JetProvider& A, const JetProvider& f, const SampleGrid& grid,
                       const std::vector<ExclusionDisc>& exclusions);

struct ZeroSearchOptions {
    int max_newton_iters = 140;  // multiple zeros converge only linearly
    double dedupe_pseudo_distance = 1e-6;
    double verify_abs = 1e-10;
    double radial_margin = 0.02;  // accept zeros with |z| <= r_max + margin
};

// Newton zero search seeded at grid local minima of |f|
std::vector<cplx> find_zeros(const JetProvider& f, const SampleGrid& grid,
                             const ZeroSearchOptions& opts = {});

// quadrature of 1/f1^2 along a polyline
cplx inverse_square_integral(const JetProvider& f1, const std::vector<cplx>& vertices,
                             double max_panel = 0.125, int gl_points = 32);

// second solution f2(z) = f1(z) * int_alpha^z dzeta / f1(zeta)^2, normalized so
// that W(f1, f2) = 1.  Query paths run straight from alpha unless exclusion
// discs force a detour (only the disc containing the query may be entered).
ProviderPtr second_solution(ProviderPtr f1, cplx alpha, std::vector<ExclusionDisc> exclusions = {},
                            double max_panel = 0.125, int gl_points = 32);

}  // namespace disclab
