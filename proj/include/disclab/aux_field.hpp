#pragma once

#include "disclab/disc_geometry.hpp"
#include "disclab/jet_provider.hpp"
#include "disclab/report.hpp"

namespace disclab {

// Pointwise data of u = log(|f1|^2 + |f2|^2) - log|W|, the potential whose
// conformal density e^{-u} equals the spherical derivative of f1/f2.
struct AuxField {
    double u = 0.0;
    cplx du;       // holomorphic derivative of u
    cplx d2u;      // second holomorphic derivative
    double grad_norm = 0.0;           // |grad u| = 2 |du|
    double laplacian = 0.0;           // 4 e^{-2u} = 4 |W|^2 / S^2
    double quotient_spherical = 0.0;  // (f1/f2)^# = |W| / S
};

AuxField eval_aux(const SolutionBasis& b, cplx z);
double aux_u(const SolutionBasis& b, cplx z);

// five-point FD Laplacian of a real field
double fd_laplacian(const std::function<double(cplx)>& f, cplx z, double h);

struct IdentityResiduals {
    double r1 = 0.0;  // |lap u - 4 e^{-2u}|, Richardson-extrapolated stencil
    double r2 = 0.0;  // |lap u + |grad u|^2 - e^{-u} lap e^u|, same stencil pair
    double r3 = 0.0;  // |A + d2u + du^2|, stencil-free
};

IdentityResiduals identity_residuals(const SolutionBasis& b, const JetProvider& A, cplx z,
                                     double fd_step = 1e-3);

// residual of the sign-flipped field: v = -u satisfies lap v = -4 e^{2v}
double liouville_residual(const SolutionBasis& b, cplx z, double fd_step = 1e-3);

// S_w = w'''/w' - (3/2)(w''/w')^2
cplx schwarzian(const JetProvider& w, cplx z);
// Schwarzian of f1/f2, evaluated through whichever quotient orientation keeps
// the denominator large (the value is inversion-invariant)
cplx quotient_schwarzian(const SolutionBasis& b, cplx z);

// coefficient recovered from the product E = f1 f2:
// 4A = (E'/E)^2 - (W/E)^2 - 2 E''/E
cplx bank_laine_coefficient(const SolutionBasis& b, cplx z);

double spherical_derivative(const JetProvider& w, cplx z);
// sup over grid nodes of w#(z) (1-|z|^2)
double normality_sup(const JetProvider& w, const SampleGrid& grid);
// pole-free version for the basis quotient
double normality_sup(const SolutionBasis& b, const SampleGrid& grid);

// sup over grid of |grad u| (1-|z|^2)^alpha
double grad_sup(const SolutionBasis& b, const SampleGrid& grid, double alpha = 1.0);

std::vector<double> u_circle_means(const SolutionBasis& b, const std::vector<double>& radii,
                                   int angular_count = 256);

// circle means must be non-decreasing and convex in log r
std::vector<ReportRow> subharmonicity_audit(const SolutionBasis& b, const std::vector<double>& radii,
                                            int angular_count = 256, double tol = 1e-6);

// two-point smoothness of S = |f1|^2 + |f2|^2 against the weighted distance
// rho_omega: |log S(z1) - log S(z2)| <= Lambda * rho_omega with Lambda measured
// as max |grad u| * omega along the geodesic polyline
std::vector<ReportRow> smoothness_check(const SolutionBasis& b, cplx z1, cplx z2,
                                        const std::function<double(cplx)>& omega, int knots = 128);

}  // namespace disclab
