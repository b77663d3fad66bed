#pragma once

#include <vector>

#include "disclab/jet_provider.hpp"

namespace disclab {

// Finite Blaschke product over a zero list (repeats mean multiplicity).
// Factor for a zero a != 0:  (|a|/a) (a - z)/(1 - conj(a) z); zeros at the
// origin contribute a plain factor z.
class BlaschkeProduct final : public JetProvider {
public:
    explicit BlaschkeProduct(std::vector<cplx> zeros);

    Jet jet(cplx z, int order) const override;
    std::string descriptor() const override { return "blaschke"; }

    cplx operator()(cplx z) const { return jet(z, 0).value(); }

    // closed-form B'(zeros[n]) via the deleted product; 0 for a repeated zero
    cplx derivative_at_zero(std::size_t n) const;

    const std::vector<cplx>& zeros() const { return zeros_; }

private:
    Jet factor_jet(std::size_t n, cplx z, int order) const;
    std::vector<cplx> zeros_;
};

inline ProviderPtr make_blaschke(std::vector<cplx> zeros) {
    return std::make_shared<BlaschkeProduct>(std::move(zeros));
}

// min over n of prod_{k != n} pseudo_hyperbolic(z_k, z_n)
double separation_constant(const std::vector<cplx>& zeros);

// sup over the a-grid of sum_n w_n (1-|a|^2)/|1 - conj(a) z_n|^2
// (the kernel form of the Carleson condition for the point-mass measure
// sum_n w_n delta_{z_n}); default weights are w_n = 1 - |z_n|^2
double carleson_point_mass_constant(const std::vector<cplx>& points,
                                    const std::vector<double>& weights,
                                    const std::vector<cplx>& a_grid);
double carleson_point_mass_constant(const std::vector<cplx>& points,
                                    const std::vector<cplx>& a_grid);

// default evaluation-point family for Carleson suprema: the points themselves,
// the origin, and a boundary-refined radial fan up to |a| = 0.9995
std::vector<cplx> default_a_grid(const std::vector<cplx>& points, int rays = 16);

}  // namespace disclab
