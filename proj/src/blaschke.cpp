#include "disclab/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/disc_geometry.hpp"

namespace disclab {

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
    for (cplx a : zeros_) require_in_disc(a, "blaschke zero");
}

Jet BlaschkeProduct::factor_jet(std::size_t n, cplx z, int order) const {
    cplx a = zeros_[n];
    Jet Z = Jet::variable(z, order);
    if (a == cplx(0.0)) return Z;
    cplx unim = std::abs(a) / a;
    return (unim * (Jet::constant(a, order) - Z)) / (1.0 - std::conj(a) * Z);
}

Jet BlaschkeProduct::jet(cplx z, int order) const {
    if (zeros_.empty()) return Jet::constant(1.0, order);

    if (zeros_.size() <= 64) {
        Jet prod = factor_jet(0, z, order);
        for (std::size_t n = 1; n < zeros_.size(); ++n) prod = prod * factor_jet(n, z, order);
        return prod;
    }

    // log-space accumulation against underflow: away from zeros, sum factor
    // log-jets and exponentiate; at/near a zero, peel the closest vanishing
    // factor off and treat the deleted product in log-space.
    std::size_t nearest = 0;
    double dmin = 1e308;
    for (std::size_t n = 0; n < zeros_.size(); ++n) {
        double d = std::abs(z - zeros_[n]);
        if (d < dmin) { dmin = d; nearest = n; }
    }
    bool peel = dmin < 1e-3;
    Jet logsum = Jet::constant(0.0, order);
    double logabs = 0.0;
    for (std::size_t n = 0; n < zeros_.size(); ++n) {
        if (peel && n == nearest) continue;
        Jet f = factor_jet(n, z, order);
        Jet lg = log(f);
        logabs += std::log(std::abs(f.value()));
        lg[0] = cplx(0.0, lg[0].imag());  // keep |.| in a separate real accumulator
        logsum = logsum + lg;
    }
    logsum[0] += logabs;
    Jet rest = exp(logsum);
    return peel ? factor_jet(nearest, z, order) * rest : rest;
}

cplx BlaschkeProduct::derivative_at_zero(std::size_t n) const {
    cplx a = zeros_[n];
    cplx deleted(1.0, 0.0);
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
        if (k == n) continue;
        if (zeros_[k] == a) return cplx(0.0);  // repeated zero: derivative vanishes
        deleted *= factor_jet(k, a, 0).value();
    }
    cplx own_deriv = (a == cplx(0.0)) ? cplx(1.0) : -(std::abs(a) / a) / (1.0 - std::norm(a));
    return own_deriv * deleted;
}

double separation_constant(const std::vector<cplx>& zeros) {
    if (zeros.size() < 2) return 1.0;
    double best = 1e308;
    for (std::size_t n = 0; n < zeros.size(); ++n) {
        double prod = 1.0;
        for (std::size_t k = 0; k < zeros.size(); ++k)
            if (k != n) prod *= pseudo_hyperbolic(zeros[k], zeros[n]);
        best = std::min(best, prod);
    }
    return best;
}

double carleson_point_mass_constant(const std::vector<cplx>& points,
                                    const std::vector<double>& weights,
                                    const std::vector<cplx>& a_grid) {
    if (points.size() != weights.size())
        throw std::invalid_argument("carleson_point_mass_constant: point/weight size mismatch");
    double best = 0.0;
    for (cplx a : a_grid) {
        double s = 0.0;
        double na = 1.0 - std::norm(a);
        for (std::size_t n = 0; n < points.size(); ++n)
            s += weights[n] * na / std::norm(1.0 - std::conj(a) * points[n]);
        best = std::max(best, s);
    }
    return best;
}

double carleson_point_mass_constant(const std::vector<cplx>& points, const std::vector<cplx>& a_grid) {
    std::vector<double> w(points.size());
    for (std::size_t n = 0; n < points.size(); ++n) w[n] = 1.0 - std::norm(points[n]);
    return carleson_point_mass_constant(points, w, a_grid);
}

std::vector<cplx> default_a_grid(const std::vector<cplx>& points, int rays) {
    std::vector<cplx> grid = points;
    grid.push_back(cplx(0.0));
    for (int j = 0; j < 14; ++j) {
        double r = std::min(1.0 - std::ldexp(1.0, -j - 1), 0.9995);
        for (int k = 0; k < rays; ++k) {
            double th = (k + 0.5) * 2.0 * kPi / rays;
            grid.push_back(r * cplx(std::cos(th), std::sin(th)));
        }
        if (r >= 0.9995) break;
    }
    return grid;
}

}  // namespace disclab
