#pragma once

#include <functional>
#include <vector>

#include "disclab/jet.hpp"

namespace disclab {

// ---- basic disc guards ------------------------------------------------

inline bool in_disc(cplx z, double margin = 0.0) { return std::abs(z) < 1.0 - margin; }

inline void require_in_disc(cplx z, const char* what) {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument(std::string(what) + ": point not inside the unit disc");
}

// ---- Moebius involution and metrics -----------------------------------

// phi_a(z) = (a - z) / (1 - conj(a) z); self-inverse, swaps 0 and a
inline cplx mobius_involution(cplx a, cplx z) {
    return (a - z) / (1.0 - std::conj(a) * z);
}
inline Jet mobius_involution(cplx a, const Jet& z) {
    return (Jet::constant(a, z.order()) - z) / (1.0 - std::conj(a) * z);
}
// d/dz phi_a at z
inline cplx mobius_involution_derivative(cplx a, cplx z) {
    cplx den = 1.0 - std::conj(a) * z;
    return (std::norm(a) - 1.0) / (den * den);
}

// pseudo-hyperbolic distance |phi_z(w)|
inline double pseudo_hyperbolic(cplx z, cplx w) {
    return std::abs(w - z) / std::abs(1.0 - std::conj(w) * z);
}

// hyperbolic distance (1/2) log((1+p)/(1-p)), p = pseudo-hyperbolic
inline double hyperbolic(cplx z, cplx w) {
    double p = pseudo_hyperbolic(z, w);
    if (p >= 1.0) throw std::domain_error("hyperbolic: points not both inside the unit disc");
    return 0.5 * std::log((1.0 + p) / (1.0 - p));
}

// polyline discretization of the hyperbolic geodesic from z1 to z2
std::vector<cplx> hyperbolic_segment(cplx z1, cplx z2, int knots = 128);

// integral of |dz|/omega along the geodesic polyline (weighted distance)
double weighted_distance(cplx z1, cplx z2, const std::function<double(cplx)>& omega, int knots = 128);

// ---- exclusion discs ---------------------------------------------------

// disc in the pseudo-hyperbolic metric: { z : pseudo_hyperbolic(center, z) < radius }
struct ExclusionDisc {
    cplx center;
    double radius = 0.0;  // in (0,1)
};

struct EuclideanDisc {
    cplx center;
    double radius = 0.0;
};

// Euclidean picture of a pseudo-hyperbolic disc
EuclideanDisc euclidean_disc(const ExclusionDisc& d);

inline bool contains(const ExclusionDisc& d, cplx z) { return pseudo_hyperbolic(d.center, z) < d.radius; }

// ---- paths --------------------------------------------------------------

struct PathSpec {
    std::vector<cplx> vertices;            // polyline, at least 2 vertices
    std::vector<ExclusionDisc> exclusions; // pairwise disjoint; only the disc holding the terminal point may be entered
};

double path_length(const PathSpec& p);

// true when every segment stays clear of every exclusion disc except the one
// containing the terminal vertex
bool path_avoids_exclusions(const PathSpec& p, double tol = 1e-12);

// polyline from start to target that detours around exclusion discs
// (terminal disc excepted); throws std::runtime_error when no such path is found
PathSpec build_avoiding_path(cplx start, cplx target, std::vector<ExclusionDisc> exclusions,
                             double inflation = 1.01, int arc_segments = 32);

// ---- sample grids -------------------------------------------------------

enum class RadialScheme { uniform, boundary_refined };

struct GridNode {
    cplx z;
    double weight = 0.0;  // area element weight: integrates dm over D(0, r_max)
};

struct SampleGrid {
    std::vector<GridNode> nodes;  // sorted by radius, then angle
    std::vector<double> radii;    // distinct radial levels
    double r_max = 0.0;
    int radial_count = 0;
    int angular_count = 0;
    RadialScheme scheme = RadialScheme::uniform;
};

// midpoint product rule in (r, theta); angular midpoints are offset so no node
// sits on the positive real axis.  Sum of weights equals pi r_max^2 exactly.
SampleGrid make_grid(int radial_count, int angular_count, double r_max,
                     RadialScheme scheme = RadialScheme::boundary_refined);

double grid_weight_sum(const SampleGrid& g);

// quadrature of f dm over D(0, r_max) on the grid (deterministic chunked sum)
double integrate(const SampleGrid& g, const std::function<double(cplx)>& f);

// equal-weight mean over the circle |z| = r; exact for trigonometric
// polynomials of degree < angular_count
double circle_mean(const std::function<double(cplx)>& f, double r, int angular_count = 256);

// supremum of f over the circle |z| = r: coarse scan plus golden-section polish
// around the best local maxima (captures boundary-narrow peaks)
double circle_sup(const std::function<double(cplx)>& f, double r, int scan_count = 256, int refine_iters = 80);

}  // namespace disclab
