#include "disclab/disc_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/sweep.hpp"

namespace disclab {

std::vector<cplx> hyperbolic_segment(cplx z1, cplx z2, int knots) {
    require_in_disc(z1, "hyperbolic_segment");
    require_in_disc(z2, "hyperbolic_segment");
    if (knots < 2) throw std::invalid_argument("hyperbolic_segment: need at least 2 knots");
    // phi_{z1} maps z1 -> 0 and z2 -> w; the geodesic is the image of the
    // straight segment [0, w] under the same involution
    cplx w = mobius_involution(z1, z2);
    std::vector<cplx> pts(knots);
    for (int i = 0; i < knots; ++i) {
        double t = static_cast<double>(i) / (knots - 1);
        pts[i] = mobius_involution(z1, t * w);
    }
    pts.front() = z1;
    pts.back() = z2;
    return pts;
}

double weighted_distance(cplx z1, cplx z2, const std::function<double(cplx)>& omega, int knots) {
    auto pts = hyperbolic_segment(z1, z2, knots);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        cplx a = pts[i], b = pts[i + 1];
        double wa = omega(a), wb = omega(b);
        if (!(wa > 0.0) || !(wb > 0.0)) throw std::domain_error("weighted_distance: weight must be positive");
        acc += std::abs(b - a) * 0.5 * (1.0 / wa + 1.0 / wb);
    }
    return acc;
}

EuclideanDisc euclidean_disc(const ExclusionDisc& d) {
    require_in_disc(d.center, "euclidean_disc");
    if (!(d.radius > 0.0 && d.radius < 1.0)) throw std::invalid_argument("euclidean_disc: radius must lie in (0,1)");
    double a2 = std::norm(d.center);
    double den = 1.0 - d.radius * d.radius * a2;
    return {d.center * ((1.0 - d.radius * d.radius) / den), d.radius * (1.0 - a2) / den};
}

double path_length(const PathSpec& p) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) len += std::abs(p.vertices[i + 1] - p.vertices[i]);
    return len;
}

namespace {

// smallest distance from the segment [a,b] to point c
double segment_distance(cplx a, cplx b, cplx c) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(c - a);
    double t = std::clamp(((c - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(c - (a + t * ab));
}

// segment-circle intersection parameters in [0,1]; returns false when disjoint
bool segment_circle_hits(cplx a, cplx b, const EuclideanDisc& e, double& t0, double& t1) {
    cplx d = b - a, m = a - e.center;
    double A = std::norm(d);
    if (A == 0.0) return false;
    double B = 2.0 * (m * std::conj(d)).real();
    double C = std::norm(m) - e.radius * e.radius;
    double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) return false;
    double s = std::sqrt(disc);
    t0 = (-B - s) / (2.0 * A);
    t1 = (-B + s) / (2.0 * A);
    return t1 > 0.0 && t0 < 1.0;
}

}  // namespace

bool path_avoids_exclusions(const PathSpec& p, double tol) {
    if (p.vertices.size() < 2) return false;
    cplx terminal = p.vertices.back();
    for (const auto& d : p.exclusions) {
        if (contains(d, terminal)) continue;  // terminal disc may be entered
        EuclideanDisc e = euclidean_disc(d);
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
            if (segment_distance(p.vertices[i], p.vertices[i + 1], e.center) < e.radius - tol) return false;
    }
    return true;
}

PathSpec build_avoiding_path(cplx start, cplx target, std::vector<ExclusionDisc> exclusions,
                             double inflation, int arc_segments) {
    require_in_disc(start, "build_avoiding_path");
    require_in_disc(target, "build_avoiding_path");
    for (const auto& d : exclusions) {
        if (contains(d, start) && !contains(d, target))
            throw std::invalid_argument("build_avoiding_path: start lies inside a non-terminal exclusion disc");
    }

    PathSpec path;
    path.vertices = {start, target};
    path.exclusions = exclusions;

    // Euclidean pictures, slightly inflated so the polyline keeps clear;
    // the disc containing the target is exempt.
    std::vector<EuclideanDisc> blocked;
    for (const auto& d : exclusions) {
        if (contains(d, target)) continue;
        EuclideanDisc e = euclidean_disc(d);
        double max_infl = (1.0 - 1e-9 - std::abs(e.center)) / e.radius;  // stay inside the unit disc
        e.radius *= std::min(inflation, std::max(1.0, max_infl));
        blocked.push_back(e);
    }

    for (int iter = 0; iter < 256; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < path.vertices.size() && !changed; ++i) {
            cplx a = path.vertices[i], b = path.vertices[i + 1];
            for (const auto& e : blocked) {
                double t0, t1;
                if (!segment_circle_hits(a, b, e, t0, t1)) continue;
                if (segment_distance(a, b, e.center) >= e.radius * (1.0 - 1e-13)) continue;
                // walk around the circle between the entry and exit directions,
                // choosing the shorter angular route
                double eps = 1e-6;
                cplx pin = a + std::clamp(t0, 0.0, 1.0) * (b - a);
                cplx pout = a + std::clamp(t1, 0.0, 1.0) * (b - a);
                double a0 = std::arg(pin - e.center), a1 = std::arg(pout - e.center);
                double delta = a1 - a0;
                while (delta > kPi) delta -= 2.0 * kPi;
                while (delta < -kPi) delta += 2.0 * kPi;
                std::vector<cplx> arc;
                // chords between consecutive arc vertices must themselves clear
                // the disc, so the arc radius carries the chord sagitta factor
                double rr = e.radius * (1.0 + eps) / std::cos(0.5 * std::abs(delta) / arc_segments);
                for (int k = 0; k <= arc_segments; ++k) {
                    double ang = a0 + delta * (static_cast<double>(k) / arc_segments);
                    cplx v = e.center + rr * cplx(std::cos(ang), std::sin(ang));
                    if (std::abs(v) >= 1.0 - 1e-9)
                        throw std::runtime_error("build_avoiding_path: detour would leave the unit disc");
                    arc.push_back(v);
                }
                path.vertices.insert(path.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1, arc.begin(), arc.end());
                changed = true;
                break;
            }
        }
        if (!changed) {
            if (!path_avoids_exclusions(path, 1e-9))
                throw std::runtime_error("build_avoiding_path: could not route around exclusions");
            return path;
        }
    }
    throw std::runtime_error("build_avoiding_path: detour iteration did not settle");
}

SampleGrid make_grid(int radial_count, int angular_count, double r_max, RadialScheme scheme) {
    if (radial_count < 1 || angular_count < 1) throw std::invalid_argument("make_grid: counts must be positive");
    if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("make_grid: r_max must lie in (0,1)");

    // radial cell edges
    std::vector<double> edges;
    edges.push_back(0.0);
    if (scheme == RadialScheme::uniform) {
        for (int i = 1; i <= radial_count; ++i) edges.push_back(r_max * i / radial_count);
    } else {
        // dyadic bands accumulating at the rim: band j spans
        // [r_max(1-2^-j), r_max(1-2^-(j-1))], each band carrying its share of cells
        int bands = std::max(1, static_cast<int>(std::floor(std::log2(static_cast<double>(radial_count)))));
        int per = radial_count / bands, extra = radial_count % bands;
        double lo = 0.0;
        for (int j = 1; j <= bands; ++j) {
            double hi = (j == bands) ? r_max : r_max * (1.0 - std::ldexp(1.0, -j));
            int cells = per + (j <= extra ? 1 : 0);
            for (int i = 1; i <= cells; ++i) edges.push_back(lo + (hi - lo) * i / cells);
            lo = hi;
        }
    }

    SampleGrid g;
    g.r_max = r_max;
    g.radial_count = radial_count;
    g.angular_count = angular_count;
    g.scheme = scheme;
    double dtheta = 2.0 * kPi / angular_count;
    g.nodes.reserve(static_cast<std::size_t>(radial_count) * angular_count);
    for (int i = 0; i < radial_count; ++i) {
        double r0 = edges[i], r1 = edges[i + 1];
        double r = 0.5 * (r0 + r1);
        g.radii.push_back(r);
        double wr = r * (r1 - r0);  // midpoint is exact for the linear factor r
        for (int j = 0; j < angular_count; ++j) {
            double th = (j + 0.5) * dtheta;
            g.nodes.push_back({r * cplx(std::cos(th), std::sin(th)), wr * dtheta});
        }
    }
    return g;
}

double grid_weight_sum(const SampleGrid& g) {
    return sweep::sum(g.nodes.size(), [&](std::size_t i) { return g.nodes[i].weight; });
}

double integrate(const SampleGrid& g, const std::function<double(cplx)>& f) {
    return sweep::sum(g.nodes.size(), [&](std::size_t i) { return g.nodes[i].weight * f(g.nodes[i].z); });
}

double circle_mean(const std::function<double(cplx)>& f, double r, int angular_count) {
    if (angular_count < 1) throw std::invalid_argument("circle_mean: angular_count must be positive");
    double acc = sweep::sum(static_cast<std::size_t>(angular_count), [&](std::size_t j) {
        double th = (static_cast<double>(j) + 0.5) * 2.0 * kPi / angular_count;
        return f(r * cplx(std::cos(th), std::sin(th)));
    });
    return acc / angular_count;
}

double circle_sup(const std::function<double(cplx)>& f, double r, int scan_count, int refine_iters) {
    auto at = [&](double th) { return f(r * cplx(std::cos(th), std::sin(th))); };
    std::vector<double> v(static_cast<std::size_t>(scan_count));
    for (int j = 0; j < scan_count; ++j) v[static_cast<std::size_t>(j)] = at((j + 0.5) * 2.0 * kPi / scan_count);
    double best = -1e308;
    const double golden = 0.381966011250105;  // 2 - phi
    for (int j = 0; j < scan_count; ++j) {
        double vm = v[static_cast<std::size_t>(j)];
        double vl = v[static_cast<std::size_t>((j + scan_count - 1) % scan_count)];
        double vr = v[static_cast<std::size_t>((j + 1) % scan_count)];
        if (vm < vl || vm < vr) { best = std::max(best, vm); continue; }
        // golden-section polish on the bracketing interval
        double h = 2.0 * kPi / scan_count;
        double lo = (j + 0.5) * h - h, hi = (j + 0.5) * h + h;
        double x1 = lo + golden * (hi - lo), x2 = hi - golden * (hi - lo);
        double f1 = at(x1), f2 = at(x2);
        for (int it = 0; it < refine_iters && hi - lo > 1e-14; ++it) {
            if (f1 < f2) {
                lo = x1; x1 = x2; f1 = f2;
                x2 = hi - golden * (hi - lo); f2 = at(x2);
            } else {
                hi = x2; x2 = x1; f2 = f1;
                x1 = lo + golden * (hi - lo); f1 = at(x1);
            }
        }
        best = std::max({best, f1, f2, vm});
    }
    return best;
}

}  // namespace disclab
