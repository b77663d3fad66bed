#pragma once

#include <functional>
#include <vector>

#include "disclab/jet.hpp"

namespace disclab {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// Newton-refined Legendre nodes, cached per n
const GaussRule& gauss_legendre(int n);

// contour integral of f dz along the straight segment [a, b]
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int gl_points = 32);

// composite rule along a polyline; segments are split into panels of length
// at most max_panel
cplx integrate_polyline(const std::function<cplx(cplx)>& f, const std::vector<cplx>& vertices,
                        double max_panel = 0.125, int gl_points = 32);

// real integral over [a, b]
double integrate_real(const std::function<double(double)>& f, double a, double b,
                      int panels = 8, int gl_points = 24);

}  // namespace disclab
