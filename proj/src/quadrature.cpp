#include "disclab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace disclab {

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 256) throw std::invalid_argument("gauss_legendre: order out of range");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n and P_n'
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.x[static_cast<std::size_t>(i)] = -x;
        rule.w[static_cast<std::size_t>(i)] = w;
        rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int gl_points) {
    const GaussRule& rule = gauss_legendre(gl_points);
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc(0.0);
    for (std::size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(mid + rule.x[i] * half);
    return acc * half;
}

cplx integrate_polyline(const std::function<cplx(cplx)>& f, const std::vector<cplx>& vertices,
                        double max_panel, int gl_points) {
    if (vertices.size() < 2) throw std::invalid_argument("integrate_polyline: need at least 2 vertices");
    cplx acc(0.0);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        cplx a = vertices[i], b = vertices[i + 1];
        double len = std::abs(b - a);
        if (len == 0.0) continue;
        int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
        for (int p = 0; p < panels; ++p) {
            cplx pa = a + (b - a) * (static_cast<double>(p) / panels);
            cplx pb = a + (b - a) * (static_cast<double>(p + 1) / panels);
            acc += integrate_segment(f, pa, pb, gl_points);
        }
    }
    return acc;
}

double integrate_real(const std::function<double(double)>& f, double a, double b, int panels, int gl_points) {
    const GaussRule& rule = gauss_legendre(gl_points);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double pa = a + (b - a) * p / panels, pb = a + (b - a) * (p + 1) / panels;
        double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        for (std::size_t i = 0; i < rule.x.size(); ++i) acc += half * rule.w[i] * f(mid + rule.x[i] * half);
    }
    return acc;
}

}  // namespace disclab
