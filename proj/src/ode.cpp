#include "disclab/ode.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/quadrature.hpp"
#include "disclab/sweep.hpp"

namespace disclab {

namespace {

using State = std::array<cplx, 4>;

// Dormand-Prince 5(4) tableau (FSAL)
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kA71 = 35.0 / 384, kA73 = 500.0 / 1113, kA74 = 125.0 / 192, kA75 = -2187.0 / 6784,
                 kA76 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920, kE5 = -17253.0 / 339200,
                 kE6 = 22.0 / 525, kE7 = -1.0 / 40;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

State axpy(const State& y, double h, const State& k1, double c1) {
    State r;
    for (int i = 0; i < 4; ++i) r[i] = y[i] + h * c1 * k1[i];
    return r;
}

struct Rhs {
    const JetProvider& A;
    cplx origin, dir;  // z(s) = origin + s * dir on the current segment
    State operator()(double s, const State& y) const {
        cplx a = A.jet(origin + s * dir, 0).value();
        return {dir * y[1], dir * (-a * y[0]), dir * y[3], dir * (-a * y[2])};
    }
};

double error_norm(const State& err, const State& y0, const State& y1, const IntegrationOptions& o) {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double sc = o.abs_tol + o.tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        double e = std::abs(err[i]) / sc;
        acc += e * e;
    }
    return std::sqrt(acc / 4.0);
}

}  // namespace

BasisState SolutionTrace::dense_eval(double s) const {
    if (samples.size() < 2) throw std::logic_error("dense_eval: trace has fewer than 2 samples");
    if (s < samples.front().s - 1e-12 || s > samples.back().s + 1e-12)
        throw std::invalid_argument("dense_eval: arclength outside trace");
    s = std::clamp(s, samples.front().s, samples.back().s);
    auto it = std::upper_bound(samples.begin(), samples.end(), s,
                               [](double v, const BasisSample& b) { return v < b.s; });
    std::size_t hi = std::min(samples.size() - 1, static_cast<std::size_t>(it - samples.begin()));
    std::size_t lo = hi - 1;
    const BasisSample &a = samples[lo], &b = samples[hi];
    double h = b.s - a.s;
    BasisState st;
    if (h <= 0.0) {
        st = {a.z, a.y[0], a.y[1], a.y[2], a.y[3]};
        return st;
    }
    double t = (s - a.s) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    std::array<cplx, 4> y;
    for (int i = 0; i < 4; ++i) y[i] = h00 * a.y[i] + h10 * h * a.ydot[i] + h01 * b.y[i] + h11 * h * b.ydot[i];
    // z is linear in s between samples of the same segment
    cplx z = a.z + (b.z - a.z) * t;
    st = {z, y[0], y[1], y[2], y[3]};
    return st;
}

SolutionTrace integrate_basis(const JetProvider& A, const PathSpec& path, InitialData init1,
                              InitialData init2, const IntegrationOptions& opts) {
    if (path.vertices.size() < 2) throw std::invalid_argument("integrate_basis: path needs at least 2 vertices");
    for (cplx v : path.vertices) require_in_disc(v, "integrate_basis path vertex");

    SolutionTrace trace;
    trace.path = path;
    State y{init1.f, init1.fp, init2.f, init2.fp};
    double s_global = 0.0;

    cplx z = path.vertices.front();
    {
        cplx dir0 = path.vertices[1] - path.vertices[0];
        double l0 = std::abs(dir0);
        if (l0 == 0.0) throw std::invalid_argument("integrate_basis: degenerate first segment");
        Rhs rhs{A, z, dir0 / l0};
        trace.samples.push_back({0.0, z, y, rhs(0.0, y)});
    }

    long steps = 0;
    for (std::size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
        cplx a = path.vertices[seg], b = path.vertices[seg + 1];
        double len = std::abs(b - a);
        if (len == 0.0) continue;
        cplx dir = (b - a) / len;
        Rhs rhs{A, a, dir};
        double s = 0.0;
        State k1 = rhs(0.0, y);
        double errold = 1e-4;
        double h = std::min({1e-3, len, opts.boundary_frac * (1.0 - std::abs(a))});

        while (s < len) {
            if (++steps > opts.max_steps) throw NumericalError("integrate_basis: step budget exhausted", a + s * dir);
            cplx zc = a + s * dir;
            double cap = opts.boundary_frac * (1.0 - std::abs(zc));
            h = std::min({h, len - s, cap});
            if (h < opts.min_step) throw NumericalError("integrate_basis: step size underflow", zc);

            State k2 = rhs(s + kC2 * h, axpy(y, h, k1, kA21));
            State y3;
            for (int i = 0; i < 4; ++i) y3[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
            State k3 = rhs(s + kC3 * h, y3);
            State y4;
            for (int i = 0; i < 4; ++i) y4[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
            State k4 = rhs(s + kC4 * h, y4);
            State y5;
            for (int i = 0; i < 4; ++i)
                y5[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
            State k5 = rhs(s + kC5 * h, y5);
            State y6;
            for (int i = 0; i < 4; ++i)
                y6[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] + kA65 * k5[i]);
            State k6 = rhs(s + h, y6);
            State ynew;
            for (int i = 0; i < 4; ++i)
                ynew[i] = y[i] + h * (kA71 * k1[i] + kA73 * k3[i] + kA74 * k4[i] + kA75 * k5[i] + kA76 * k6[i]);
            State k7 = rhs(s + h, ynew);
            State errv;
            for (int i = 0; i < 4; ++i)
                errv[i] = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] + kE6 * k6[i] + kE7 * k7[i]);
            double err = error_norm(errv, y, ynew, opts);

            if (err <= 1.0) {
                s += h;
                y = ynew;
                k1 = k7;  // FSAL
                trace.samples.push_back({s_global + s, a + s * dir, y, k7});
                double fac = opts.safety * std::pow(std::max(err, 1e-10), -0.17) * std::pow(errold, 0.04);
                errold = std::max(err, 1e-10);
                h *= std::clamp(fac, 0.2, 5.0);
            } else {
                h *= std::max(0.2, opts.safety * std::pow(err, -0.2));
            }
        }
        s_global += len;
    }
    return trace;
}

Jet solution_jet_from_ode(const Jet& A_jet, cplx f, cplx fp, int order) {
    Jet r(order);
    r[0] = f;
    if (order >= 1) r[1] = fp;
    for (int k = 0; k + 2 <= order; ++k) {
        cplx s(0.0);
        for (int j = 0; j <= k; ++j) s += detail::binom(k, j) * A_jet[j] * r[k - j];
        r[k + 2] = -s;
    }
    return r;
}

namespace {

struct TraceFamily {
    ProviderPtr A;
    std::vector<SolutionTrace> traces;
    IntegrationOptions opts;
};

// answers jet queries by re-integrating from the nearest stored sample and
// finishing with the coefficient Taylor recurrence
class OdeTraceProvider final : public JetProvider {
public:
    OdeTraceProvider(std::shared_ptr<const TraceFamily> fam, int column) : fam_(std::move(fam)), column_(column) {}

    Jet jet(cplx z, int order) const override {
        const BasisSample* best = nullptr;
        double dmin = 1e308;
        for (const auto& tr : fam_->traces)
            for (const auto& smp : tr.samples) {
                double d = std::abs(z - smp.z);
                if (d < dmin) {
                    dmin = d;
                    best = &smp;
                }
            }
        if (!best) throw std::logic_error("ode-trace provider: empty trace family");

        State y = best->y;
        if (dmin > 0.0) {
            PathSpec chord;
            chord.vertices = {best->z, z};
            SolutionTrace local = integrate_basis(*fam_->A, chord, {y[0], y[1]}, {y[2], y[3]}, fam_->opts);
            y = local.samples.back().y;
        }
        Jet a = fam_->A->jet(z, std::max(0, order - 2));
        cplx f = column_ == 0 ? y[0] : y[2];
        cplx fp = column_ == 0 ? y[1] : y[3];
        return solution_jet_from_ode(a, f, fp, order);
    }
    std::string descriptor() const override { return "ode-trace"; }

private:
    std::shared_ptr<const TraceFamily> fam_;
    int column_;
};

}  // namespace

PropagatedBasis propagate_basis(ProviderPtr A, cplx z0, const std::vector<PathSpec>& paths,
                                const IntegrationOptions& opts) {
    if (!A) throw std::invalid_argument("propagate_basis: null coefficient provider");
    auto fam = std::make_shared<TraceFamily>();
    fam->A = A;
    fam->opts = opts;
    for (const auto& p : paths) {
        if (p.vertices.empty() || std::abs(p.vertices.front() - z0) > 1e-15)
            throw std::invalid_argument("propagate_basis: path must start at z0");
        fam->traces.push_back(integrate_basis(*A, p, {cplx(1.0), cplx(0.0)}, {cplx(0.0), cplx(1.0)}, opts));
    }
    PropagatedBasis out;
    out.traces = fam->traces;
    out.basis.f1 = std::make_shared<OdeTraceProvider>(fam, 0);
    out.basis.f2 = std::make_shared<OdeTraceProvider>(fam, 1);
    out.basis.wronskian = cplx(1.0);
    return out;
}

PropagatedBasis propagate_basis(ProviderPtr A, cplx z0, int rays, double r, const IntegrationOptions& opts) {
    if (rays < 1) throw std::invalid_argument("propagate_basis: need at least one ray");
    std::vector<PathSpec> paths;
    for (int k = 0; k < rays; ++k) {
        // offset angles keep every ray off the positive real axis, where the
        // catalog coefficients concentrate their boundary singularity
        double th = (k + 0.5) * 2.0 * kPi / rays;
        PathSpec p;
        p.vertices = {z0, z0 + r * cplx(std::cos(th), std::sin(th))};
        require_in_disc(p.vertices[1], "propagate_basis ray terminal");
        paths.push_back(std::move(p));
    }
    return propagate_basis(std::move(A), z0, paths, opts);
}

double residual_metric(const JetProvider& A, const JetProvider& f, const SampleGrid& grid) {
    return residual_metric(A, f, grid, {});
}

double residual_metric(const JetProvider& A, const JetProvider& f, const SampleGrid& grid,
                       const std::vector<ExclusionDisc>& exclusions) {
    auto res = sweep::max(grid.nodes.size(), [&](std::size_t i) {
        cplx z = grid.nodes[i].z;
        for (const auto& d : exclusions)
            if (contains(d, z)) return 0.0;
        Jet jf = f.jet(z, 2);
        cplx a = A.jet(z, 0).value();
        return std::abs(jf[2] + a * jf[0]) / (1.0 + std::abs(jf[0]));
    });
    return res.value;
}

std::vector<cplx> find_zeros(const JetProvider& f, const SampleGrid& grid, const ZeroSearchOptions& opts) {
    // seed at grid-local minima of |f| over the (radius, angle) lattice
    int R = grid.radial_count, M = grid.angular_count;
    std::vector<double> mod(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) mod[i] = std::abs(f.value(grid.nodes[i].z));

    auto at = [&](int i, int j) { return mod[static_cast<std::size_t>(i) * M + ((j % M) + M) % M]; };
    std::vector<cplx> seeds;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < M; ++j) {
            double v = at(i, j);
            bool is_min = v <= at(i, j - 1) && v <= at(i, j + 1);
            if (i > 0) is_min = is_min && v <= at(i - 1, j);
            if (i + 1 < R) is_min = is_min && v <= at(i + 1, j);
            if (is_min) seeds.push_back(grid.nodes[static_cast<std::size_t>(i) * M + j].z);
        }

    std::vector<cplx> zeros;
    for (cplx z : seeds) {
        bool converged = false;
        for (int it = 0; it < opts.max_newton_iters; ++it) {
            Jet j = f.jet(z, 1);
            if (std::abs(j[1]) == 0.0) break;
            cplx step = j[0] / j[1];
            z -= step;
            if (std::abs(z) > 1.0 - 1e-12) break;  // left the disc
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;
        if (std::abs(z) > grid.r_max + opts.radial_margin) continue;
        if (std::abs(f.value(z)) > opts.verify_abs) continue;
        bool dup = false;
        for (cplx w : zeros)
            if (pseudo_hyperbolic(w, z) <= opts.dedupe_pseudo_distance) {
                dup = true;
                break;
            }
        if (!dup) zeros.push_back(z);
    }
    std::sort(zeros.begin(), zeros.end(), [](cplx a, cplx b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return std::arg(a) < std::arg(b);
    });
    return zeros;
}

cplx inverse_square_integral(const JetProvider& f1, const std::vector<cplx>& vertices, double max_panel,
                             int gl_points) {
    return integrate_polyline(
        [&](cplx zeta) {
            cplx v = f1.value(zeta);
            return 1.0 / (v * v);
        },
        vertices, max_panel, gl_points);
}

namespace {

class SecondSolutionProvider final : public JetProvider {
public:
    SecondSolutionProvider(ProviderPtr f1, cplx alpha, std::vector<ExclusionDisc> exclusions,
                           double max_panel, int gl_points)
        : f1_(std::move(f1)), alpha_(alpha), exclusions_(std::move(exclusions)),
          max_panel_(max_panel), gl_(gl_points) {}

    Jet jet(cplx z, int order) const override {
        std::vector<cplx> verts;
        if (exclusions_.empty()) {
            verts = {alpha_, z};
        } else {
            verts = build_avoiding_path(alpha_, z, exclusions_).vertices;
        }
        cplx I0 = (std::abs(z - alpha_) == 0.0) ? cplx(0.0) : inverse_square_integral(*f1_, verts, max_panel_, gl_);

        Jet j1 = f1_->jet(z, order);
        Jet I(order);
        I[0] = I0;
        if (order >= 1) {
            // I' = 1/f1^2, higher derivatives from the jet of that quotient
            Jet inv = Jet::constant(1.0, order - 1) / square(f1_->jet(z, order - 1));
            for (int k = 1; k <= order; ++k) I[k] = inv[k - 1];
        }
        return j1 * I;
    }
    std::string descriptor() const override { return "composite"; }

private:
    ProviderPtr f1_;
    cplx alpha_;
    std::vector<ExclusionDisc> exclusions_;
    double max_panel_;
    int gl_;
};

}  // namespace

ProviderPtr second_solution(ProviderPtr f1, cplx alpha, std::vector<ExclusionDisc> exclusions,
                            double max_panel, int gl_points) {
    if (!f1) throw std::invalid_argument("second_solution: null provider");
    require_in_disc(alpha, "second_solution base point");
    return std::make_shared<SecondSolutionProvider>(std::move(f1), alpha, std::move(exclusions), max_panel,
                                                    gl_points);
}

}  // namespace disclab
