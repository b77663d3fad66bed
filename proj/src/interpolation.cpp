#include "disclab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "disclab/ode.hpp"
#include "disclab/sweep.hpp"

namespace disclab {
namespace {

constexpr double kDistinctPseudo = 1e-9;

void require_distinct(const std::vector<cplx>& pts, const char* what) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pseudo_hyperbolic(pts[i], pts[j]) < kDistinctPseudo)
                throw std::invalid_argument(std::string(what) + ": points must be pairwise distinct");
}

bool all_zero(const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx c) { return c == cplx(0.0); });
}

// ---- local Taylor series (coefficient space) -----------------------------

using Series = std::vector<cplx>;

Series jet_to_coeffs(const Jet& j) {
    Series c(static_cast<std::size_t>(j.order()) + 1);
    double fact = 1.0;
    for (int i = 0; i <= j.order(); ++i) {
        if (i > 0) fact *= i;
        c[static_cast<std::size_t>(i)] = j[i] / fact;
    }
    return c;
}

Series series_deriv(const Series& a) {
    if (a.size() <= 1) return Series{cplx(0.0)};
    Series d(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) d[i] = static_cast<double>(i + 1) * a[i + 1];
    return d;
}

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series c(len, cplx(0.0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
    return c;
}

// q solving n = q * d with d[0] != 0
Series series_div(const Series& n, const Series& d, std::size_t len) {
    Series q(len, cplx(0.0));
    for (std::size_t i = 0; i < len; ++i) {
        cplx s = i < n.size() ? n[i] : cplx(0.0);
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t k = i - j;
            if (k < d.size()) s -= q[j] * d[k];
        }
        q[i] = s / d[0];
    }
    return q;
}

// jet of the series at center + w:  f^(m) = sum_{i>=m} c_i i!/(i-m)! w^(i-m)
Jet series_jet(const Series& c, cplx w, int order) {
    Jet r(order);
    for (int m = 0; m <= order; ++m) {
        cplx s(0.0);
        for (int i = static_cast<int>(c.size()) - 1; i >= m; --i) {
            double fall = 1.0;
            for (int t = 0; t < m; ++t) fall *= static_cast<double>(i - t);
            s = s * w + fall * c[static_cast<std::size_t>(i)];
        }
        r[m] = s;
    }
    return r;
}

// ---- coefficient with removable quotient singularities -------------------

class RemovableCoefficient final : public JetProvider {
public:
    RemovableCoefficient(ProviderPtr F, ProviderPtr G, std::vector<cplx> zeros, double near_pseudo,
                         int series_order)
        : F_(std::move(F)), G_(std::move(G)), zeros_(std::move(zeros)), order_cap_(series_order) {
        if (!F_) throw std::invalid_argument("removable coefficient: missing numerator provider");
        if (order_cap_ < 2 || order_cap_ + 2 > Jet::kMaxOrder)
            throw std::invalid_argument("removable coefficient: series order out of range");
        near_.resize(zeros_.size());
        for (std::size_t n = 0; n < zeros_.size(); ++n) {
            double gap = 1.0;
            for (std::size_t k = 0; k < zeros_.size(); ++k)
                if (k != n) gap = std::min(gap, pseudo_hyperbolic(zeros_[k], zeros_[n]));
            // keep the deflated quotient series well inside its convergence disc
            near_[n] = std::min(near_pseudo, gap / 8.0);
        }
        local_.reserve(zeros_.size());
        for (cplx z0 : zeros_) local_.push_back(build_local(z0));
    }

    Jet jet(cplx z, int order) const override {
        if (order > order_cap_) throw std::invalid_argument("removable coefficient: jet order too high");
        std::size_t best = zeros_.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < zeros_.size(); ++n) {
            double d = pseudo_hyperbolic(zeros_[n], z);
            if (d <= near_[n] && d < best_d) {
                best_d = d;
                best = n;
            }
        }
        if (best < zeros_.size()) return series_jet(local_[best], z - zeros_[best], order);
        Jet jF = F_->jet(z, order + 2);
        Jet g1(order), g2(order);
        if (G_) {
            Jet jG = G_->jet(z, order + 2);
            g1 = jG.derivative().truncated(order);
            g2 = jG.derivative().derivative();
        }
        Jet num = jF.derivative().derivative() + 2.0 * jF.derivative().truncated(order) * g1;
        return -(num / jF.truncated(order)) - g2 - g1 * g1;
    }
    std::string descriptor() const override { return "composite"; }

private:
    // Taylor coefficients of A = -(F'' + 2 F' G')/F - G'' - (G')^2 about a
    // simple zero z0 of F where the parenthesized numerator also vanishes
    Series build_local(cplx z0) const {
        const int ext = order_cap_ + 2;
        Series Fc = jet_to_coeffs(F_->jet(z0, ext));
        Series F1 = series_deriv(Fc), F2 = series_deriv(F1);
        Series G1{cplx(0.0)}, G2{cplx(0.0)};
        if (G_) {
            Series Gc = jet_to_coeffs(G_->jet(z0, ext));
            G1 = series_deriv(Gc);
            G2 = series_deriv(G1);
        }
        const std::size_t len = static_cast<std::size_t>(order_cap_) + 2;
        Series N = series_mul(F1, G1, len);
        for (auto& c : N) c *= 2.0;
        for (std::size_t i = 0; i < len && i < F2.size(); ++i) N[i] += F2[i];

        if (Fc.size() < 2 || Fc[1] == cplx(0.0))
            throw std::domain_error("removable coefficient: listed zero is not a simple zero");
        double scale = 0.0;
        for (cplx c : N) scale = std::max(scale, std::abs(c));
        if (std::abs(N[0]) > 1e-7 * std::max(scale, 1.0))
            throw std::domain_error("removable coefficient: numerator does not vanish at the listed zero");

        Series Nd(N.begin() + 1, N.end());
        Series Dd(Fc.begin() + 1, Fc.end());
        Series Q = series_div(Nd, Dd, static_cast<std::size_t>(order_cap_) + 1);
        Series G1sq = series_mul(G1, G1, static_cast<std::size_t>(order_cap_) + 1);
        Series A(static_cast<std::size_t>(order_cap_) + 1, cplx(0.0));
        for (std::size_t i = 0; i < A.size(); ++i) {
            cplx v = -Q[i] - G1sq[i];
            if (i < G2.size()) v -= G2[i];
            A[i] = v;
        }
        return A;
    }

    ProviderPtr F_, G_;
    std::vector<cplx> zeros_;
    int order_cap_;
    std::vector<double> near_;
    std::vector<Series> local_;
};

ProviderPtr product_provider(ProviderPtr a, ProviderPtr b) {
    return make_composite([a = std::move(a), b = std::move(b)](cplx z, int order) {
        return a->jet(z, order) * b->jet(z, order);
    });
}

double grid_sup_abs(const JetProvider& f, const SampleGrid& grid) {
    return sweep::max(grid.nodes.size(),
                      [&](std::size_t i) { return std::abs(f.value(grid.nodes[i].z)); })
        .value;
}

// max over `points` of min pseudo-hyperbolic distance into `found`,
// plus the count of found points matching no reference point
struct MatchStats {
    double displacement = 0.0;
    int unmatched = 0;
};

MatchStats match_point_sets(const std::vector<cplx>& points, const std::vector<cplx>& found,
                            double match_pseudo = 1e-6) {
    MatchStats st;
    for (cplx p : points) {
        double d = 1.0;
        for (cplx q : found) d = std::min(d, pseudo_hyperbolic(p, q));
        st.displacement = std::max(st.displacement, d);
    }
    for (cplx q : found) {
        double d = 1.0;
        for (cplx p : points) d = std::min(d, pseudo_hyperbolic(p, q));
        if (d > match_pseudo) ++st.unmatched;
    }
    return st;
}

}  // namespace

// ---- provider combinators -------------------------------------------------

ProviderPtr make_derivative(ProviderPtr f) {
    if (!f) throw std::invalid_argument("make_derivative: missing provider");
    return make_composite(
        [f = std::move(f)](cplx z, int order) { return f->jet(z, order + 1).derivative(); });
}

// ---- Lagrange-type interpolant --------------------------------------------

LagrangeBlaschke::LagrangeBlaschke(std::vector<cplx> nodes, std::vector<cplx> targets)
    : nodes_(std::move(nodes)), targets_(std::move(targets)) {
    if (nodes_.empty()) throw std::invalid_argument("interpolant: empty node list");
    if (nodes_.size() != targets_.size())
        throw std::invalid_argument("interpolant: node/target count mismatch");
    for (cplx z : nodes_) require_in_disc(z, "interpolation node");
    require_distinct(nodes_, "interpolation nodes");
    if (all_zero(targets_))
        throw std::invalid_argument("interpolant: every target vanishes (degenerate problem)");
    denom_.resize(nodes_.size());
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        cplx d(1.0);
        for (std::size_t k = 0; k < nodes_.size(); ++k)
            if (k != n) d *= mobius_involution(nodes_[k], nodes_[n]);
        denom_[n] = d;
    }
}

Jet LagrangeBlaschke::jet(cplx z, int order) const {
    require_in_disc(z, "interpolant evaluation point");
    Jet zv = Jet::variable(z, order);
    std::vector<Jet> phi(nodes_.size(), Jet(order));
    for (std::size_t k = 0; k < nodes_.size(); ++k) phi[k] = mobius_involution(nodes_[k], zv);
    Jet sum(order);
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (targets_[n] == cplx(0.0)) continue;
        Jet t = Jet::constant(targets_[n] / denom_[n], order);
        for (std::size_t k = 0; k < nodes_.size(); ++k)
            if (k != n) t = t * phi[k];
        sum = sum + t;
    }
    return sum;
}

double LagrangeBlaschke::apriori_bound() const {
    double s = 0.0;
    for (std::size_t n = 0; n < nodes_.size(); ++n) s += std::abs(targets_[n]) / std::abs(denom_[n]);
    return s;
}

ProviderPtr lagrange_blaschke_solve(std::vector<cplx> nodes, std::vector<cplx> targets) {
    return std::make_shared<LagrangeBlaschke>(std::move(nodes), std::move(targets));
}

ProviderPtr hermite_solve(std::vector<cplx> nodes, std::vector<cplx> values,
                          std::vector<cplx> derivatives) {
    if (nodes.empty()) throw std::invalid_argument("osculating interpolant: empty node list");
    if (nodes.size() != values.size() || nodes.size() != derivatives.size())
        throw std::invalid_argument("osculating interpolant: node/target count mismatch");
    for (cplx z : nodes) require_in_disc(z, "interpolation node");
    require_distinct(nodes, "interpolation nodes");

    const std::size_t m = nodes.size();
    std::vector<cplx> den2(m), a(m), b(m);
    for (std::size_t n = 0; n < m; ++n) {
        cplx d(1.0);
        for (std::size_t k = 0; k < m; ++k)
            if (k != n) d *= mobius_involution(nodes[k], nodes[n]);
        den2[n] = d * d;
        // P_n'(z_n) with P_n = prod_{k != n} (phi_k / phi_k(z_n))^2
        Jet p = Jet::constant(1.0 / den2[n], 1);
        Jet zv = Jet::variable(nodes[n], 1);
        for (std::size_t k = 0; k < m; ++k)
            if (k != n) p = p * square(mobius_involution(nodes[k], zv));
        a[n] = values[n];
        b[n] = (a[n] * p[1] - derivatives[n]) * (1.0 - std::norm(nodes[n]));
    }
    return make_composite([nodes = std::move(nodes), a = std::move(a), b = std::move(b),
                           den2 = std::move(den2)](cplx z, int order) {
        Jet zv = Jet::variable(z, order);
        std::vector<Jet> phi(nodes.size(), Jet(order));
        for (std::size_t k = 0; k < nodes.size(); ++k) phi[k] = mobius_involution(nodes[k], zv);
        Jet sum(order);
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            if (a[n] == cplx(0.0) && b[n] == cplx(0.0)) continue;
            Jet t = Jet::constant(a[n], order) + Jet::constant(b[n], order) * phi[n];
            Jet prod = Jet::constant(1.0 / den2[n], order);
            for (std::size_t k = 0; k < nodes.size(); ++k)
                if (k != n) prod = prod * square(phi[k]);
            sum = sum + t * prod;
        }
        return sum;
    });
}

double earl_eta(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("earl_eta: separation constant must lie in (0,1)");
    double b = 2.0 * delta + 24.0;
    double eta = 2.0 * delta / (b + std::sqrt(b * b - 4.0 * delta * delta));
    return eta * (1.0 - 1e-13);
}

ProviderPtr removable_log_derivative_coefficient(ProviderPtr F, ProviderPtr G,
                                                 std::vector<cplx> zeros, double near_pseudo,
                                                 int series_order) {
    return std::make_shared<RemovableCoefficient>(std::move(F), std::move(G), std::move(zeros),
                                                  near_pseudo, series_order);
}

// ---- prescribed zero set ---------------------------------------------------

PrescribedZeroResult prescribed_zero_equation(std::vector<cplx> zeros, const SampleGrid& grid,
                                              double display_rel_tol) {
    if (zeros.empty()) throw std::invalid_argument("prescribed zeros: empty zero list");
    for (cplx z : zeros) require_in_disc(z, "prescribed zero");
    require_distinct(zeros, "prescribed zeros");

    PrescribedZeroResult out;
    out.zeros = zeros;
    out.B = std::make_shared<BlaschkeProduct>(zeros);
    const std::size_t m = zeros.size();

    // k(z_n) = -B''(z_n) / (2 B'(z_n)^2) makes B'' + 2 B' (Bk)' vanish at z_n
    std::vector<cplx> targets(m);
    for (std::size_t n = 0; n < m; ++n) {
        Jet jb = out.B->jet(zeros[n], 2);
        if (jb[1] == cplx(0.0))
            throw std::invalid_argument("prescribed zeros: repeated zero makes the correction singular");
        targets[n] = -jb[2] / (2.0 * jb[1] * jb[1]);
    }
    out.k = all_zero(targets) ? make_constant(cplx(0.0))
                              : lagrange_blaschke_solve(zeros, targets);

    ProviderPtr Bp = out.B;
    ProviderPtr G = product_provider(Bp, out.k);
    out.f1 = make_composite(
        [Bp, G](cplx z, int order) { return Bp->jet(z, order) * exp(G->jet(z, order)); });
    out.A = removable_log_derivative_coefficient(Bp, G, zeros);

    out.rows.push_back(audit_row("sup |f1'' + A f1| / (1 + |f1|) on grid",
                                 residual_metric(*out.A, *out.f1, grid), 1e-9, "ode-residual"));
    double d2max = 0.0;
    for (std::size_t n = 0; n < m; ++n) d2max = std::max(d2max, std::abs(out.f1->jet(zeros[n], 2)[2]));
    out.rows.push_back(
        audit_row("max_n |f1''(z_n)|", d2max, 1e-9, "zero-branch-removability"));

    std::vector<cplx> found = find_zeros(*out.f1, grid);
    MatchStats st = match_point_sets(zeros, found);
    out.rows.push_back(audit_row("max_n min pseudo distance to a detected zero", st.displacement,
                                 1e-8, "prescribed-zero-set"));
    out.rows.push_back(audit_row("detected zeros matching no prescribed zero",
                                 static_cast<double>(st.unmatched), 0.0, "prescribed-zero-set"));

    // spherical display at each zero: recover f2 by quadrature away from the
    // zero, then integrate the pair across it
    std::vector<ExclusionDisc> exclusions;
    exclusions.reserve(m);
    for (cplx z : zeros) exclusions.push_back({z, 0.08});
    const cplx candidates[] = {cplx(0.0),          cplx(0.31, 0.0),  cplx(-0.29, 0.07),
                               cplx(0.03, 0.33),   cplx(0.02, -0.3), cplx(0.23, 0.21),
                               cplx(-0.21, -0.24), cplx(0.47, -0.11)};
    cplx alpha = candidates[0];
    double alpha_gap = -1.0;
    for (cplx c : candidates) {
        double gap = 1.0;
        for (cplx z : zeros) gap = std::min(gap, pseudo_hyperbolic(c, z));
        if (gap > alpha_gap) {
            alpha_gap = gap;
            alpha = c;
        }
    }
    if (alpha_gap <= 0.12)
        throw std::invalid_argument("prescribed zeros: no admissible base point clear of the zero set");

    for (std::size_t n = 0; n < m; ++n) {
        const cplx zn = zeros[n];
        // launch point on the pseudo circle of radius 0.15 around z_n, kept
        // clear of the other zeros
        cplx zstar = zn;
        double best_gap = -1.0;
        for (int t = 0; t < 16; ++t) {
            double th = (t + 0.5) * 2.0 * kPi / 16.0;
            cplx cand = mobius_involution(zn, 0.15 * std::polar(1.0, th));
            if (std::abs(cand) > 0.995) continue;
            double gap = 1.0;
            for (std::size_t k = 0; k < m; ++k)
                if (k != n) gap = std::min(gap, pseudo_hyperbolic(zeros[k], cand));
            if (gap > best_gap) {
                best_gap = gap;
                zstar = cand;
            }
        }
        if (best_gap <= 0.1)
            throw std::invalid_argument("prescribed zeros: zero too crowded for the display audit");

        PathSpec to_star = build_avoiding_path(alpha, zstar, exclusions);
        cplx I = inverse_square_integral(*out.f1, to_star.vertices);
        Jet j1 = out.f1->jet(zstar, 1);
        InitialData f2_init{j1[0] * I, j1[1] * I + 1.0 / j1[0]};
        InitialData f1_init{j1[0], j1[1]};

        PathSpec cross;
        cross.vertices = {zstar, zn};
        SolutionTrace trace = integrate_basis(*out.A, cross, f2_init, f1_init);
        const auto& yend = trace.samples.back().y;
        cplx f2_at_zero = yend[0];
        cplx w_end = trace.wronskian_at_sample(trace.samples.size() - 1);
        double s_pair = std::norm(out.f1->value(zn)) + std::norm(f2_at_zero);
        double weight = 1.0 - std::norm(zn);
        double display = std::abs(w_end) / s_pair * weight * weight;
        cplx b1 = out.B->derivative_at_zero(n);
        double expected = std::norm(b1) * weight * weight;

        ReportRow row = audit_row("spherical display at zero " + std::to_string(n),
                                  std::abs(display - expected) / expected, display_rel_tol,
                                  "zero-spherical-display");
        row.extra.emplace_back("display", format_sig17(display));
        row.extra.emplace_back("expected", format_sig17(expected));
        out.rows.push_back(row);
        out.rows.push_back(audit_row("Wronskian drift across zero " + std::to_string(n),
                                     std::abs(std::abs(w_end) - 1.0), 1e-7,
                                     "wronskian-constant"));
    }
    return out;
}

// ---- interpolating solution -------------------------------------------------

InterpolatingSolutionResult interpolating_solution_equation(std::vector<cplx> nodes,
                                                            std::vector<cplx> targets,
                                                            const SampleGrid& grid) {
    auto h = std::make_shared<LagrangeBlaschke>(nodes, targets);
    auto B = std::make_shared<BlaschkeProduct>(nodes);

    InterpolatingSolutionResult out;
    out.h = h;
    out.surrogate_zeros = find_zeros(*h, grid);

    if (out.surrogate_zeros.empty()) {
        out.g = make_constant(cplx(0.0));
    } else {
        std::vector<cplx> values(out.surrogate_zeros.size());
        for (std::size_t j = 0; j < out.surrogate_zeros.size(); ++j) {
            cplx zeta = out.surrogate_zeros[j];
            Jet jh = h->jet(zeta, 2);
            Jet jB = B->jet(zeta, 1);
            if (std::abs(jh[1]) < 1e-12)
                throw NumericalError("interpolating solution: surrogate zero is not simple", zeta);
            if (std::abs(jB[1]) < 1e-12)
                throw NumericalError(
                    "interpolating solution: Blaschke critical point meets a surrogate zero", zeta);
            values[j] = -jh[2] / (2.0 * jh[1] * jB[1]);
        }
        out.g = hermite_solve(out.surrogate_zeros, values,
                              std::vector<cplx>(out.surrogate_zeros.size(), cplx(0.0)));
    }

    ProviderPtr G = product_provider(B, out.g);
    ProviderPtr hp = h;
    out.f = make_composite(
        [hp, G](cplx z, int order) { return hp->jet(z, order) * exp(G->jet(z, order)); });
    out.A = removable_log_derivative_coefficient(hp, G, out.surrogate_zeros);

    double interp_err = 0.0;
    for (std::size_t n = 0; n < nodes.size(); ++n)
        interp_err = std::max(interp_err, std::abs(out.f->value(nodes[n]) - targets[n]));
    out.rows.push_back(
        audit_row("max_n |f(z_n) - w_n|", interp_err, 1e-9, "interpolation-residual"));
    out.rows.push_back(audit_row("sup |f'' + A f| / (1 + |f|) on grid",
                                 residual_metric(*out.A, *out.f, grid), 1e-9, "ode-residual"));

    double bound = h->apriori_bound();
    double measured = grid_sup_abs(*h, grid);
    out.rows.push_back(audit_row("grid sup |h| minus target-weighted bound", measured - bound,
                                 1e-12, "surrogate-norm-bound"));
    ReportRow norm_info = info_row("grid sup |h|", measured, "surrogate-norm-bound");
    norm_info.extra.emplace_back("apriori_bound", format_sig17(bound));
    out.rows.push_back(norm_info);

    double delta = separation_constant(nodes);
    double eta = nodes.size() >= 2 ? earl_eta(delta) : 0.0;
    for (std::size_t j = 0; j < out.surrogate_zeros.size(); ++j) {
        double disp = 1.0;
        for (cplx zn : nodes) disp = std::min(disp, pseudo_hyperbolic(out.surrogate_zeros[j], zn));
        ReportRow row = info_row("pseudo distance of surrogate zero " + std::to_string(j) +
                                     " to the node set",
                                 disp, "surrogate-zero-displacement");
        if (nodes.size() >= 2) {
            row.extra.emplace_back("eta", format_sig17(eta));
            row.extra.emplace_back("within_eta", disp < eta ? "yes" : "no");
        }
        out.rows.push_back(row);
    }
    if (nodes.size() >= 2) {
        // consistency of the admissible-displacement threshold
        double lhs = 12.0 * eta / ((1.0 - eta) * (1.0 - eta));
        out.rows.push_back(audit_row("12 eta/(1-eta)^2 - delta/2", lhs - delta / 2.0, 0.0,
                                     "displacement-threshold"));
        out.rows.push_back(
            audit_row("eta - delta/3", eta - delta / 3.0, 0.0, "displacement-threshold"));
    }
    return out;
}

// ---- fixed points, sandwich construction -----------------------------------

FixedPointSimpleResult fixed_point_simple(std::vector<cplx> lambda, double eps,
                                          const SampleGrid& grid, double audit_tol) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("fixed points: perturbation size must lie in (0,1)");
    if (lambda.empty()) throw std::invalid_argument("fixed points: empty point list");
    for (cplx z : lambda) require_in_disc(z, "fixed point");

    auto B = std::make_shared<BlaschkeProduct>(lambda);
    FixedPointSimpleResult out;
    out.f1 = make_composite([B, eps](cplx z, int order) {
        Jet zv = Jet::variable(z, order);
        return zv + eps * (zv * zv * zv) * B->jet(z, order);
    });
    // A = -f1''/f1 = -eps (6B + 6zB' + z^2 B'')/(1 + eps z^2 B); the
    // denominator stays >= 1 - eps on the disc, so the form is global
    out.A = make_composite([B, eps](cplx z, int order) {
        Jet jb = B->jet(z, order + 2);
        Jet b0 = jb.truncated(order);
        Jet b1 = jb.derivative().truncated(order);
        Jet b2 = jb.derivative().derivative();
        Jet zv = Jet::variable(z, order);
        Jet num = 6.0 * b0 + 6.0 * zv * b1 + zv * zv * b2;
        Jet den = cplx(1.0) + eps * (zv * zv) * b0;
        return (-eps) * (num / den);
    });

    std::vector<cplx> expected{cplx(0.0)};
    for (cplx z : lambda) {
        bool dup = false;
        for (cplx e : expected) dup = dup || pseudo_hyperbolic(e, z) < kDistinctPseudo;
        if (!dup) expected.push_back(z);
    }

    double fp_err = 0.0;
    for (cplx z : expected) fp_err = std::max(fp_err, std::abs(out.f1->value(z) - z));
    out.rows.push_back(audit_row("max_n |f1(z_n) - z_n| over prescribed fixed points", fp_err,
                                 audit_tol, "fixed-point-set"));

    Jet j0 = out.f1->jet(cplx(0.0), 2);
    out.rows.push_back(audit_row("|f1(0)| + |f1'(0) - 1| + |f1''(0)|",
                                 std::abs(j0[0]) + std::abs(j0[1] - 1.0) + std::abs(j0[2]),
                                 audit_tol, "origin-normalization"));

    double worst = sweep::max(grid.nodes.size(), [&](std::size_t i) {
                       cplx z = grid.nodes[i].z;
                       double fo = std::abs(out.f1->value(z)), r = std::abs(z);
                       double lo = fo - (1.0 - eps) * r, hi = (1.0 + eps) * r - fo;
                       return -std::min(lo, hi);
                   }).value;
    out.rows.push_back(audit_row("sandwich violation depth of (1 -+ eps)|z| <= |f1| <= (1 + eps)|z|",
                                 std::max(0.0, worst), 1e-12, "modulus-sandwich"));
    double sup = grid_sup_abs(*out.f1, grid);
    out.rows.push_back(
        audit_row("grid sup |f1| minus (1 + eps)", sup - (1.0 + eps), 0.0, "modulus-sandwich"));

    out.rows.push_back(audit_row("sup |f1'' + A f1| / (1 + |f1|) on grid",
                                 residual_metric(*out.A, *out.f1, grid), 1e-9, "ode-residual"));

    // f1 - z == eps z^3 B exactly; the factored form avoids the cancellation
    // floor of (z + eps z^3 B) - z near the origin's triple fixed point
    ProviderPtr displaced = make_composite([B, eps](cplx z, int order) {
        Jet zv = Jet::variable(z, order);
        return eps * (zv * zv * zv) * B->jet(z, order);
    });
    out.fixed_points = find_zeros(*displaced, grid);
    MatchStats st = match_point_sets(expected, out.fixed_points);
    out.rows.push_back(audit_row("max_n min pseudo distance to a detected fixed point",
                                 st.displacement, 1e-8, "fixed-point-set"));
    out.rows.push_back(audit_row("detected fixed points matching no prescribed one",
                                 static_cast<double>(st.unmatched), 0.0, "fixed-point-set"));
    for (std::size_t n = 0; n < expected.size(); ++n) {
        ReportRow row = info_row("multiplier f1' at fixed point " + std::to_string(n),
                                 std::abs(out.f1->derivative(expected[n])), "fixed-point-multipliers");
        row.extra.emplace_back("point", format_sig17(expected[n].real()) + " " +
                                            format_sig17(expected[n].imag()));
        out.rows.push_back(row);
    }
    return out;
}

double multiplier(FixedPointType t) {
    switch (t) {
        case FixedPointType::attractive: return 0.5;
        case FixedPointType::neutral: return 1.0;
        case FixedPointType::repulsive: return 2.0;
    }
    throw std::invalid_argument("fixed points: unknown type");
}

FixedPointTypedResult fixed_point_typed(std::vector<cplx> nodes, std::vector<FixedPointType> types,
                                        const SampleGrid& grid, double audit_tol) {
    if (nodes.empty()) throw std::invalid_argument("fixed points: empty node list");
    if (nodes.size() != types.size())
        throw std::invalid_argument("fixed points: node/type count mismatch");
    for (cplx z : nodes) {
        require_in_disc(z, "fixed point");
        if (std::abs(z) < 1e-9)
            throw std::invalid_argument("fixed points: the origin is not admissible here");
        if (z.real() < 0.0 && std::abs(z.imag()) <= 1e-6 * std::abs(z))
            throw std::invalid_argument(
                "fixed points: node sits on the principal-branch cut of log");
    }
    require_distinct(nodes, "fixed points");

    auto B = std::make_shared<BlaschkeProduct>(nodes);
    const std::size_t m = nodes.size();
    std::vector<cplx> log_targets(m);
    for (std::size_t n = 0; n < m; ++n) log_targets[n] = std::log(nodes[n]);
    auto h = std::make_shared<LagrangeBlaschke>(nodes, log_targets);

    // G = h + B g with G(z_n) = log z_n and G'(z_n) = C_n / z_n, so that
    // f1 = e^G satisfies f1(z_n) = z_n, f1'(z_n) = C_n
    std::vector<cplx> g_targets(m);
    for (std::size_t n = 0; n < m; ++n) {
        cplx c = multiplier(types[n]);
        cplx b1 = B->jet(nodes[n], 1)[1];
        if (b1 == cplx(0.0))
            throw std::invalid_argument("fixed points: repeated node makes the correction singular");
        g_targets[n] = (c / nodes[n] - h->jet(nodes[n], 1)[1]) / b1;
    }
    ProviderPtr g = all_zero(g_targets) ? make_constant(cplx(0.0))
                                        : lagrange_blaschke_solve(nodes, g_targets);
    ProviderPtr hp = h;
    ProviderPtr G = make_composite([hp, B, g](cplx z, int order) {
        return hp->jet(z, order) + B->jet(z, order) * g->jet(z, order);
    });

    FixedPointTypedResult out;
    out.f1 = make_composite([G](cplx z, int order) { return exp(G->jet(z, order)); });
    out.A = make_composite([G](cplx z, int order) {
        Jet jG = G->jet(z, order + 2);
        Jet g1 = jG.derivative().truncated(order);
        Jet g2 = jG.derivative().derivative();
        return -(g2 + g1 * g1);
    });

    double fp_err = 0.0, mult_err = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
        Jet j = out.f1->jet(nodes[n], 1);
        fp_err = std::max(fp_err, std::abs(j[0] - nodes[n]));
        mult_err = std::max(mult_err, std::abs(j[1] - multiplier(types[n])));
    }
    out.rows.push_back(
        audit_row("max_n |f1(z_n) - z_n|", fp_err, audit_tol, "fixed-point-set"));
    out.rows.push_back(audit_row("max_n |f1'(z_n) - C_n|", mult_err, audit_tol,
                                 "fixed-point-multipliers"));
    out.rows.push_back(audit_row("sup |f1'' + A f1| / (1 + |f1|) on grid",
                                 residual_metric(*out.A, *out.f1, grid), 1e-9, "ode-residual"));
    double min_mod = -sweep::max(grid.nodes.size(), [&](std::size_t i) {
                          return -std::abs(out.f1->value(grid.nodes[i].z));
                      }).value;
    out.rows.push_back(info_row("grid min |f1| (solution is zero-free)", min_mod, "zero-free"));
    return out;
}

// ---- empirical separation ---------------------------------------------------

std::vector<ReportRow> separation_audit(const SolutionBasis& b, const SampleGrid& grid) {
    std::vector<cplx> zeros1 = find_zeros(*b.f1, grid);
    std::vector<cplx> zeros2 = find_zeros(*b.f2, grid);
    std::vector<cplx> crits1 = find_zeros(*make_derivative(b.f1), grid);
    std::vector<cplx> crits2 = find_zeros(*make_derivative(b.f2), grid);
    double m1 = grid_sup_abs(*b.f1, grid), m2 = grid_sup_abs(*b.f2, grid);
    double w = std::abs(b.wronskian);

    auto ratio = [&](cplx p, cplx q) {
        double gauge = std::max(1.0 - std::abs(p), 1.0 - std::abs(q));
        return pseudo_hyperbolic(p, q) * m1 * m2 / (w * gauge);
    };
    auto min_cross = [&](const std::vector<cplx>& xs, const std::vector<cplx>& ys) {
        double best = std::numeric_limits<double>::infinity();
        for (cplx x : xs)
            for (cplx y : ys) best = std::min(best, ratio(x, y));
        return best;
    };

    std::vector<ReportRow> rows;
    auto emit = [&](const char* what, double v, std::size_t count_a, std::size_t count_b) {
        ReportRow row = info_row(what, v, "two-point-separation");
        row.extra.emplace_back("pairs_from", std::to_string(count_a));
        row.extra.emplace_back("pairs_to", std::to_string(count_b));
        rows.push_back(row);
    };
    double zc = std::min(min_cross(zeros1, crits1), min_cross(zeros2, crits2));
    if (std::isfinite(zc))
        emit("min scaled gap, zero vs critical point of the same solution", zc,
             zeros1.size() + zeros2.size(), crits1.size() + crits2.size());
    double zz = min_cross(zeros1, zeros2);
    if (std::isfinite(zz))
        emit("min scaled gap, zeros of f1 vs zeros of f2", zz, zeros1.size(), zeros2.size());
    double cc = min_cross(crits1, crits2);
    if (std::isfinite(cc))
        emit("min scaled gap, critical points of f1 vs critical points of f2", cc, crits1.size(),
             crits2.size());
    return rows;
}

}  // namespace disclab
