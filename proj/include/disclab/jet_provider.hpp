#pragma once

#include <functional>
#include <memory>
#include <string>

#include "disclab/jet.hpp"

namespace disclab {

// A point evaluator for an analytic function on (a subdomain of) the unit
// disc: (point, order) -> value and first `order` derivatives.  Providers are
// immutable after construction and safe to query from parallel sweeps.
class JetProvider {
public:
    virtual ~JetProvider() = default;
    virtual Jet jet(cplx z, int order) const = 0;
    // evaluation strategy: "closed-form" | "blaschke" | "ode-trace" | "composite"
    virtual std::string descriptor() const = 0;

    cplx value(cplx z) const { return jet(z, 0).value(); }
    cplx derivative(cplx z) const { return jet(z, 1)[1]; }
};

using ProviderPtr = std::shared_ptr<const JetProvider>;

class ClosedFormProvider final : public JetProvider {
public:
    using Fn = std::function<Jet(cplx, int)>;
    explicit ClosedFormProvider(Fn fn) : fn_(std::move(fn)) {}
    Jet jet(cplx z, int order) const override { return fn_(z, order); }
    std::string descriptor() const override { return "closed-form"; }

private:
    Fn fn_;
};

inline ProviderPtr make_closed_form(ClosedFormProvider::Fn fn) {
    return std::make_shared<ClosedFormProvider>(std::move(fn));
}

// combination of existing providers (quotients, products, shifted series, ...)
class CompositeProvider final : public JetProvider {
public:
    using Fn = std::function<Jet(cplx, int)>;
    explicit CompositeProvider(Fn fn) : fn_(std::move(fn)) {}
    Jet jet(cplx z, int order) const override { return fn_(z, order); }
    std::string descriptor() const override { return "composite"; }

private:
    Fn fn_;
};

inline ProviderPtr make_composite(CompositeProvider::Fn fn) {
    return std::make_shared<CompositeProvider>(std::move(fn));
}

// constant-coefficient convenience (e.g. A == 0 or A == 1)
inline ProviderPtr make_constant(cplx c) {
    return make_closed_form([c](cplx, int order) { return Jet::constant(c, order); });
}

// a pair of linearly independent solutions of f'' + A f = 0 with their
// (constant) Wronskian f1 f2' - f1' f2
struct SolutionBasis {
    ProviderPtr f1;
    ProviderPtr f2;
    cplx wronskian{1.0, 0.0};
};

inline cplx wronskian_at(const SolutionBasis& b, cplx z) {
    Jet j1 = b.f1->jet(z, 1), j2 = b.f2->jet(z, 1);
    return j1[0] * j2[1] - j1[1] * j2[0];
}

}  // namespace disclab
