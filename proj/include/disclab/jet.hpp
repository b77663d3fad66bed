#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace disclab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Truncated derivative stack of an analytic function at a point:
// d[k] = f^(k)(z), k = 0..order.  Arithmetic follows the Leibniz /
// Faa di Bruno rules on derivative values, so composite closed forms
// built from +,-,*,/,exp,log,pow give jets that are exact up to roundoff.
class Jet {
public:
    static constexpr int kMaxOrder = 10;

    Jet() = default;
    explicit Jet(int order) : order_(check_order(order)) { d_.fill(cplx(0.0)); }

    static Jet constant(cplx c, int order) {
        Jet j(order);
        j.d_[0] = c;
        return j;
    }
    // the coordinate z itself: value z, first derivative 1
    static Jet variable(cplx z, int order) {
        Jet j(order);
        j.d_[0] = z;
        if (order >= 1) j.d_[1] = cplx(1.0);
        return j;
    }

    int order() const { return order_; }
    cplx value() const { return d_[0]; }
    cplx operator[](int k) const { return d_[k]; }
    cplx& operator[](int k) { return d_[k]; }

    // jet of f' (one order lower)
    Jet derivative() const {
        if (order_ == 0) throw std::logic_error("jet: derivative of order-0 jet");
        Jet r(order_ - 1);
        for (int k = 0; k <= order_ - 1; ++k) r.d_[k] = d_[k + 1];
        return r;
    }

    Jet truncated(int order) const {
        Jet r(std::min(order, order_));
        for (int k = 0; k <= r.order_; ++k) r.d_[k] = d_[k];
        return r;
    }

private:
    static int check_order(int order) {
        if (order < 0 || order > kMaxOrder) throw std::invalid_argument("jet: order out of range");
        return order;
    }
    int order_ = 0;
    std::array<cplx, kMaxOrder + 1> d_{};
};

namespace detail {
// binomial(n,k) for n,k <= kMaxOrder
inline double binom(int n, int k) {
    static const auto table = [] {
        std::array<std::array<double, Jet::kMaxOrder + 1>, Jet::kMaxOrder + 1> c{};
        for (int i = 0; i <= Jet::kMaxOrder; ++i) {
            c[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0.0);
        }
        return c;
    }();
    return table[n][k];
}
inline int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }
}  // namespace detail

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r(detail::common_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
    Jet r(detail::common_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}
inline Jet operator-(const Jet& a) {
    Jet r(a.order());
    for (int k = 0; k <= r.order(); ++k) r[k] = -a[k];
    return r;
}
inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r(detail::common_order(a, b));
    for (int n = 0; n <= r.order(); ++n) {
        cplx s(0.0);
        for (int k = 0; k <= n; ++k) s += detail::binom(n, k) * a[k] * b[n - k];
        r[n] = s;
    }
    return r;
}
// h = a / b from a = h*b:  h^(n) = (a^(n) - sum_{k<n} C(n,k) h^(k) b^(n-k)) / b
inline Jet operator/(const Jet& a, const Jet& b) {
    if (b.value() == cplx(0.0)) throw std::domain_error("jet: division by zero value");
    Jet r(detail::common_order(a, b));
    for (int n = 0; n <= r.order(); ++n) {
        cplx s = a[n];
        for (int k = 0; k < n; ++k) s -= detail::binom(n, k) * r[k] * b[n - k];
        r[n] = s / b.value();
    }
    return r;
}

inline Jet operator+(const Jet& a, cplx c) { Jet r = a; r[0] += c; return r; }
inline Jet operator+(cplx c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, cplx c) { Jet r = a; r[0] -= c; return r; }
inline Jet operator-(cplx c, const Jet& a) { return (-a) + c; }
inline Jet operator*(const Jet& a, cplx c) {
    Jet r(a.order());
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * c;
    return r;
}
inline Jet operator*(cplx c, const Jet& a) { return a * c; }
inline Jet operator/(const Jet& a, cplx c) { return a * (cplx(1.0) / c); }
inline Jet operator/(cplx c, const Jet& a) { return Jet::constant(c, a.order()) / a; }
inline Jet operator*(const Jet& a, double c) { return a * cplx(c); }
inline Jet operator*(double c, const Jet& a) { return a * cplx(c); }

// E = exp(f):  E' = f' E, so E^(n+1) = sum_k C(n,k) f^(k+1) E^(n-k)
inline Jet exp(const Jet& f) {
    Jet r(f.order());
    r[0] = std::exp(f.value());
    for (int n = 0; n + 1 <= f.order(); ++n) {
        cplx s(0.0);
        for (int k = 0; k <= n; ++k) s += detail::binom(n, k) * f[k + 1] * r[n - k];
        r[n + 1] = s;
    }
    return r;
}

// principal branch; caller is responsible for keeping arguments off the cut
inline Jet log(const Jet& f) {
    if (f.value() == cplx(0.0)) throw std::domain_error("jet: log of zero value");
    Jet r(f.order());
    r[0] = std::log(f.value());
    if (f.order() >= 1) {
        Jet q = f.derivative() / f.truncated(f.order() - 1);  // (log f)' = f'/f
        for (int k = 1; k <= f.order(); ++k) r[k] = q[k - 1];
    }
    return r;
}

inline Jet pow(const Jet& f, cplx alpha) { return exp(Jet::constant(alpha, f.order()) * log(f)); }
inline Jet pow(const Jet& f, double alpha) { return pow(f, cplx(alpha)); }
inline Jet sqrt(const Jet& f) { return pow(f, 0.5); }

inline Jet square(const Jet& f) { return f * f; }

}  // namespace disclab
