#include "rmt/quad.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rmt::quad {

namespace {

// Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix.
QuadratureRule golub_welsch(std::vector<double> diag, std::vector<double> offdiag,
                            double mu0, std::string descriptor) {
    const std::size_t m = diag.size();
    std::vector<double> z(m, 0.0);
    z[0] = 1.0;
    tridiag_eigen(diag, offdiag, &z);
    QuadratureRule r;
    r.nodes = std::move(diag);
    r.weights.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.weights[i] = mu0 * z[i] * z[i];
    r.descriptor = std::move(descriptor);
    return r;
}

struct LegendreCache {
    std::mutex mu;
    std::map<int, QuadratureRule> rules;
};

LegendreCache& legendre_cache() {
    static LegendreCache c;
    return c;
}

} // namespace

QuadratureRule gauss_legendre(int m) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: m >= 1 required");
    {
        auto& c = legendre_cache();
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.rules.find(m);
        if (it != c.rules.end()) return it->second;
    }
    std::vector<double> d(m, 0.0), e(m, 0.0);
    for (int k = 1; k < m; ++k) e[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    auto r = golub_welsch(std::move(d), std::move(e), 2.0, "legendre");
    {
        auto& c = legendre_cache();
        std::lock_guard<std::mutex> lk(c.mu);
        c.rules.emplace(m, r);
    }
    return r;
}

QuadratureRule gauss_laguerre(int m, double a) {
    if (m < 1) throw std::invalid_argument("gauss_laguerre: m >= 1 required");
    if (!(a > -1.0)) throw std::invalid_argument("gauss_laguerre: a > -1 required");
    std::vector<double> d(m), e(m, 0.0);
    for (int k = 0; k < m; ++k) d[k] = 2.0 * k + a + 1.0;
    for (int k = 1; k < m; ++k) e[k - 1] = std::sqrt(k * (k + a));
    return golub_welsch(std::move(d), std::move(e), std::exp(std::lgamma(a + 1.0)),
                        "gauss-laguerre");
}

QuadratureRule gauss_jacobi(int m, double a, double b) {
    if (m < 1) throw std::invalid_argument("gauss_jacobi: m >= 1 required");
    if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: a, b > -1 required");
    std::vector<double> d(m), e(m, 0.0);
    const double ab = a + b;
    d[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < m; ++k) {
        const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        d[k] = (b * b - a * a) / den;
    }
    for (int k = 1; k < m; ++k) {
        const double c = 2.0 * k + ab;
        const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
        const double den = c * c * (c + 1.0) * (c - 1.0);
        e[k - 1] = std::sqrt(num / den);
    }
    // mu0 = 2^{a+b+1} B(a+1, b+1)
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0)
                                + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
    return golub_welsch(std::move(d), std::move(e), mu0, "gauss-jacobi");
}

QuadratureRule mapped(const QuadratureRule& base, double lo, double hi) {
    QuadratureRule r;
    r.descriptor = base.descriptor + "-mapped";
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    r.nodes.resize(base.nodes.size());
    r.weights.resize(base.weights.size());
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        r.nodes[i] = mid + half * base.nodes[i];
        r.weights[i] = half * base.weights[i];
    }
    return r;
}

namespace {
int env_order(int fallback) {
    if (const char* env = std::getenv("RMT_QUAD_ORDER")) {
        const int v = std::atoi(env);
        if (v >= 10) return v;
    }
    return fallback;
}
} // namespace

int default_semiinf_order() {
    static const int order = env_order(200);
    return order;
}

int default_finite_order() {
    static const int order = env_order(120);
    return order;
}

double integrate_semiinf(const std::function<double(double)>& f, double y, double decay, int m) {
    if (!(decay > 0.0))
        throw std::invalid_argument("integrate_semiinf: positive decay required (A constraint violated)");
    const QuadratureRule r = gauss_laguerre(m, 0.0);
    // x = y + t/decay maps the weight e^{-t} onto e^{-decay (x-y)}
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(y + r.nodes[i] / decay);
    return s * std::exp(-decay * y) / decay;
}

double integrate_finite(const std::function<double(double)>& f, double lo, double hi, int m) {
    if (lo == hi) return 0.0;
    const QuadratureRule base = gauss_legendre(m);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < base.nodes.size(); ++i)
        s += base.weights[i] * f(mid + half * base.nodes[i]);
    return s * half;
}

double integrate_panels(const std::function<double(double)>& f, double lo, double hi,
                        double h, int pts_per_panel) {
    if (hi == lo) return 0.0;
    if (hi < lo) return -integrate_panels(f, hi, lo, h, pts_per_panel);
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
    const QuadratureRule base = gauss_legendre(pts_per_panel);
    const double w = (hi - lo) / n;
    double s = 0.0;
    for (int p = 0; p < n; ++p) {
        const double a = lo + p * w;
        const double mid = a + 0.5 * w, half = 0.5 * w;
        for (std::size_t i = 0; i < base.nodes.size(); ++i)
            s += half * base.weights[i] * f(mid + half * base.nodes[i]);
    }
    return s;
}

namespace {
double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
         + adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int max_depth) {
    if (lo == hi) return 0.0;
    const double m = 0.5 * (lo + hi);
    const double fa = f(lo), fb = f(hi), fm = f(m);
    return adapt(f, lo, fa, hi, fb, m, fm, simpson(lo, fa, hi, fb, fm), tol, max_depth);
}

Matrix nystrom(const std::function<double(double, double)>& kernel, double lo, double hi, int m) {
    const QuadratureRule base = gauss_legendre(m);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::vector<double> x(m), sw(m);
    for (int i = 0; i < m; ++i) {
        x[i] = mid + half * base.nodes[i];
        sw[i] = std::sqrt(half * base.weights[i]);
    }
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = sw[i] * sw[j] * kernel(x[i], x[j]);
    return g;
}

} // namespace rmt::quad
