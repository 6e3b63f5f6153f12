#include "rmt/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/linalg.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace rmt::kernels {

using specfun::jacobi;
using specfun::jacobi_norm;
using specfun::laguerre;
using specfun::laguerre_all;
using specfun::laguerre_norm;

KernelSpec KernelSpec::laguerre(int n, double a) {
    KernelSpec s;
    s.family = KernelFamily::Laguerre;
    s.n = n;
    s.a = a;
    s.validate();
    return s;
}

KernelSpec KernelSpec::jacobi(int n, double a, double b) {
    KernelSpec s;
    s.family = KernelFamily::Jacobi;
    s.n = n;
    s.a = a;
    s.b = b;
    s.validate();
    return s;
}

void KernelSpec::validate() const {
    if (n < 1) throw std::invalid_argument("KernelSpec: n >= 1 required");
    if (!(a > -1.0)) throw std::invalid_argument("KernelSpec: a > -1 required");
    if (family == KernelFamily::Jacobi && !(b > -1.0))
        throw std::invalid_argument("KernelSpec: b > -1 required");
}

namespace {

void check_support(const KernelSpec& spec, double x) {
    if (spec.family == KernelFamily::Laguerre) {
        if (!(x >= 0.0)) throw std::invalid_argument("kernel: x >= 0 required (Laguerre support)");
    } else {
        if (!(x > -1.0 && x < 1.0))
            throw std::invalid_argument("kernel: |x| < 1 required (Jacobi support)");
    }
}

double lag_prefactor(double a, double x) {
    if (x == 0.0) return a == 0.0 ? 1.0 : 0.0;
    return std::exp(0.5 * a * std::log(x) - 0.5 * x);
}

double jac_prefactor(double a, double b, double x) {
    return std::pow(1.0 - x, 0.5 * (a - 1.0)) * std::pow(1.0 + x, 0.5 * b);
}

} // namespace

// Normalized weighted functions phi_l = w-prefactor * p_l / sqrt(h_l); the
// recurrence runs on the weighted values so soft-edge arguments stay in range.
std::vector<double> weighted_funcs(const KernelSpec& spec, double x) {
    check_support(spec, x);
    const int n = spec.n;
    std::vector<double> phi(n + 1);
    if (spec.family == KernelFamily::Laguerre) {
        const double a = spec.a;
        phi[0] = lag_prefactor(a, x) / std::sqrt(laguerre_norm(0, a));
        if (n == 0) return phi;
        phi[1] = (1.0 + a - x) * phi[0] * std::sqrt(1.0 / (1.0 + a));
        for (int l = 1; l < n; ++l)
            phi[l + 1] = ((2.0 * l + 1.0 + a - x) * phi[l]
                          - std::sqrt(l * (l + a)) * phi[l - 1])
                         / std::sqrt((l + 1.0) * (l + 1.0 + a));
        return phi;
    }
    const double a = spec.a, b = spec.b;
    phi[0] = jac_prefactor(a, b, x) / std::sqrt(jacobi_norm(0, a, b));
    if (n == 0) return phi;
    const double hr = (a + 1.0) * (b + 1.0) / (a + b + 3.0);  // h_1/h_0
    phi[1] = (0.5 * (a + b + 2.0) * x + 0.5 * (a - b)) * phi[0] / std::sqrt(hr);
    double h_prev_ratio = hr;  // h_l / h_{l-1} at l = 1
    for (int l = 1; l < n; ++l) {
        const double c = 2.0 * l + a + b;
        const double a1 = 2.0 * (l + 1.0) * (l + a + b + 1.0) * c;
        const double a2 = (c + 1.0) * (a * a - b * b);
        const double a3 = c * (c + 1.0) * (c + 2.0);
        const double a4 = 2.0 * (l + a) * (l + b) * (c + 2.0);
        const double ratio_next = ((a + 1.0 + l) * (b + 1.0 + l)
                                   / ((l + 1.0) * (a + b + 1.0 + l)))
                                  * ((a + b + 1.0 + 2.0 * l) / (a + b + 3.0 + 2.0 * l));
        phi[l + 1] = ((a2 + a3 * x) * phi[l] - a4 / std::sqrt(h_prev_ratio) * phi[l - 1])
                     / (a1 * std::sqrt(ratio_next));
        h_prev_ratio = ratio_next;
    }
    return phi;
}

std::vector<double> weighted_funcs_deriv(const KernelSpec& spec, double x) {
    const std::vector<double> phi = weighted_funcs(spec, x);
    const int n = spec.n;
    std::vector<double> dphi(n + 1);
    if (spec.family == KernelFamily::Laguerre) {
        const double a = spec.a;
        // x p_l' = l p_l - sqrt(l(l+a)) p_{l-1} (normalized); prefactor chain rule
        const double wlog = (x > 0.0) ? (0.5 * a / x - 0.5) : -0.5;
        for (int l = 0; l <= n; ++l) {
            double poly_d = 0.0;
            if (l > 0 && x > 0.0)
                poly_d = (l * phi[l] - std::sqrt(l * (l + a)) * phi[l - 1]) / x;
            else if (l > 0)
                poly_d = 0.0;  // x=0 only reached with a=0 prefactor; handled by caller grids
            dphi[l] = wlog * phi[l] + poly_d;
        }
        return dphi;
    }
    const double a = spec.a, b = spec.b;
    const double wlog = -0.5 * (a - 1.0) / (1.0 - x) + 0.5 * b / (1.0 + x);
    for (int l = 0; l <= n; ++l) {
        double poly_d = 0.0;
        if (l > 0) {
            const double c = 2.0 * l + a + b;
            // (2l+a+b)(1-x^2) p_l' = l[(a-b) - (2l+a+b)x] p_l + 2(l+a)(l+b) p_{l-1}
            const double hl_ratio = ((a + l) * (b + l) / (l * (a + b + l)))
                                    * ((a + b - 1.0 + 2.0 * l) / (a + b + 1.0 + 2.0 * l));
            // hl_ratio = h_l / h_{l-1}
            poly_d = (l * ((a - b) - c * x) * phi[l]
                      + 2.0 * (l + a) * (l + b) * phi[l - 1] / std::sqrt(hl_ratio))
                     / (c * (1.0 - x * x));
        }
        dphi[l] = wlog * phi[l] + poly_d;
    }
    return dphi;
}

double kernel_eval(const KernelSpec& spec, double x, double y) {
    const std::vector<double> px = weighted_funcs(spec, x);
    const std::vector<double> py = weighted_funcs(spec, y);
    double s = 0.0;
    for (int l = 0; l < spec.n; ++l) s += px[l] * py[l];
    return s;
}

double kernel_deriv1(const KernelSpec& spec, double x, double y) {
    const std::vector<double> dx = weighted_funcs_deriv(spec, x);
    const std::vector<double> py = weighted_funcs(spec, y);
    double s = 0.0;
    for (int l = 0; l < spec.n; ++l) s += dx[l] * py[l];
    return s;
}

double kernel_cd(const KernelSpec& spec, double x, double y) {
    const int n = spec.n;
    double c;  // sign-carrying Christoffel-Darboux constant on normalized funcs
    if (spec.family == KernelFamily::Laguerre) {
        c = -std::sqrt(n * (n + spec.a));
    } else {
        const double a = spec.a, b = spec.b;
        const double logabar = std::lgamma(n + 1.0) + std::lgamma(n + a + b + 1.0)
                               - (a + b) * std::log(2.0) - std::lgamma(n + a)
                               - std::lgamma(n + b) - std::log(2.0 * n + a + b);
        const double loghh = 0.5 * (std::log(jacobi_norm(n, a, b)) + std::log(jacobi_norm(n - 1, a, b)));
        c = std::exp(logabar + loghh);
    }
    if (std::fabs(x - y) < 1e-8) {
        const double m = 0.5 * (x + y);
        const std::vector<double> phi = weighted_funcs(spec, m);
        const std::vector<double> dphi = weighted_funcs_deriv(spec, m);
        return c * (dphi[n] * phi[n - 1] - phi[n] * dphi[n - 1]);
    }
    const std::vector<double> px = weighted_funcs(spec, x);
    const std::vector<double> py = weighted_funcs(spec, y);
    return c * (px[n] * py[n - 1] - px[n - 1] * py[n]) / (x - y);
}

double rho_ue(const KernelSpec& spec, const std::vector<double>& points) {
    const std::size_t k = points.size();
    if (k == 0) return 1.0;
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double v = kernel_eval(spec, points[i], points[j]);
            if (spec.family == KernelFamily::Jacobi) v *= (1.0 - points[j]);
            m(i, j) = v;
        }
    return det(m);
}

// ---------------------------------------------------------------------------
// Analytic tail integrals for the b=0 Jacobi / a=0 Laguerre kernels
// ---------------------------------------------------------------------------

double tail_int(const KernelSpec& spec, double arg, double lower) {
    const int m = spec.n;
    if (spec.family == KernelFamily::Laguerre) {
        if (spec.a != 0.0) throw std::invalid_argument("tail_int: Laguerre case requires a = 0");
        const std::vector<double> la = laguerre_all(m - 1, 0.0, arg);
        const std::vector<double> ll = laguerre_all(m - 1, 0.0, lower);
        const double w = std::exp(-0.5 * (arg + lower));
        double s = 0.0, alt = 0.0;  // alt = sum_{p<l} (-1)^p L_p(lower)
        for (int l = 0; l < m; ++l) {
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            s += la[l] * (2.0 * ll[l] + 4.0 * sgn * alt);
            alt += sgn * ll[l];
        }
        return w * s;
    }
    const double a = spec.a;
    if (spec.b != 0.0) throw std::invalid_argument("tail_int: Jacobi case requires b = 0");
    const std::vector<double> pa = specfun::jacobi_all(m - 1, a, 0.0, arg);
    const std::vector<double> pl = specfun::jacobi_all(m - 1, a, 0.0, lower);
    const double w = std::pow(1.0 - arg, 0.5 * (a - 1.0)) * std::pow(1.0 - lower, 0.5 * (a + 1.0));
    double s = 0.0, run = 0.0;  // run = sum_{p<l} P_p(lower)
    for (int l = 0; l < m; ++l) {
        const double hl = jacobi_norm(l, a, 0.0);
        s += pa[l] * (pl[l] + 2.0 * run) / (hl * (l + 0.5 * (a + 1.0)));
        run += pl[l];
    }
    return w * s;
}

double tail_int_d(const KernelSpec& spec, double arg, double lower) {
    const int m = spec.n;
    if (spec.family == KernelFamily::Laguerre) {
        if (spec.a != 0.0) throw std::invalid_argument("tail_int_d: Laguerre case requires a = 0");
        const std::vector<double> la = laguerre_all(m - 1, 0.0, arg);
        const std::vector<double> ll = laguerre_all(m - 1, 0.0, lower);
        const double w = std::exp(-0.5 * (arg + lower));
        double s = 0.0, alt = 0.0, dsum = 0.0;  // dsum = sum_{p<l} L_p(arg) = -L_l'(arg)
        for (int l = 0; l < m; ++l) {
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            const double dl = -dsum - 0.5 * la[l];  // d/darg of e^{-arg/2} L_l(arg), over w
            s += dl * (2.0 * ll[l] + 4.0 * sgn * alt);
            alt += sgn * ll[l];
            dsum += la[l];
        }
        return w * s;
    }
    const double a = spec.a;
    if (spec.b != 0.0) throw std::invalid_argument("tail_int_d: Jacobi case requires b = 0");
    const std::vector<double> pa = specfun::jacobi_all(m - 1, a, 0.0, arg);
    const std::vector<double> pl = specfun::jacobi_all(m - 1, a, 0.0, lower);
    const double w = std::pow(1.0 - arg, 0.5 * (a - 1.0)) * std::pow(1.0 - lower, 0.5 * (a + 1.0));
    double s = 0.0, run = 0.0, tau = 0.0;  // tau = sum_{p<l} (2p+1+a)(-1)^p P_p(arg)
    for (int l = 0; l < m; ++l) {
        const double hl = jacobi_norm(l, a, 0.0);
        const double sgn_lm1 = (l % 2 == 0) ? -1.0 : 1.0;  // (-1)^{l-1}
        const double dP = (-l * pa[l] + sgn_lm1 * tau) / (1.0 - arg);
        const double dterm = dP - 0.5 * (a - 1.0) * pa[l] / (1.0 - arg);
        s += dterm * (pl[l] + 2.0 * run) / (hl * (l + 0.5 * (a + 1.0)));
        run += pl[l];
        tau += (2.0 * l + 1.0 + a) * ((l % 2 == 0) ? 1.0 : -1.0) * pa[l];
    }
    return w * s;
}

// ---------------------------------------------------------------------------
// phi/psi pairs of the kernel derivative identities
// ---------------------------------------------------------------------------

double lag_c(int n, double a) { return n / (2.0 * laguerre_norm(n - 1, a)); }

double lag_phi(int n, double a, double x) {
    return lag_prefactor(a, x) * laguerre(n - 1, a + 1.0, x);
}

double lag_psi(int n, double a, double x) {
    return std::exp((0.5 * a - 1.0) * std::log(x) - 0.5 * x)
           * (laguerre(n, a, x) - laguerre(n - 1, a, x));
}

double jac_c(int n, double a, double b) {
    return (1.0 / (2.0 * jacobi_norm(n - 1, a, b))) * ((a + b + n) / (a + b - 1.0 + 2.0 * n))
           * (2.0 * n / (2.0 * n + a + b));
}

double jac_phi(int n, double a, double b, double x) {
    return std::pow(1.0 - x, 0.5 * (a + 1.0)) * std::pow(1.0 + x, 0.5 * b)
           * jacobi(n - 1, a, b + 1.0, x);
}

double jac_psi(int n, double a, double b, double x) {
    return -std::pow(1.0 - x, 0.5 * (a + 1.0)) * std::pow(1.0 + x, 0.5 * b - 1.0)
           * ((n + a + b) * jacobi(n, a, b, x) + (n + a) * jacobi(n - 1, a, b, x));
}

double kernel_from_integral_rep_laguerre(int n, double a, double x, double y) {
    const double c = lag_c(n, a);
    // integrand decays like e^{-t}; panel width tracks polynomial oscillation
    const double tmax = 8.0 * n + 60.0;
    const double s = quad::integrate_panels(
        [&](double t) {
            return lag_phi(n, a, x + t) * lag_psi(n, a, y + t)
                 + lag_phi(n, a, y + t) * lag_psi(n, a, x + t);
        },
        0.0, tmax, 0.5);
    // the derivative identity fixes the sign: K decays along the diagonal
    return -c * s;
}

double kernel_from_integral_rep_jacobi(int n, double a, double b, double X, double Y) {
    const double x = 0.5 * (1.0 - X), y = 0.5 * (1.0 - Y);
    const double c = jac_c(n, a, b);
    // u = v^2 regularizes the du/u endpoint
    const double s = quad::integrate_panels(
        [&](double v) {
            const double u = v * v;
            return 2.0 / v
                   * (jac_phi(n, a, b, 1.0 - 2.0 * x * u) * jac_psi(n, a, b, 1.0 - 2.0 * y * u)
                      + jac_phi(n, a, b, 1.0 - 2.0 * y * u) * jac_psi(n, a, b, 1.0 - 2.0 * x * u));
        },
        1e-8, 1.0, 1.0 / 60.0);
    return -c * s / (4.0 * x * y);
}

} // namespace rmt::kernels
