#include "rmt/scaled.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace rmt::scaled {

using specfun::airy_ai;
using specfun::airy_ai_prime;
using specfun::bessel_j;
using specfun::bessel_j_deriv;

void ScalingSpec::validate() const {
    if ((regime == Regime::Hard || regime == Regime::HardAtOne) && !(a > -1.0))
        throw std::invalid_argument("ScalingSpec: a > -1 required");
    if (source == Source::Superposition && regime != Regime::Soft
        && regime != Regime::HardAtOne && !(alpha <= 0.0))
        throw std::invalid_argument("ScalingSpec: alpha <= 0 required in the hard/bulk regimes");
    if (regime == Regime::HardAtOne && !(alpha < 1.5))
        throw std::invalid_argument("ScalingSpec: alpha < 3/2 required at the x=1 hard edge");
}

// ---------------------------------------------------------------------------
// scaled kernels
// ---------------------------------------------------------------------------

namespace {

double sinc_pi(double d) {
    if (std::fabs(d) < 1e-8) {
        const double s = M_PI * d;
        return 1.0 - s * s / 6.0;
    }
    return std::sin(M_PI * d) / (M_PI * d);
}

// second derivatives of g(X) = J_a(sqrt X) and h(X) = sqrt(X) J_a'(sqrt X)
void hard_gh(double a, double X, double& g, double& h) {
    const double u = std::sqrt(X);
    g = bessel_j(a, u);
    h = u * bessel_j_deriv(a, u);
}

} // namespace

double k_scaled(Regime regime, double a, double X, double Y) {
    switch (regime) {
        case Regime::Bulk:
            return sinc_pi(X - Y);
        case Regime::Soft: {
            if (std::fabs(X - Y) < 1e-7) {
                const double m = 0.5 * (X + Y);
                const double ai = airy_ai(m), aip = airy_ai_prime(m);
                return aip * aip - m * ai * ai;
            }
            return (airy_ai(X) * airy_ai_prime(Y) - airy_ai(Y) * airy_ai_prime(X)) / (X - Y);
        }
        case Regime::Hard:
        case Regime::HardAtOne: {
            if (!(X > 0.0) || !(Y > 0.0)) return 0.0;
            if (std::fabs(X - Y) < 1e-7 * (1.0 + std::fabs(X))) {
                const double m = 0.5 * (X + Y);
                const double u = std::sqrt(m);
                const double j = bessel_j(a, u), jp = bessel_j_deriv(a, u);
                return 0.25 * (jp * jp + (1.0 - a * a / (m)) * j * j);
            }
            double gx, hx, gy, hy;
            hard_gh(a, X, gx, hx);
            hard_gh(a, Y, gy, hy);
            return (gx * hy - hx * gy) / (2.0 * (X - Y));
        }
    }
    return 0.0;
}

double k_scaled_d1(Regime regime, double a, double X, double Y) {
    switch (regime) {
        case Regime::Bulk: {
            const double d = X - Y;
            if (std::fabs(d) < 1e-6) return -M_PI * M_PI * d / 3.0;
            return (std::cos(M_PI * d) - sinc_pi(d)) / d;
        }
        case Regime::Soft: {
            if (std::fabs(X - Y) < 1e-6) {
                const double m = 0.5 * (X + Y);
                const double ai = airy_ai(m);
                return -0.5 * ai * ai;
            }
            const double n = airy_ai(X) * airy_ai_prime(Y) - airy_ai(Y) * airy_ai_prime(X);
            const double nx = airy_ai_prime(X) * airy_ai_prime(Y) - airy_ai(Y) * X * airy_ai(X);
            return (nx * (X - Y) - n) / ((X - Y) * (X - Y));
        }
        case Regime::Hard:
        case Regime::HardAtOne: {
            if (!(X > 0.0) || !(Y > 0.0)) return 0.0;
            if (std::fabs(X - Y) < 1e-6 * (1.0 + std::fabs(X))) {
                // quarter of the diagonal second derivative of the numerator
                const double m = 0.5 * (X + Y);
                const double u = std::sqrt(m);
                const double j = bessel_j(a, u), jp = bessel_j_deriv(a, u);
                const double jpp = -jp / u - (1.0 - a * a / (u * u)) * j;
                const double jppp = -jpp / u + jp / (u * u) - (1.0 - a * a / (u * u)) * jp
                                    - 2.0 * a * a / (u * u * u) * j;
                const double gpp = jpp / (4.0 * u * u) - jp / (4.0 * u * u * u);
                const double hpp = (2.0 * jpp + u * jppp) / (4.0 * u * u)
                                   - (jp + u * jpp) / (4.0 * u * u * u);
                const double g = j, h = u * jp;
                return 0.25 * (gpp * h - hpp * g);
            }
            double gx, hx, gy, hy;
            hard_gh(a, X, gx, hx);
            hard_gh(a, Y, gy, hy);
            const double u = std::sqrt(X);
            const double jp = bessel_j_deriv(a, u);
            const double jpp = -jp / u - (1.0 - a * a / (u * u)) * bessel_j(a, u);
            const double gpx = jp / (2.0 * u);
            const double hpx = (jp + u * jpp) / (2.0 * u);
            const double f = gx * hy - hx * gy;
            const double fx = gpx * hy - hpx * gy;
            return (fx * (X - Y) - f) / (2.0 * (X - Y) * (X - Y));
        }
    }
    return 0.0;
}

double k_bulk_integral(double X, double Y) {
    return quad::integrate_finite([&](double t) { return std::cos(M_PI * (X - Y) * t); }, 0.0,
                                  1.0, 64);
}

double k_soft_integral(double X, double Y) {
    return quad::integrate_panels([&](double t) { return airy_ai(X + t) * airy_ai(Y + t); }, 0.0,
                                  std::max(40.0, 40.0 - std::min(X, Y)), 0.4);
}

double k_hard_integral(double a, double X, double Y) {
    // t = s^2 removes the sqrt cusp at the origin
    return 0.25
           * quad::integrate_finite(
                 [&](double s) {
                     return 2.0 * s * bessel_j(a, s * std::sqrt(X)) * bessel_j(a, s * std::sqrt(Y));
                 },
                 0.0, 1.0, 96);
}

// ---------------------------------------------------------------------------
// oscillatory tails
// ---------------------------------------------------------------------------

namespace {

// Tail of a conditionally convergent oscillatory integral: sum half-period
// chunks and accelerate by iterated averaging.
double oscillatory_tail(const std::function<double(double)>& f, double z0, double halfp,
                        int nchunk = 30) {
    std::vector<double> s(nchunk);
    double run = 0.0;
    for (int k = 0; k < nchunk; ++k) {
        run += quad::integrate_finite(f, z0 + k * halfp, z0 + (k + 1) * halfp, 12);
        s[k] = run;
    }
    // iterated averaging of the partial sums
    for (int level = 0; level < nchunk - 1; ++level)
        for (int k = 0; k + 1 < nchunk - level; ++k) s[k] = 0.5 * (s[k] + s[k + 1]);
    return s[0];
}

} // namespace

double bessel_int0(double nu, double z) {
    if (z == 0.0) return 0.0;
    const int count = static_cast<int>(z + 40.0);
    const auto js = specfun::bessel_j_seq(nu + 1.0, count, z);
    double s = 0.0;
    for (int k = 0; 2 * k < count; ++k) s += js[2 * k];
    return 2.0 * s;
}

double bessel_tail(double nu, double z) { return 1.0 - bessel_int0(nu, z); }

double bessel_power_tail(double nu, double beta, double z) {
    if (!(beta < 1.5)) throw std::invalid_argument("bessel_power_tail: beta < 3/2 required");
    const double z0 = std::max(z, 30.0);
    double head = 0.0;
    if (z < z0)
        head = quad::integrate_panels(
            [&](double u) { return std::pow(u, beta) * bessel_j(nu, u); }, z, z0, 0.5);
    const double tail = oscillatory_tail(
        [&](double u) { return std::pow(u, beta) * bessel_j(nu, u); }, z0, M_PI);
    return head + tail;
}

namespace {

// cubic Hermite table for a smooth function with analytic derivative
struct HermiteTable {
    double lo = 0.0, h = 0.0;
    std::vector<double> val, der;

    double operator()(double x) const {
        const double u = (x - lo) / h;
        const std::size_t i = std::min(val.size() - 2, static_cast<std::size_t>(std::max(0.0, u)));
        const double t = u - i;
        const double t2 = t * t, t3 = t2 * t;
        return (2.0 * t3 - 3.0 * t2 + 1.0) * val[i] + (t3 - 2.0 * t2 + t) * h * der[i]
             + (-2.0 * t3 + 3.0 * t2) * val[i + 1] + (t3 - t2) * h * der[i + 1];
    }
};

const HermiteTable& airy_tail_table() {
    static const HermiteTable table = [] {
        HermiteTable t;
        t.lo = -130.0;
        t.h = 0.02;
        const std::size_t n = static_cast<std::size_t>((42.0 - t.lo) / t.h) + 1;
        t.val.resize(n);
        t.der.resize(n);
        t.val[n - 1] = 0.0;  // Ai tail beyond 42 is ~1e-120
        for (std::size_t i = 0; i < n; ++i) t.der[i] = -airy_ai(t.lo + i * t.h);
        for (std::size_t i = n - 1; i-- > 0;) {
            const double a = t.lo + i * t.h;
            t.val[i] = t.val[i + 1]
                       + quad::integrate_finite([](double x) { return airy_ai(x); }, a, a + t.h, 8);
        }
        return t;
    }();
    return table;
}

} // namespace

double airy_tail(double z) {
    if (z >= 42.0) return 0.0;
    if (z < -130.0) {
        const double h = std::min(0.25, 1.5 / std::sqrt(std::fabs(z)));
        return airy_tail_table()(-130.0)
               + quad::integrate_panels([&](double t) { return airy_ai(t); }, z, -130.0, h);
    }
    return airy_tail_table()(z);
}

double airy_exp_tail(double c, double u) {
    const double upper = std::max(u, c * c) + 45.0;
    const double h = (u < -4.0) ? std::min(0.3, 1.5 / std::sqrt(std::fabs(u))) : 0.3;
    return quad::integrate_panels([&](double t) { return std::exp(c * t) * airy_ai(t); }, u,
                                  upper, h);
}

namespace {
const HermiteTable& si_table() {
    static const HermiteTable table = [] {
        HermiteTable t;
        t.lo = 0.0;
        t.h = 0.02;
        const std::size_t n = static_cast<std::size_t>(66.0 / t.h) + 1;
        t.val.resize(n);
        t.der.resize(n);
        auto sinc = [](double u) { return (std::fabs(u) < 1e-12) ? 1.0 : std::sin(u) / u; };
        t.val[0] = 0.0;
        for (std::size_t i = 0; i < n; ++i) t.der[i] = sinc(t.lo + i * t.h);
        for (std::size_t i = 1; i < n; ++i) {
            const double a = t.lo + (i - 1) * t.h;
            t.val[i] = t.val[i - 1] + quad::integrate_finite(sinc, a, a + t.h, 8);
        }
        return t;
    }();
    return table;
}
} // namespace

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x <= 64.0) return si_table()(x);
    // asymptotic auxiliary expansion
    double f = 0.0, g = 0.0, term = 1.0 / x;
    for (int k = 0; k < 9; ++k) {
        if (k % 2 == 0)
            f += (k % 4 == 0 ? term : -term);
        else
            g += (k % 4 == 1 ? term : -term);
        term *= (k + 1.0) / x;
    }
    return 0.5 * M_PI - f * std::cos(x) - g * std::sin(x);
}

// ---------------------------------------------------------------------------
// scaled kernel integrals
// ---------------------------------------------------------------------------

namespace {

// int_lower^inf v^{(alpha-1)/2} K_hard(v, Y) dv via w = sqrt(v)
double hard_power_tail_k(double alpha, double a, double lower, double Y) {
    const auto f = [&](double w) {
        return 2.0 * std::pow(w, alpha) * k_scaled(Regime::Hard, a, w * w, Y);
    };
    const double w0 = std::sqrt(std::max(lower, 0.0));
    const double z0 = std::max({w0, std::sqrt(Y) + 5.0, 30.0});
    double head = 0.0;
    if (w0 < z0) head = quad::integrate_panels(f, w0, z0, 0.4);
    return head + oscillatory_tail(f, z0, M_PI);
}

// same against dK in the non-integrated slot:
// int_lower^inf v^{(alpha-1)/2} (d1 K)(Y, v) dv
double hard_power_tail_dk(double alpha, double a, double lower, double Y) {
    const auto f = [&](double w) {
        return 2.0 * std::pow(w, alpha) * k_scaled_d1(Regime::Hard, a, Y, w * w);
    };
    const double w0 = std::sqrt(std::max(lower, 0.0));
    const double z0 = std::max({w0, std::sqrt(Y) + 5.0, 30.0});
    double head = 0.0;
    if (w0 < z0) head = quad::integrate_panels(f, w0, z0, 0.4);
    return head + oscillatory_tail(f, z0, M_PI);
}

} // namespace

double tail_int_scaled(Regime regime, double a, double arg, double Y) {
    switch (regime) {
        case Regime::Bulk:
            return 0.5 + sine_integral(M_PI * (arg - Y)) / M_PI;
        case Regime::Soft:
            return quad::integrate_panels(
                [&](double s) { return airy_ai(arg + s) * airy_tail(Y + s); }, 0.0,
                std::max(40.0, 40.0 - arg), 0.4);
        case Regime::Hard:
        case Regime::HardAtOne:
            return hard_power_tail_k(1.0, a, Y, arg);
    }
    return 0.0;
}

double tail_int_scaled_d(Regime regime, double a, double arg, double Y) {
    switch (regime) {
        case Regime::Bulk:
            return k_scaled(Regime::Bulk, 0.0, arg, Y);
        case Regime::Soft:
            return quad::integrate_panels(
                [&](double s) { return airy_ai_prime(arg + s) * airy_tail(Y + s); }, 0.0,
                std::max(40.0, 40.0 - arg), 0.4);
        case Regime::Hard:
        case Regime::HardAtOne:
            return hard_power_tail_dk(1.0, a, Y, arg);
    }
    return 0.0;
}

double weighted_left_int(Regime regime, double a, double alpha, double X, double Y) {
    switch (regime) {
        case Regime::Hard:
        case Regime::HardAtOne:
            return quad::integrate_finite(
                [&](double v) {
                    return std::exp(-0.5 * alpha * v) * k_scaled(Regime::Hard, a, v, Y);
                },
                0.0, X, 160);
        case Regime::Bulk: {
            if (alpha == 0.0) return 0.5 + sine_integral(M_PI * (X - Y)) / M_PI;
            if (alpha > 0.0)
                throw std::invalid_argument("scaled: alpha <= 0 required in the bulk regime");
            const double umax = std::min(90.0 / -alpha, 4000.0);
            return std::exp(-0.5 * alpha * X)
                   * quad::integrate_panels(
                         [&](double u) {
                             return std::exp(0.5 * alpha * u)
                                    * k_scaled(Regime::Bulk, 0.0, X - u, Y);
                         },
                         0.0, umax, 0.30);
        }
        case Regime::Soft: {
            if (alpha == 0.0) {
                return airy_tail(Y)
                       - quad::integrate_panels(
                             [&](double s) { return airy_ai(Y + s) * airy_tail(X + s); }, 0.0,
                             std::max(40.0, 40.0 - Y), 0.4);
            }
            if (alpha < 0.0) {
                const double umax = std::min(90.0 / -alpha, 4000.0);
                return std::exp(-0.5 * alpha * X)
                       * quad::integrate_panels(
                             [&](double u) {
                                 return std::exp(0.5 * alpha * u)
                                        * k_scaled(Regime::Soft, 0.0, X - u, Y);
                             },
                             0.0, umax, 0.30);
            }
            // alpha > 0: complement through the exponential Airy transform
            const double c = 0.5 * alpha;
            const double whole = std::exp(-alpha * alpha * alpha / 24.0)
                                 * std::exp(-0.5 * alpha * Y) * airy_exp_tail(c, Y);
            const double right = quad::integrate_panels(
                [&](double s) {
                    return airy_ai(Y + s) * std::exp(0.5 * alpha * s)
                           * airy_exp_tail(-c, X + s);
                },
                0.0, std::max(40.0, 40.0 - Y), 0.4);
            return whole - right;
        }
    }
    return 0.0;
}

double weighted_left_int_d(Regime regime, double a, double alpha, double X, double Y) {
    // int_lower^X e^{-alpha v/2} (d1 K)(Y, v) dv
    switch (regime) {
        case Regime::Hard:
        case Regime::HardAtOne:
            return quad::integrate_finite(
                [&](double v) {
                    return std::exp(-0.5 * alpha * v) * k_scaled_d1(Regime::Hard, a, Y, v);
                },
                0.0, X, 160);
        case Regime::Bulk: {
            if (alpha > 0.0)
                throw std::invalid_argument("scaled: alpha <= 0 required in the bulk regime");
            if (alpha == 0.0) {
                // int_{-inf}^X d1K(Y, v) dv = -[K(Y,v)]_{v->-inf}^{X} gain via
                // the difference-kernel structure: d1K(Y,v) = -d/dv K(Y,v)
                return -k_scaled(Regime::Bulk, 0.0, Y, X);
            }
            const double umax = std::min(90.0 / -alpha, 4000.0);
            return std::exp(-0.5 * alpha * X)
                   * quad::integrate_panels(
                         [&](double u) {
                             return std::exp(0.5 * alpha * u)
                                    * k_scaled_d1(Regime::Bulk, 0.0, Y, X - u);
                         },
                         0.0, umax, 0.30);
        }
        case Regime::Soft: {
            if (alpha == 0.0) {
                // swap to Airy functions: int_{-inf}^X d1K(Y,v) dv
                //   = -Ai(Y) + int_0^inf Ai'(Y+s) AI(X+s) ds sign-checked below
                return -airy_ai(Y)
                       - quad::integrate_panels(
                             [&](double s) { return airy_ai_prime(Y + s) * airy_tail(X + s); },
                             0.0, std::max(40.0, 40.0 - Y), 0.4);
            }
            if (alpha < 0.0) {
                const double umax = std::min(90.0 / -alpha, 4000.0);
                return std::exp(-0.5 * alpha * X)
                       * quad::integrate_panels(
                             [&](double u) {
                                 return std::exp(0.5 * alpha * u)
                                        * k_scaled_d1(Regime::Soft, 0.0, Y, X - u);
                             },
                             0.0, umax, 0.30);
            }
            const double c = 0.5 * alpha;
            const double whole = std::exp(-alpha * alpha * alpha / 24.0)
                                 * quad::integrate_panels(
                                       [&](double s) {
                                           return airy_ai_prime(Y + s) * std::exp(0.5 * alpha * s);
                                       },
                                       0.0, std::max(40.0, 40.0 - Y), 0.4);
            const double right = quad::integrate_panels(
                [&](double s) {
                    return airy_ai_prime(Y + s) * std::exp(0.5 * alpha * s)
                           * airy_exp_tail(-c, X + s);
                },
                0.0, std::max(40.0, 40.0 - Y), 0.4);
            return whole - right;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// superposition blocks
// ---------------------------------------------------------------------------

double scaled_super_kee(const ScalingSpec& spec, double Y, double Yp) {
    spec.validate();
    if (spec.regime == Regime::HardAtOne)
        return std::sqrt(Y / Yp) * k_scaled(Regime::Hard, spec.a, Y, Yp);
    return k_scaled(spec.regime, spec.a, Y, Yp);
}

double scaled_super_koe(const ScalingSpec& spec, double X, double Y) {
    spec.validate();
    const double alpha = spec.alpha;
    if (spec.regime == Regime::HardAtOne) {
        const double k = k_scaled(Regime::Hard, spec.a, X, Y);
        const double dk = k_scaled_d1(Regime::Hard, spec.a, X, Y);
        return std::pow(X, 0.5 * alpha) / std::sqrt(Y)
               * (0.5 * (1.0 - alpha) * std::pow(X, -0.5 * (1.0 + alpha)) * k
                  + std::pow(X, 0.5 * (1.0 - alpha)) * dk);
    }
    return -(0.5 * alpha * k_scaled(spec.regime, spec.a, X, Y)
             + k_scaled_d1(spec.regime, spec.a, X, Y));
}

double scaled_super_keo(const ScalingSpec& spec, double Y, double X) {
    spec.validate();
    const double alpha = spec.alpha;
    if (spec.regime == Regime::HardAtOne) {
        const double ind = (X < Y) ? -std::pow(X / Y, -0.5 * alpha) : 0.0;
        return ind + std::sqrt(Y) * std::pow(X, -0.5 * alpha)
                         * hard_power_tail_k(alpha, spec.a, X, Y);
    }
    const double ind = (X > Y) ? -std::exp(0.5 * alpha * (X - Y)) : 0.0;
    return ind + std::exp(0.5 * alpha * X)
                     * weighted_left_int(spec.regime, spec.a, alpha, X, Y);
}

double scaled_super_koo(const ScalingSpec& spec, double X, double Xp) {
    spec.validate();
    const double alpha = spec.alpha;
    if (spec.regime == Regime::HardAtOne) {
        const double pt = hard_power_tail_k(alpha, spec.a, Xp, X);
        const double ptd = hard_power_tail_dk(alpha, spec.a, Xp, X);
        return std::pow(X / Xp, 0.5 * alpha)
               * (0.5 * (1.0 - alpha) * std::pow(X, -0.5 * (1.0 + alpha)) * pt
                  + std::pow(X, 0.5 * (1.0 - alpha)) * ptd);
    }
    const double v = weighted_left_int(spec.regime, spec.a, alpha, Xp, X);
    const double vd = weighted_left_int_d(spec.regime, spec.a, alpha, Xp, X);
    return -std::exp(-0.5 * alpha * (X - Xp)) * std::exp(0.5 * alpha * X)
           * (0.5 * alpha * v + vd);
}

SuperBlocks scaled_super_blocks(const ScalingSpec& spec, double X, double Y) {
    SuperBlocks b;
    b.oo = scaled_super_koo(spec, X, X);
    b.oe = scaled_super_koe(spec, X, Y);
    b.eo = scaled_super_keo(spec, Y, X);
    b.ee = scaled_super_kee(spec, Y, Y);
    return b;
}

// ---------------------------------------------------------------------------
// decimation blocks
// ---------------------------------------------------------------------------

namespace {

// int_lower^X e^{alpha (X-t)/2} f(t) dt with the regime's support cutoff
double damped_left(Regime regime, double alpha, double X,
                   const std::function<double(double)>& f) {
    if (regime == Regime::Hard)
        return quad::integrate_finite(
            [&](double t) { return std::exp(0.5 * alpha * (X - t)) * f(t); }, 0.0, X, 64);
    if (alpha == 0.0)
        throw std::invalid_argument("scaled: alpha = 0 must use the regime-specific route");
    if (alpha > 0.0) throw std::invalid_argument("scaled: alpha <= 0 required");
    const double umax = std::min(90.0 / -alpha, 4000.0);
    return quad::integrate_panels([&](double u) { return std::exp(0.5 * alpha * u) * f(X - u); },
                                  0.0, umax, 0.30);
}

// L(Y, t) = int_0^Y u^{-1/2} K_hard(u, t) du and its t-derivative
double hard_sqrt_int(double a, double Y, double t) {
    return 2.0
           * quad::integrate_finite(
                 [&](double w) { return k_scaled(Regime::Hard, a, w * w, t); }, 0.0, std::sqrt(Y),
                 96);
}

double hard_sqrt_int_d(double a, double Y, double t) {
    return 2.0
           * quad::integrate_finite(
                 [&](double w) { return k_scaled_d1(Regime::Hard, a, t, w * w); }, 0.0,
                 std::sqrt(Y), 96);
}

// Damped soft-edge convolutions: the u-integral of e^{alpha u/2} against
// Ai / Ai' is folded into cumulative antiderivative tables so the double
// integrals collapse to one pass over the Airy-tail variable.
struct SoftDamped {
    double alpha, umax, vmin, vmax;
    // W(v) = int_{vmin}^{v} e^{alpha (v-w)/2} F(w) dw, built by the damped
    // recursion so nothing overflows however negative alpha gets
    HermiteTable h_ai, h_aip;

    SoftDamped(double alpha_, double vmin_, double vmax_) : alpha(alpha_) {
        umax = std::min(90.0 / -alpha, 4000.0);
        vmin = vmin_;
        vmax = vmax_;
        build(h_ai, false);
        build(h_aip, true);
    }

    void build(HermiteTable& t, bool deriv) {
        t.lo = vmin;
        t.h = 0.05;
        const std::size_t n = static_cast<std::size_t>((vmax - vmin) / t.h) + 2;
        t.val.resize(n);
        t.der.resize(n);
        auto f = [&](double w) { return deriv ? airy_ai_prime(w) : airy_ai(w); };
        t.val[0] = 0.0;
        const double decay = std::exp(0.5 * alpha * t.h);
        for (std::size_t i = 1; i < n; ++i) {
            const double a = t.lo + (i - 1) * t.h;
            const double inc = quad::integrate_finite(
                [&](double w) { return std::exp(0.5 * alpha * (a + t.h - w)) * f(w); }, a,
                a + t.h, 6);
            t.val[i] = decay * t.val[i - 1] + inc;
        }
        for (std::size_t i = 0; i < n; ++i)
            t.der[i] = 0.5 * alpha * t.val[i] + f(t.lo + i * t.h);
    }

    // int_0^umax e^{alpha u/2} F(base - u) du
    double window(const HermiteTable& t, double base) const {
        const double lo = std::max(vmin, base - umax);
        return t(base) - std::exp(0.5 * alpha * (base - lo)) * t(lo);
    }
};

skewcorr::Block2x2 decim_blocks_p16(const ScalingSpec& spec, double X, double Y) {
    const Regime rg = spec.regime;
    const double a = spec.a, alpha = spec.alpha;
    skewcorr::Block2x2 b;

    // In the hard regime the n -> infinity limit of the kernel tail differs
    // from its resummed value by the edge boundary term J_a(sqrt(arg)), and
    // the finite-n boundary term (A/4) e^{Ax/2} int_0^inf K survives with
    // limit (alpha/4) e^{alpha X/2} (1 - J_a(sqrt Y)).  Validated against
    // finite-n blocks (a = 0 families feed this regime).
    const bool hard = (rg == Regime::Hard);
    auto true_tail = [&](double arg, double lower) {
        double v = tail_int_scaled(rg, a, arg, lower);
        if (hard) v -= bessel_j(a, std::sqrt(arg));
        return v;
    };
    auto true_tail_d = [&](double arg, double lower) {
        double v = tail_int_scaled_d(rg, a, arg, lower);
        if (hard) v -= bessel_j_deriv(a, std::sqrt(arg)) / (2.0 * std::sqrt(arg));
        return v;
    };

    auto f22 = [&](double XX, double YY) {
        double term2, term3;
        if (alpha == 0.0 && rg != Regime::Hard) {
            if (rg == Regime::Bulk) {
                term2 = -k_scaled(Regime::Bulk, 0.0, YY, XX);  // int d2K over (-inf, X]
            } else {
                term2 = -airy_ai(YY)
                        - quad::integrate_panels(
                              [&](double s) { return airy_ai_prime(YY + s) * airy_tail(XX + s); },
                              0.0, std::max(40.0, 40.0 - YY), 0.4);
            }
            term3 = 0.0;
        } else if (rg == Regime::Soft) {
            const double smax = std::max(40.0, 40.0 - std::min(XX, YY));
            SoftDamped sd(alpha, XX - std::min(90.0 / -alpha, 4000.0) - 1.0, XX + smax + 1.0);
            // term2: swap the Airy representation of d1K(YY, t) with the window
            term2 = quad::integrate_panels(
                [&](double sv) { return airy_ai_prime(YY + sv) * sd.window(sd.h_ai, XX + sv); },
                0.0, smax, 0.4);
            // term3: same swap against the tail derivative representation
            term3 = quad::integrate_panels(
                [&](double sv) { return airy_tail(YY + sv) * sd.window(sd.h_aip, XX + sv); },
                0.0, smax, 0.4);
        } else {
            term2 = damped_left(rg, alpha, XX,
                                [&](double t) { return k_scaled_d1(rg, a, YY, t); });
            term3 = damped_left(rg, alpha, XX,
                                [&](double t) { return true_tail_d(t, YY); });
        }
        double v = 0.5 * k_scaled(rg, a, XX, YY) - 0.5 * term2 - 0.25 * alpha * term3;
        if (hard)
            v += 0.25 * alpha * std::exp(0.5 * alpha * XX)
                 * (1.0 - bessel_j(a, std::sqrt(YY)));
        return v;
    };
    b.e22 = f22(X, Y);
    b.e11 = f22(Y, X);

    // f^{12}: quarter of the double (alpha/2 + d) operator on the tail difference
    {
        const double big = true_tail(Y, X) - true_tail(X, Y);
        const double dX = -k_scaled(rg, a, Y, X) - true_tail_d(X, Y);
        const double dY = true_tail_d(Y, X) + k_scaled(rg, a, X, Y);
        const double dXdY = -k_scaled_d1(rg, a, Y, X) + k_scaled_d1(rg, a, X, Y);
        b.e12 = 0.25
                * (0.25 * alpha * alpha * big + 0.5 * alpha * (dX + dY) + dXdY);
    }

    // f^{21}
    {
        const double eps = (X == Y) ? 0.0
                                    : std::exp(0.5 * alpha * std::fabs(X - Y))
                                          * ((X > Y) ? 1.0 : -1.0);
        double ly, lx;
        if (alpha == 0.0 && rg != Regime::Hard) {
            ly = weighted_left_int(rg, a, 0.0, Y, X);
            lx = weighted_left_int(rg, a, 0.0, X, Y);
        } else if (rg == Regime::Soft) {
            const double smax = std::max(40.0, 40.0 - std::min(X, Y));
            const double reach = std::min(90.0 / -alpha, 4000.0);
            SoftDamped sd(alpha, std::min(X, Y) - reach - 1.0,
                          std::max(X, Y) + smax + 1.0);
            ly = quad::integrate_panels(
                [&](double sv) { return airy_ai(X + sv) * sd.window(sd.h_ai, Y + sv); }, 0.0,
                smax, 0.4);
            lx = quad::integrate_panels(
                [&](double sv) { return airy_ai(Y + sv) * sd.window(sd.h_ai, X + sv); }, 0.0,
                smax, 0.4);
        } else {
            ly = damped_left(rg, alpha, Y, [&](double t) { return k_scaled(rg, a, X, t); });
            lx = damped_left(rg, alpha, X, [&](double t) { return k_scaled(rg, a, Y, t); });
        }
        b.e21 = -eps - (ly - lx);
    }
    return b;
}

skewcorr::Block2x2 decim_blocks_p17(const ScalingSpec& spec, double X, double Y) {
    // Scaled limit of the finite blocks under the x = 1 hard-edge maps,
    // organized through the scaled even-even 12-entry
    //   g(X,Y) = (1/4)( sqrt(Y) HS(X;Y) - sqrt(X) HS(Y;X) ),
    //   HS(L;q) = int_0^L u^{-1/2} K_hard(u, q) du,
    // with the operators (alpha/(2Z) - d/dZ) replacing the finite-n ones.
    const double a = spec.a, alpha = spec.alpha;
    const Regime h = Regime::Hard;
    skewcorr::Block2x2 b;

    auto g = [&](double XX, double YY) {
        return 0.25 * (std::sqrt(YY) * hard_sqrt_int(a, XX, YY)
                       - std::sqrt(XX) * hard_sqrt_int(a, YY, XX));
    };
    auto g_dX = [&](double XX, double YY) {
        return 0.25 * (std::sqrt(YY / XX) * k_scaled(h, a, XX, YY)
                       - 0.5 / std::sqrt(XX) * hard_sqrt_int(a, YY, XX)
                       - std::sqrt(XX) * hard_sqrt_int_d(a, YY, XX));
    };
    auto g_dY = [&](double XX, double YY) { return -g_dX(YY, XX); };
    auto g_dXdY = [&](double XX, double YY) {
        return 0.25 * ((0.5 / std::sqrt(YY * XX)) * k_scaled(h, a, XX, YY)
                       + std::sqrt(YY / XX) * k_scaled_d1(h, a, YY, XX)
                       - 0.5 / (std::sqrt(XX) * std::sqrt(YY)) * k_scaled(h, a, XX, YY)
                       - std::sqrt(XX / YY) * k_scaled_d1(h, a, XX, YY));
    };
    auto fee21 = [&](double XX, double YY) {
        const double qX = 0.5 * alpha / XX, qY = 0.5 * alpha / YY;
        return -(qX * qY * g(XX, YY) - qX * g_dY(XX, YY) - qY * g_dX(XX, YY)
                 + g_dXdY(XX, YY));
    };
    auto fee11 = [&](double XX, double YY) {
        return 0.5 * alpha / YY * g(XX, YY) - g_dY(XX, YY);
    };
    // large-T asymptote of the even-even 21 entry: g(T,Y) tends to the
    // constant ginf(Y), so fee21 carries a smooth O(1/T) part that must be
    // integrated analytically before the oscillatory resummation
    auto f22 = [&](double XX, double YY) {
        const double cY = hard_power_tail_k(0.0, a, 0.0, YY);
        const double cYd = hard_power_tail_dk(0.0, a, 0.0, YY);
        const double ginf = 0.25 * std::sqrt(YY) * cY;
        const double ginf_d = 0.125 / std::sqrt(YY) * cY + 0.25 * std::sqrt(YY) * cYd;
        const double smooth_coef = -0.5 * alpha * (0.5 * alpha / YY * ginf - ginf_d);
        const auto integ = [&](double w) {
            const double T = w * w;
            const double smooth = smooth_coef / T;
            return 2.0 * std::pow(w, alpha + 1.0) * (fee21(T, YY) - smooth);
        };
        const double w0 = std::sqrt(XX);
        const double z0 = std::max({w0, std::sqrt(YY) + 5.0, 30.0});
        double tail = quad::integrate_panels(integ, w0, z0, 0.5)
                      + oscillatory_tail(integ, z0, M_PI, 24);
        // int_X^inf T^{alpha/2} smooth_coef/T dT = -(2/alpha) X^{alpha/2} smooth_coef
        tail += -2.0 / alpha * std::pow(XX, 0.5 * alpha) * smooth_coef;
        return fee11(XX, YY) - std::pow(XX, -0.5 * alpha) * tail;
    };

    // at alpha = 0 the far-edge boundary term survives; the orthogonal-limit
    // closed form covers that case exactly
    b.e22 = (alpha == 0.0) ? ir11_hard(a, X, Y) : f22(X, Y);
    b.e11 = (alpha == 0.0) ? ir11_hard(a, Y, X) : f22(Y, X);
    b.e12 = -fee21(X, Y);
    {
        const double sgn = (X > Y) ? 1.0 : ((X < Y) ? -1.0 : 0.0);
        const double eps = (sgn == 0.0) ? 0.0 : std::pow(X / Y, 0.5 * alpha * sgn) * sgn;
        b.e21 = eps - std::sqrt(X) * std::pow(Y, -0.5 * alpha) * hard_power_tail_k(alpha, a, Y, X)
                + std::sqrt(Y) * std::pow(X, -0.5 * alpha) * hard_power_tail_k(alpha, a, X, Y);
    }
    return b;
}

} // namespace

skewcorr::Block2x2 scaled_decim_blocks(const ScalingSpec& spec, double X, double Y) {
    spec.validate();
    if (spec.regime == Regime::HardAtOne) {
        if (spec.alpha > 0.0)
            throw std::runtime_error(
                "scaled_decim_blocks: x=1 hard-edge blocks not convergent here for alpha > 0");
        return decim_blocks_p17(spec, X, Y);
    }
    return decim_blocks_p16(spec, X, Y);
}

// ---------------------------------------------------------------------------
// closed-form reconciliation targets
// ---------------------------------------------------------------------------

double fk11_bulk(double X, double Y) { return k_scaled(Regime::Bulk, 0.0, X, Y); }

double fk11_soft(double X, double Y) {
    return k_scaled(Regime::Soft, 0.0, X, Y) + 0.5 * airy_ai(Y) * (1.0 - airy_tail(X));
}

namespace {
// int_z^inf J_{nu}(u) du allowing integer nu = -1 via reflection
double bessel_tail_signed(double nu, double z) {
    if (nu >= 0.0) return bessel_tail(nu, z);
    if (std::fabs(nu + 1.0) < 1e-12) return -bessel_tail(1.0, z);
    throw std::invalid_argument("bessel_tail_signed: order must be >= 0 or exactly -1");
}
} // namespace

double fk11_hard(double a, double X, double Y) {
    return k_scaled(Regime::Hard, a, X, Y)
           + bessel_j(a + 1.0, std::sqrt(Y)) / (4.0 * std::sqrt(Y))
                 * bessel_tail_signed(a - 1.0, std::sqrt(X));
}

double ir11_bulk(double X, double Y) {
    // (1/2)K - (1/2) dY int_{-inf}^X K(t, Y) dt
    const double dint = -k_scaled(Regime::Bulk, 0.0, X, Y);  // dY of 1/2 + Si/pi
    return 0.5 * k_scaled(Regime::Bulk, 0.0, X, Y) - 0.5 * dint;
}

double ir11_soft(double X, double Y) {
    const double dint = -airy_ai(Y)
                        - quad::integrate_panels(
                              [&](double s) { return airy_ai_prime(Y + s) * airy_tail(X + s); },
                              0.0, std::max(40.0, 40.0 - Y), 0.4);
    return 0.5 * k_scaled(Regime::Soft, 0.0, X, Y) - 0.5 * dint;
}

double ir11_hard(double a, double X, double Y) {
    const double pt = hard_power_tail_k(0.0, a, X, Y);
    const double ptd = hard_power_tail_dk(0.0, a, X, Y);
    return 0.5 * std::sqrt(X / Y) * k_scaled(Regime::Hard, a, X, Y)
           + 0.5 * (0.5 / std::sqrt(Y) * pt + std::sqrt(Y) * ptd);
}

double tf22_hard(double a, double X, double Y) {
    // (1/2) sqrt(Y/X) K + (1/2) int_0^Y u^{-1/2} dX [sqrt(X) K(X,u)] du
    const double integ = 2.0
                         * quad::integrate_finite(
                               [&](double w) {
                                   const double u = w * w;
                                   return 0.5 / std::sqrt(X) * k_scaled(Regime::Hard, a, X, u)
                                          + std::sqrt(X) * k_scaled_d1(Regime::Hard, a, X, u);
                               },
                               0.0, std::sqrt(Y), 96);
    return 0.5 * std::sqrt(Y / X) * k_scaled(Regime::Hard, a, X, Y) - 0.5 * integ;
}

double fnh22_hard(double a, double X, double Y) {
    double jm1;  // J_{a-1}(sqrt X), allowing the integer reflection at a = 0
    if (a >= 1.0)
        jm1 = bessel_j(a - 1.0, std::sqrt(X));
    else if (std::fabs(a) < 1e-12)
        jm1 = -bessel_j(1.0, std::sqrt(X));
    else
        throw std::invalid_argument("fnh22_hard: order a-1 must be >= 0 or exactly -1");
    return k_scaled(Regime::Hard, a, X, Y)
           - jm1 / (4.0 * std::sqrt(X)) * bessel_int0(a + 1.0, std::sqrt(Y));
}

double fnh22_soft(double X, double Y) {
    return k_scaled(Regime::Soft, 0.0, X, Y) - 0.5 * airy_ai(X) * airy_tail(Y);
}

double bessel_kernel_shift(double a, double X, double Y) {
    if (!(X > 0.0) || !(Y > 0.0))
        throw std::invalid_argument("bessel_kernel_shift: X, Y > 0 required");
    return k_scaled(Regime::Hard, a, X, Y)
           - 0.5 / std::sqrt(Y) * bessel_j(a, std::sqrt(X)) * bessel_j(a + 1.0, std::sqrt(Y));
}

} // namespace rmt::scaled
