#include "rmt/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt::specfun {

namespace {

void check_laguerre(double a) {
    if (!(a > -1.0)) throw std::invalid_argument("laguerre: parameter a > -1 required");
}

void check_jacobi(double a, double b) {
    if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("jacobi: parameters a, b > -1 required");
}

} // namespace

double gamma_ratio(double p, double q) {
    return std::exp(std::lgamma(p) - std::lgamma(q));
}

std::vector<double> laguerre_all(int nmax, double a, double x) {
    check_laguerre(a);
    if (nmax < 0) throw std::invalid_argument("laguerre: degree >= 0 required");
    std::vector<double> v(nmax + 1);
    v[0] = 1.0;
    if (nmax == 0) return v;
    v[1] = 1.0 + a - x;
    for (int k = 1; k < nmax; ++k)
        v[k + 1] = ((2.0 * k + 1.0 + a - x) * v[k] - (k + a) * v[k - 1]) / (k + 1.0);
    return v;
}

double laguerre(int n, double a, double x) {
    check_laguerre(a);
    if (n < 0) throw std::invalid_argument("laguerre: degree >= 0 required");
    double pm = 1.0;
    if (n == 0) return pm;
    double p = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double pn = ((2.0 * k + 1.0 + a - x) * p - (k + a) * pm) / (k + 1.0);
        pm = p;
        p = pn;
    }
    return p;
}

double laguerre_deriv(int n, double a, double x) {
    if (n == 0) return 0.0;
    return -laguerre(n - 1, a + 1.0, x);
}

std::vector<double> jacobi_all(int nmax, double a, double b, double x) {
    check_jacobi(a, b);
    if (nmax < 0) throw std::invalid_argument("jacobi: degree >= 0 required");
    std::vector<double> v(nmax + 1);
    v[0] = 1.0;
    if (nmax == 0) return v;
    v[1] = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for (int k = 1; k < nmax; ++k) {
        const double c = 2.0 * k + a + b;
        const double a1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * c;
        const double a2 = (c + 1.0) * (a * a - b * b);
        const double a3 = c * (c + 1.0) * (c + 2.0);
        const double a4 = 2.0 * (k + a) * (k + b) * (c + 2.0);
        v[k + 1] = ((a2 + a3 * x) * v[k] - a4 * v[k - 1]) / a1;
    }
    return v;
}

double jacobi(int n, double a, double b, double x) {
    return jacobi_all(n, a, b, x)[n];
}

double jacobi_deriv(int n, double a, double b, double x) {
    if (n == 0) return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

double laguerre_norm(int n, double a) {
    check_laguerre(a);
    return gamma_ratio(a + n + 1.0, n + 1.0);
}

double jacobi_norm(int n, double a, double b) {
    check_jacobi(a, b);
    const double lg = std::lgamma(a + 1.0 + n) + std::lgamma(b + 1.0 + n)
                    - std::lgamma(n + 1.0) - std::lgamma(a + b + 1.0 + n);
    return std::exp((a + b + 1.0) * std::log(2.0) + lg) / (a + b + 1.0 + 2.0 * n);
}

// ---------------------------------------------------------------------------
// Bessel J
// ---------------------------------------------------------------------------

namespace {

constexpr double kBesselSwitch = 18.0;

// Direct power series, long double accumulation.  Good to ~1e-14 absolute
// for x <= kBesselSwitch and modest order.
long double bessel_series(long double nu, long double x) {
    const long double q = 0.25L * x * x;
    long double term = std::exp(nu * std::log(0.5L * x) - std::lgamma(nu + 1.0L));
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) < 1e-22L * (std::fabs(sum) + 1e-30L)) break;
    }
    return sum;
}

// Hankel asymptotic expansion, valid for x >= kBesselSwitch and small order.
long double bessel_asymptotic(long double nu, long double x) {
    const long double mu = 4.0L * nu * nu;
    long double p = 1.0L, q = 0.0L;
    long double term = 1.0L;
    long double prev = 1e300L;
    for (int k = 1; k < 60; ++k) {
        const long double f = (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * x * k);
        term *= f;
        if (std::fabs(term) > prev) break; // divergence onset
        prev = std::fabs(term);
        if (k % 2 == 1)
            q += (k % 4 == 1 ? term : -term);
        else
            p += (k % 4 == 2 ? -term : term);
        if (std::fabs(term) < 1e-22L) break;
    }
    const long double omega = x - (0.5L * nu + 0.25L) * M_PIl;
    return std::sqrt(2.0L / (M_PIl * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

// Base evaluation for order in [0, 2).
double bessel_base(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x < kBesselSwitch) return static_cast<double>(bessel_series(nu, x));
    return static_cast<double>(bessel_asymptotic(nu, x));
}

} // namespace

std::vector<double> bessel_j_seq(double nu, int count, double x) {
    if (!(nu >= 0.0) || !(x >= 0.0)) throw std::invalid_argument("bessel_j: nu >= 0 and x >= 0 required");
    if (count < 1) throw std::invalid_argument("bessel_j_seq: count >= 1 required");
    std::vector<double> out(count);
    if (x == 0.0) {
        for (int i = 0; i < count; ++i) out[i] = (nu + i == 0.0) ? 1.0 : 0.0;
        return out;
    }
    out[0] = bessel_j(nu, x);
    if (count == 1) return out;
    out[1] = bessel_j(nu + 1.0, x);
    // upward recurrence is stable while the order stays below the argument
    int k = 2;
    for (; k < count && nu + k < x - 1.0; ++k)
        out[k] = (2.0 * (nu + k - 1.0) / x) * out[k - 1] - out[k - 2];
    if (k >= count) return out;
    // remaining high orders by downward (Miller) recurrence
    const int extra = 24 + static_cast<int>(0.5 * x);
    const int top = count - 1 + extra;
    std::vector<double> tmp(top + 2);
    tmp[top + 1] = 0.0;
    tmp[top] = 1e-280;
    for (int i = top; i >= 1; --i) {
        tmp[i - 1] = (2.0 * (nu + i) / x) * tmp[i] - tmp[i + 1];
        if (std::fabs(tmp[i - 1]) > 1e260) {  // rescale to dodge overflow
            for (int j = i - 1; j <= top + 1; ++j) tmp[j] *= 1e-260;
        }
    }
    int ref = 0;
    for (int i = 1; i < k; ++i)
        if (std::fabs(tmp[i]) > std::fabs(tmp[ref])) ref = i;
    const double scale = (tmp[ref] != 0.0) ? out[ref] / tmp[ref] : 0.0;
    for (int i = k; i < count; ++i) out[i] = tmp[i] * scale;
    return out;
}

double bessel_j(double nu, double x) {
    if (!(nu >= 0.0) || !(x >= 0.0)) throw std::invalid_argument("bessel_j: nu >= 0 and x >= 0 required");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (nu < 2.0) return bessel_base(nu, x);
    if (nu + 2.0 < x) {
        // upward recurrence from fractional base
        const double base = nu - std::floor(nu);
        double j0 = bessel_base(base, x);
        double j1 = bessel_base(base + 1.0, x);
        double order = base + 1.0;
        while (order < nu - 0.5) {
            const double j2 = (2.0 * order / x) * j1 - j0;
            j0 = j1;
            j1 = j2;
            order += 1.0;
        }
        return j1;
    }
    // order comparable to or above argument: Miller from above
    const double base = nu - std::floor(nu);
    const int count = static_cast<int>(std::floor(nu - base)) + 1;
    const int extra = 24 + static_cast<int>(0.5 * x);
    const int top = count - 1 + extra;
    std::vector<double> tmp(top + 2);
    tmp[top + 1] = 0.0;
    tmp[top] = 1e-280;
    for (int i = top; i >= 1; --i)
        tmp[i - 1] = (2.0 * (base + i) / x) * tmp[i] - tmp[i + 1];
    const double j0 = bessel_base(base, x);
    const double j1 = bessel_base(base + 1.0, x);
    double scale;
    if (std::fabs(tmp[0]) >= std::fabs(tmp[1]) && j0 != 0.0)
        scale = j0 / tmp[0];
    else
        scale = j1 / tmp[1];
    return tmp[count - 1] * scale;
}

double bessel_j_deriv(double nu, double x) {
    if (x == 0.0) {
        if (nu == 1.0) return 0.5;
        return 0.0; // J_0'(0) = 0 and J_nu'(0) = 0 for nu > 1
    }
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

// ---------------------------------------------------------------------------
// Airy Ai
// ---------------------------------------------------------------------------

namespace {

constexpr double kAirySwitch = 8.0;
const long double kAiryC1 = 0.35502805388781723926L;  // Ai(0)
const long double kAiryC2 = 0.25881940379280679841L;  // -Ai'(0)

void airy_series(long double x, long double& ai, long double& aip) {
    // Ai = c1 f - c2 g with f'' = x f, g'' = x g, f(0)=1, g(0)=0, g'(0)=1.
    const long double x2 = x * x;
    const long double x3 = x2 * x;
    long double f = 1.0L, fp = 0.0L;
    long double g = x, gp = 1.0L;
    long double tf = 1.0L, tg = x;
    for (int k = 0; k < 200; ++k) {
        const long double d1 = (3.0L * k + 2.0L) * (3.0L * k + 3.0L);
        const long double d2 = (3.0L * k + 3.0L) * (3.0L * k + 4.0L);
        fp += tf * x2 * (3.0L * k + 3.0L) / d1;  // d/dx x^{3k+3} = (3k+3) x^{3k+2}
        gp += tg * x2 * (3.0L * k + 4.0L) / d2;  // d/dx x^{3k+4} = (3k+4) x^{3k+3}
        tf *= x3 / d1;
        tg *= x3 / d2;
        f += tf;
        g += tg;
        if (std::fabs(tf) + std::fabs(tg) < 1e-24L * (std::fabs(f) + std::fabs(g) + 1.0L)) break;
    }
    ai = kAiryC1 * f - kAiryC2 * g;
    aip = kAiryC1 * fp - kAiryC2 * gp;
}

void airy_asymptotic_pos(long double x, long double& ai, long double& aip) {
    const long double zeta = (2.0L / 3.0L) * std::pow(x, 1.5L);
    long double u = 1.0L, su = 1.0L, sv = 1.0L;
    long double sign = -1.0L;
    long double prev = 1e300L;
    for (int k = 0; k < 80; ++k) {
        const long double unext = u * (6.0L * k + 1.0L) * (6.0L * k + 5.0L) / (72.0L * (k + 1.0L));
        const long double term = unext / std::pow(zeta, static_cast<long double>(k + 1));
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        su += sign * term;
        // v_k = u_k (6k+1)/(1-6k): d/dx series coefficients
        const long double vnext = unext * (6.0L * (k + 1.0L) + 1.0L) / (1.0L - 6.0L * (k + 1.0L));
        sv += sign * vnext / std::pow(zeta, static_cast<long double>(k + 1));
        u = unext;
        sign = -sign;
        if (std::fabs(term) < 1e-24L) break;
    }
    const long double pre = std::exp(-zeta) / (2.0L * std::sqrt(M_PIl) * std::pow(x, 0.25L));
    ai = pre * su;
    aip = -std::exp(-zeta) * std::pow(x, 0.25L) / (2.0L * std::sqrt(M_PIl)) * sv;
}

void airy_asymptotic_neg(long double xm, long double& ai, long double& aip) {
    // x = -xm, xm > 0
    const long double zeta = (2.0L / 3.0L) * std::pow(xm, 1.5L);
    long double u = 1.0L;
    std::vector<long double> us(40);
    us[0] = 1.0L;
    for (int k = 1; k < 40; ++k) {
        u = u * (6.0L * (k - 1.0L) + 1.0L) * (6.0L * (k - 1.0L) + 5.0L) / (72.0L * k);
        us[k] = u;
    }
    long double ce = 0.0L, se = 0.0L, cv = 0.0L, sv = 0.0L;
    long double prev = 1e300L;
    for (int k = 0; k < 20; ++k) {
        const long double t1 = us[2 * k] / std::pow(zeta, static_cast<long double>(2 * k));
        if (std::fabs(t1) > prev) break;
        prev = std::fabs(t1);
        const long double t2 = us[2 * k + 1] / std::pow(zeta, static_cast<long double>(2 * k + 1));
        const long double s1 = (k % 2 == 0) ? 1.0L : -1.0L;
        ce += s1 * t1;
        se += s1 * t2;
        const long double v1 = t1 * (6.0L * (2 * k) + 1.0L) / (1.0L - 6.0L * (2 * k));
        const long double v2 = t2 * (6.0L * (2 * k + 1) + 1.0L) / (1.0L - 6.0L * (2 * k + 1));
        cv += s1 * v1;
        sv += s1 * v2;
    }
    const long double arg = zeta + 0.25L * M_PIl;
    const long double pre = 1.0L / (std::sqrt(M_PIl) * std::pow(xm, 0.25L));
    ai = pre * (std::sin(arg) * ce - std::cos(arg) * se);
    aip = -std::pow(xm, 0.25L) / std::sqrt(M_PIl) * (std::cos(arg) * cv + std::sin(arg) * sv);
}

} // namespace

double airy_ai(double x) {
    long double ai, aip;
    if (std::fabs(x) <= kAirySwitch)
        airy_series(x, ai, aip);
    else if (x > 0)
        airy_asymptotic_pos(x, ai, aip);
    else
        airy_asymptotic_neg(-static_cast<long double>(x), ai, aip);
    return static_cast<double>(ai);
}

double airy_ai_prime(double x) {
    long double ai, aip;
    if (std::fabs(x) <= kAirySwitch)
        airy_series(x, ai, aip);
    else if (x > 0)
        airy_asymptotic_pos(x, ai, aip);
    else
        airy_asymptotic_neg(-static_cast<long double>(x), ai, aip);
    return static_cast<double>(aip);
}

} // namespace rmt::specfun
