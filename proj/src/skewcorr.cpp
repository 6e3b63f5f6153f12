#include "rmt/skewcorr.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/linalg.hpp"
#include "rmt/pfaff.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace rmt::skewcorr {

using kernels::KernelSpec;
using specfun::jacobi_all;
using specfun::laguerre_all;

namespace {
void require_decim(const EnsembleSpec& spec) {
    spec.validate();
    if (is_superposition(spec.family))
        throw std::invalid_argument("skewcorr: decimation-type family required");
}
} // namespace

kernels::KernelSpec decim_kernel(const EnsembleSpec& spec) {
    if (is_laguerre(spec.family)) return KernelSpec::laguerre(2 * spec.n, 0.0);
    return KernelSpec::jacobi(2 * spec.n, spec.a, 0.0);
}

// ---------------------------------------------------------------------------
// SkewCoeffs
// ---------------------------------------------------------------------------

SkewCoeffs::SkewCoeffs(const EnsembleSpec& spec) : spec_(spec) {
    require_decim(spec_);
    const int m = basis_size();
    const double A = spec_.A;
    c_.assign(m, std::vector<double>(m, 0.0));
    if (is_laguerre(spec_.family)) {
        for (int k = 0; k < m; ++k) {
            c_[k][k] = 2.0 / (1.0 - A);
            for (int p = k - 1; p >= 0; --p) {
                const double sgn = ((k - p) % 2 == 0) ? 1.0 : -1.0;
                c_[k][p] = sgn * 4.0 / ((1.0 - A) * (1.0 - A))
                           * std::pow((1.0 + A) / (1.0 - A), k - p - 1.0);
            }
        }
        r_.assign(spec_.n, -4.0 / ((1.0 - A) * (1.0 - A)));
    } else {
        const double a = spec_.a;
        for (int k = 0; k < m; ++k) {
            c_[k][k] = 1.0 / (k + 0.5 * (a - A + 1.0));
            const double bk = specfun::gamma_ratio(k + 0.5 * (a + A + 1.0),
                                                   k + 0.5 * (a - A + 3.0));
            for (int p = 0; p < k; ++p) {
                const double ap = specfun::gamma_ratio(p + 0.5 * (a - A + 1.0),
                                                       p + 0.5 * (a + A + 3.0));
                c_[k][p] = (2.0 * p + 1.0 + a) * ap * bk;
            }
        }
        r_.resize(spec_.n);
        for (int l = 0; l < spec_.n; ++l)
            r_[l] = std::pow(2.0, a + 1.0)
                    / ((2.0 * l + 0.5 * (a - A + 3.0)) * (2.0 * l + 0.5 * (a - A + 1.0)));
    }
    // expansion coefficients of R_l in the classical basis
    alpha_.assign(m, std::vector<double>(m, 0.0));
    for (int l = 0; l < m; ++l) {
        alpha_[l][l] = 1.0;
        if (l % 2 == 1) {
            if (is_laguerre(spec_.family)) {
                alpha_[l][l - 1] = -(A + 1.0) / (A - 1.0);
            } else {
                // -b_l / b_{l-1} = -(l-1+(a+A+1)/2)/(l+(a-A+1)/2)
                const double a = spec_.a;
                alpha_[l][l - 1] = -(l - 1.0 + 0.5 * (a + A + 1.0))
                                   / (l + 0.5 * (a - A + 1.0));
            }
        } else if (l > 0) {
            if (is_laguerre(spec_.family)) {
                for (int j = 0; j < l; ++j)
                    alpha_[l][j] = (j % 2 == 0) ? 1.0 : -(A + 1.0) / (A - 1.0);
            } else {
                const double a = spec_.a;
                for (int j = 0; j < l; ++j) {
                    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
                    const double num = j + 0.5 * (a - sgn * A + 1.0);
                    alpha_[l][j] = sgn * num / (l + 0.5 * (a - A + 1.0));
                }
            }
        }
    }
}

double SkewCoeffs::r(int l) const {
    if (l < 0 || l >= spec_.n) throw std::invalid_argument("SkewCoeffs::r: index out of range");
    return r_[l];
}

double SkewCoeffs::c(int k, int p) const {
    if (k < 0 || k >= basis_size() || p < 0 || p > k)
        throw std::invalid_argument("SkewCoeffs::c: index out of range");
    return c_[k][p];
}

double SkewCoeffs::alpha(int l, int j) const {
    if (l < 0 || l >= basis_size() || j < 0 || j > l)
        throw std::invalid_argument("SkewCoeffs::alpha: index out of range");
    return alpha_[l][j];
}

double SkewCoeffs::pair_a(int j) const {
    const double A = spec_.A;
    if (is_laguerre(spec_.family)) {
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        return sgn * std::pow((1.0 - A) / (1.0 + A), j + 1.0);
    }
    const double a = spec_.a;
    return std::pow(2.0, a + 1.0)
           * specfun::gamma_ratio(j + 0.5 * (a - A + 1.0), j + 0.5 * (a + A + 3.0));
}

double SkewCoeffs::pair_b(int k) const {
    const double A = spec_.A;
    if (is_laguerre(spec_.family)) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        return sgn * 4.0 / ((1.0 - A) * (1.0 - A)) * std::pow((1.0 + A) / (1.0 - A), k);
    }
    const double a = spec_.a;
    return specfun::gamma_ratio(k + 0.5 * (a + A + 1.0), k + 0.5 * (a - A + 3.0));
}

double SkewCoeffs::a_tilde(int k) const {
    const double A = spec_.A;
    if (is_laguerre(spec_.family)) return 2.0 / (1.0 - A);
    // h_k c_kk with the (6.4.2) norm
    const double a = spec_.a;
    return std::pow(2.0, a + 1.0) / (2.0 * k + a + 1.0) / (k + 0.5 * (a - A + 1.0));
}

// ---------------------------------------------------------------------------
// basis functions
// ---------------------------------------------------------------------------

double skew_poly(const SkewCoeffs& coeffs, int l, double x) {
    if (l < 0 || l >= coeffs.basis_size())
        throw std::invalid_argument("skew_poly: degree out of range");
    const auto& spec = coeffs.spec();
    if (is_laguerre(spec.family)) {
        const auto lag = laguerre_all(l, 0.0, x);
        double s = 0.0;
        for (int j = 0; j <= l; ++j) s += coeffs.alpha(l, j) * lag[j];
        return s;
    }
    const auto jac = jacobi_all(l, spec.a, 0.0, x);
    double s = 0.0;
    for (int j = 0; j <= l; ++j) s += coeffs.alpha(l, j) * jac[j];
    return s;
}

double phi_e(const SkewCoeffs& coeffs, int l, double x) {
    if (l < 0 || l >= coeffs.basis_size())
        throw std::invalid_argument("phi_e: degree out of range");
    const auto& spec = coeffs.spec();
    const double A = spec.A;
    if (is_laguerre(spec.family)) {
        const auto lag = laguerre_all(l + 1, 0.0, x);
        const double pre = std::exp(-0.5 * x) * 2.0 / (1.0 - A);
        if (l % 2 == 1) {
            const int k = (l - 1) / 2;
            return pre * (lag[2 * k + 1] - lag[2 * k]);
        }
        const int k = l / 2;
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += lag[2 * j];
        for (int j = 1; j <= k; ++j) s -= lag[2 * j - 1];
        return pre * s;
    }
    const double a = spec.a;
    const auto jac = jacobi_all(l + 1, a, 0.0, x);
    const double pre = std::pow(1.0 - x, 0.5 * (a + 1.0));
    if (l % 2 == 1) {
        const int k = (l - 1) / 2;
        return pre * (jac[2 * k + 1] + jac[2 * k]) / (2.0 * k + 0.5 * (a - A + 3.0));
    }
    const int k = l / 2;
    double s = 0.0;
    for (int j = 0; j <= 2 * k; ++j) s += jac[j];
    return pre * s / (2.0 * k + 0.5 * (a - A + 1.0));
}

double wr(const SkewCoeffs& coeffs, int l, double x) {
    return coeffs.spec().weight(x) * skew_poly(coeffs, l, x);
}

double kr(const SkewCoeffs& coeffs, int l, double x) {
    const auto& spec = coeffs.spec();
    const double lo = spec.support_lo();
    return quad::integrate_finite(
        [&](double t) { return spec.weight(t) * spec.kappa(x, t) * skew_poly(coeffs, l, t); },
        lo, x, quad::default_finite_order());
}

double er(const SkewCoeffs& coeffs, int l, double x) {
    return kr(coeffs, l, x) - phi_e(coeffs, l, x);
}

// ---------------------------------------------------------------------------
// even-even block, kernel closed forms
// ---------------------------------------------------------------------------

double fee12(const EnsembleSpec& spec, double y, double yp) {
    require_decim(spec);
    const auto ks = decim_kernel(spec);
    if (is_laguerre(spec.family))
        return 0.25 * (kernels::tail_int(ks, yp, y) - kernels::tail_int(ks, y, yp));
    return 0.25 * ((1.0 - yp) * kernels::tail_int(ks, yp, y)
                   - (1.0 - y) * kernels::tail_int(ks, y, yp));
}

double fee12_dy(const EnsembleSpec& spec, double y, double yp) {
    const auto ks = decim_kernel(spec);
    if (is_laguerre(spec.family))
        return -0.25 * (kernels::kernel_eval(ks, yp, y) + kernels::tail_int_d(ks, y, yp));
    return 0.25 * (-(1.0 - yp) * kernels::kernel_eval(ks, yp, y)
                   + kernels::tail_int(ks, y, yp)
                   - (1.0 - y) * kernels::tail_int_d(ks, y, yp));
}

double fee12_dyp(const EnsembleSpec& spec, double y, double yp) {
    return -fee12_dy(spec, yp, y);
}

double fee12_dydyp(const EnsembleSpec& spec, double y, double yp) {
    const auto ks = decim_kernel(spec);
    if (is_laguerre(spec.family))
        return 0.25 * (kernels::kernel_deriv1(ks, y, yp) - kernels::kernel_deriv1(ks, yp, y));
    return 0.25 * ((1.0 - y) * kernels::kernel_deriv1(ks, y, yp)
                   - (1.0 - yp) * kernels::kernel_deriv1(ks, yp, y));
}

namespace {
double ee_q(const EnsembleSpec& spec, double z) {
    return is_laguerre(spec.family) ? 0.5 * spec.A : 0.5 * spec.A / (1.0 - z);
}
} // namespace

Block2x2 f_ee(const EnsembleSpec& spec, double y, double yp) {
    require_decim(spec);
    Block2x2 b;
    const double f12 = fee12(spec, y, yp);
    const double dy = fee12_dy(spec, y, yp);
    const double dyp = fee12_dyp(spec, y, yp);
    const double dydyp = fee12_dydyp(spec, y, yp);
    const double qy = ee_q(spec, y), qyp = ee_q(spec, yp);
    b.e12 = f12;
    b.e11 = qyp * f12 + dyp;
    // e22(y,y') = e11(y',y) = (q(y) + d_y) f12(y',y) = -(q(y) f12 + d_y f12)(antisym)
    b.e22 = qy * (-f12) + (-dy);
    b.e21 = -(qy * qyp * f12 + qy * dyp + qyp * dy + dydyp);
    return b;
}

// ---------------------------------------------------------------------------
// parity-blind block, kernel closed forms
// ---------------------------------------------------------------------------

namespace {

// int_lo^x g_A(x,t) K(t,y) dt with the family pairing factor
double lower_int_k(const EnsembleSpec& spec, const KernelSpec& ks, double x, double y) {
    const int m = quad::default_finite_order();
    if (is_laguerre(spec.family))
        return quad::integrate_finite(
            [&](double t) {
                return std::exp(0.5 * spec.A * (x - t)) * kernels::kernel_eval(ks, t, y);
            },
            0.0, x, m);
    return quad::integrate_finite(
        [&](double t) {
            return std::pow((1.0 - t) / (1.0 - x), 0.5 * spec.A) * kernels::kernel_eval(ks, t, y);
        },
        -1.0, x, m);
}

// same weight against the y-derivative of the kernel (second argument)
double lower_int_dk(const EnsembleSpec& spec, const KernelSpec& ks, double x, double y) {
    const int m = quad::default_finite_order();
    if (is_laguerre(spec.family))
        return quad::integrate_finite(
            [&](double t) {
                return std::exp(0.5 * spec.A * (x - t)) * kernels::kernel_deriv1(ks, y, t);
            },
            0.0, x, m);
    return quad::integrate_finite(
        [&](double t) {
            return std::pow((1.0 - t) / (1.0 - x), 0.5 * spec.A)
                   * kernels::kernel_deriv1(ks, y, t);
        },
        -1.0, x, m);
}

// int_lo^x g_A(x,t) * (tail-derivative piece) dt
double lower_int_tail(const EnsembleSpec& spec, const KernelSpec& ks, double x, double y) {
    const int m = quad::default_finite_order();
    if (is_laguerre(spec.family))
        return quad::integrate_finite(
            [&](double t) {
                return std::exp(0.5 * spec.A * (x - t)) * kernels::tail_int_d(ks, t, y);
            },
            0.0, x, m);
    return quad::integrate_finite(
        [&](double t) {
            return std::pow((1.0 - t) / (1.0 - x), 0.5 * spec.A)
                   * (kernels::tail_int(ks, t, y) - (1.0 - t) * kernels::tail_int_d(ks, t, y));
        },
        -1.0, x, m);
}

} // namespace

double blind22(const EnsembleSpec& spec, double x, double y) {
    const auto ks = decim_kernel(spec);
    const double A = spec.A;
    if (is_laguerre(spec.family)) {
        return 0.5 * kernels::kernel_eval(ks, x, y) - 0.5 * lower_int_dk(spec, ks, x, y)
               - 0.25 * A * lower_int_tail(spec, ks, x, y)
               + 0.25 * A * std::exp(0.5 * A * x) * kernels::tail_int(ks, y, 0.0);
    }
    // composition through the validated even-even entries: the blocks obey
    // f^{22}(x,y) = f_ee^{11}(x,y) - int_lo^x kappa(x,t) f_ee^{21}(t,y) dt
    const double integ = quad::integrate_finite(
        [&](double t) { return spec.kappa(x, t) * f_ee(spec, t, y).e21; }, -1.0, x,
        quad::default_finite_order());
    return f_ee(spec, x, y).e11 - integ;
}

Block2x2 f_blind(const EnsembleSpec& spec, double x, double y) {
    require_decim(spec);
    const auto ks = decim_kernel(spec);
    Block2x2 b;
    b.e22 = blind22(spec, x, y);
    b.e11 = blind22(spec, y, x);
    // f^{12} = -f_ee^{21}
    {
        const double f12 = fee12(spec, x, y);
        const double dx = fee12_dy(spec, x, y);
        const double dy = fee12_dyp(spec, x, y);
        const double dd = fee12_dydyp(spec, x, y);
        const double qx = ee_q(spec, x), qy = ee_q(spec, y);
        b.e12 = qx * qy * f12 + qx * dy + qy * dx + dd;
    }
    // f^{21} = -eps(x,y) - { int_lo^y kappa-weighted K(x,.) - int_lo^x kappa-weighted K(y,.) }
    if (is_laguerre(spec.family)) {
        b.e21 = -spec.epsilon(x, y)
                - (lower_int_k(spec, ks, y, x) - lower_int_k(spec, ks, x, y));
    } else {
        b.e21 = -spec.epsilon(x, y)
                - ((1.0 - x) * lower_int_k(spec, ks, y, x)
                   - (1.0 - y) * lower_int_k(spec, ks, x, y));
    }
    return b;
}

// ---------------------------------------------------------------------------
// odd-even / even-odd / odd-odd blocks
// ---------------------------------------------------------------------------

double kappa_f22_int(const EnsembleSpec& spec, double x, double y) {
    require_decim(spec);
    const auto ks = decim_kernel(spec);
    if (is_laguerre(spec.family)) {
        return 0.5 * lower_int_k(spec, ks, x, y) + 0.5 * lower_int_tail(spec, ks, x, y)
               + 0.5 * std::exp(0.5 * spec.A * x) * kernels::tail_int(ks, 0.0, y);
    }
    // same composition route as blind22: S(x,y) = int kappa(x,t) f_ee^{22}(t,y) dt
    // - f_ee^{12}(x,y)
    const double integ = quad::integrate_finite(
        [&](double t) { return spec.kappa(x, t) * f_ee(spec, t, y).e22; }, -1.0, x,
        quad::default_finite_order());
    return integ - fee12(spec, x, y);
}

Block2x2 f_oe(const EnsembleSpec& spec, double x, double y) {
    require_decim(spec);
    Block2x2 b;
    const Block2x2 ee_xy = f_ee(spec, x, y);
    b.e11 = ee_xy.e21;
    b.e12 = f_ee(spec, y, x).e11;
    b.e21 = -blind22(spec, x, y) + ee_xy.e11;
    b.e22 = -spec.kappa(x, y) + kappa_f22_int(spec, x, y) + ee_xy.e12;
    return b;
}

Block2x2 f_eo(const EnsembleSpec& spec, double y, double x) {
    const Block2x2 oe = f_oe(spec, x, y);
    Block2x2 b;
    b.e11 = oe.e22;
    b.e12 = -oe.e12;
    b.e21 = -oe.e21;
    b.e22 = oe.e11;
    return b;
}

Block2x2 f_oo(const EnsembleSpec& spec, double x, double xp) {
    require_decim(spec);
    Block2x2 b;
    const Block2x2 blind_xxp = f_blind(spec, x, xp);
    b.e11 = blind22(spec, xp, x) - f_ee(spec, xp, x).e11;
    b.e22 = blind22(spec, x, xp) - f_ee(spec, x, xp).e11;
    b.e12 = blind_xxp.e12;
    b.e21 = blind_xxp.e21 + spec.epsilon(x, xp) - kappa_f22_int(spec, x, xp)
            + kappa_f22_int(spec, xp, x) - fee12(spec, x, xp);
    return b;
}

// ---------------------------------------------------------------------------
// defining-sum oracle path
// ---------------------------------------------------------------------------

namespace {

using BasisFn = double (*)(const SkewCoeffs&, int, double);

double pair_sum(const SkewCoeffs& coeffs, BasisFn fa, BasisFn fb, double x, double y) {
    double s = 0.0;
    for (int l = 0; l < coeffs.spec().n; ++l)
        s += (fa(coeffs, 2 * l, x) * fb(coeffs, 2 * l + 1, y)
              - fa(coeffs, 2 * l + 1, x) * fb(coeffs, 2 * l, y))
             / coeffs.r(l);
    return s;
}

} // namespace

Block2x2 f_ee_sum(const SkewCoeffs& coeffs, double y, double yp) {
    Block2x2 b;
    b.e11 = -pair_sum(coeffs, &phi_e, &wr, y, yp);
    b.e12 = pair_sum(coeffs, &phi_e, &phi_e, y, yp);
    b.e21 = -pair_sum(coeffs, &wr, &wr, y, yp);
    b.e22 = pair_sum(coeffs, &wr, &phi_e, y, yp);
    return b;
}

Block2x2 f_blind_sum(const SkewCoeffs& coeffs, double x, double y) {
    Block2x2 b;
    b.e11 = -pair_sum(coeffs, &wr, &er, x, y);
    b.e12 = pair_sum(coeffs, &wr, &wr, x, y);
    b.e21 = -coeffs.spec().epsilon(x, y) - pair_sum(coeffs, &er, &er, x, y);
    b.e22 = pair_sum(coeffs, &er, &wr, x, y);
    return b;
}

Block2x2 f_oe_sum(const SkewCoeffs& coeffs, double x, double y) {
    Block2x2 b;
    b.e11 = -pair_sum(coeffs, &wr, &wr, x, y);
    b.e12 = pair_sum(coeffs, &wr, &phi_e, x, y);
    b.e21 = -pair_sum(coeffs, &kr, &wr, x, y);
    b.e22 = -coeffs.spec().kappa(x, y) + pair_sum(coeffs, &kr, &phi_e, x, y);
    return b;
}

Block2x2 f_oo_sum(const SkewCoeffs& coeffs, double x, double xp) {
    Block2x2 b;
    b.e11 = -pair_sum(coeffs, &wr, &kr, x, xp);
    b.e12 = pair_sum(coeffs, &wr, &wr, x, xp);
    b.e21 = -pair_sum(coeffs, &kr, &kr, x, xp);
    b.e22 = pair_sum(coeffs, &kr, &wr, x, xp);
    return b;
}

// ---------------------------------------------------------------------------
// correlations
// ---------------------------------------------------------------------------

namespace {

void put_block(Matrix& m, std::size_t i, std::size_t j, const Block2x2& b) {
    m(2 * i, 2 * j) = b.e11;
    m(2 * i, 2 * j + 1) = b.e12;
    m(2 * i + 1, 2 * j) = b.e21;
    m(2 * i + 1, 2 * j + 1) = b.e22;
}

} // namespace

double rho_decim(const EnsembleSpec& spec, const std::vector<double>& odd_pts,
                 const std::vector<double>& even_pts) {
    require_decim(spec);
    const std::size_t k1 = odd_pts.size(), k2 = even_pts.size();
    if (k1 + k2 == 0) return 1.0;
    Matrix m(2 * (k1 + k2), 2 * (k1 + k2));
    for (std::size_t i = 0; i < k1; ++i) {
        for (std::size_t j = 0; j < k1; ++j)
            put_block(m, i, j, f_oo(spec, odd_pts[i], odd_pts[j]));
        for (std::size_t j = 0; j < k2; ++j)
            put_block(m, i, k1 + j, f_oe(spec, odd_pts[i], even_pts[j]));
    }
    for (std::size_t i = 0; i < k2; ++i) {
        for (std::size_t j = 0; j < k1; ++j)
            put_block(m, k1 + i, j, f_eo(spec, even_pts[i], odd_pts[j]));
        for (std::size_t j = 0; j < k2; ++j)
            put_block(m, k1 + i, k1 + j, f_ee(spec, even_pts[i], even_pts[j]));
    }
    return pfaff::qdet(m);
}

double rho_blind(const EnsembleSpec& spec, const std::vector<double>& pts) {
    require_decim(spec);
    const std::size_t k = pts.size();
    if (k == 0) return 1.0;
    Matrix m(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) put_block(m, i, j, f_blind(spec, pts[i], pts[j]));
    return pfaff::qdet(m);
}

} // namespace rmt::skewcorr
