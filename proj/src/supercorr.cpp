#include "rmt/supercorr.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/linalg.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace rmt::supercorr {

using kernels::KernelSpec;

kernels::KernelSpec base_kernel(const EnsembleSpec& spec) {
    if (is_laguerre(spec.family)) return KernelSpec::laguerre(spec.n, 0.0);
    return KernelSpec::jacobi(spec.n, spec.a, 0.0);
}

BiorthoBasis::BiorthoBasis(const EnsembleSpec& s, int max_deg) : spec(s), max_degree(max_deg) {
    spec.validate();
    if (!is_superposition(spec.family))
        throw std::invalid_argument("BiorthoBasis: superposition-type family required");
    if (max_deg < 0) throw std::invalid_argument("BiorthoBasis: max_degree >= 0 required");
    norms.resize(max_deg + 1);
    const double A = spec.A;
    for (int p = 0; p <= max_deg; ++p) {
        if (is_laguerre(spec.family)) {
            norms[p] = 2.0 / (1.0 - A);
        } else {
            const double a = spec.a;
            norms[p] = std::pow(2.0, a + 1.0)
                       / ((a + 1.0 + 2.0 * p) * (p + 0.5 * (a - A + 1.0)));
        }
    }
}

double biortho_p(const BiorthoBasis& basis, int j, double x) {
    if (j < 0 || j > basis.max_degree) throw std::invalid_argument("biortho_p: degree out of range");
    if (is_laguerre(basis.spec.family)) return specfun::laguerre(j, 0.0, x);
    return specfun::jacobi(j, basis.spec.a, 0.0, x);
}

double biortho_q(const BiorthoBasis& basis, int j, double x) {
    if (j < 0 || j > basis.max_degree) throw std::invalid_argument("biortho_q: degree out of range");
    const double A = basis.spec.A;
    if (is_laguerre(basis.spec.family)) {
        // Q_j = L_j + (2/(A-1)) L_j'
        return specfun::laguerre(j, 0.0, x)
               + (2.0 / (A - 1.0)) * specfun::laguerre_deriv(j, 0.0, x);
    }
    const double a = basis.spec.a;
    const double gamma = 0.5 * (a - A + 1.0);
    // Q_j = (gamma P_j - (1-x) P_j') / (j + gamma)
    return (gamma * specfun::jacobi(j, a, 0.0, x)
            - (1.0 - x) * specfun::jacobi_deriv(j, a, 0.0, x))
           / (j + gamma);
}

namespace {

void require_super(const EnsembleSpec& spec) {
    spec.validate();
    if (!is_superposition(spec.family))
        throw std::invalid_argument("supercorr: superposition-type family required");
}

// int_{lo}^{upper} of the pairing weight against the kernel (or its first-
// argument derivative); the weight is kept in ratio form relative to the
// reference point so large |A| cannot overflow
double inner_int_ref(const EnsembleSpec& spec, const KernelSpec& ks, double x, double upper,
                     double ref, bool deriv) {
    const int m = quad::default_finite_order();
    const double lo = spec.support_lo();
    if (is_laguerre(spec.family))
        return quad::integrate_finite(
            [&](double u) {
                const double w = std::exp(0.5 * spec.A * (ref - u));
                return w * (deriv ? kernels::kernel_deriv1(ks, x, u)
                                  : kernels::kernel_eval(ks, x, u));
            },
            lo, upper, m);
    return quad::integrate_finite(
        [&](double u) {
            const double w = std::pow((1.0 - u) / (1.0 - ref), 0.5 * spec.A);
            return w * (deriv ? kernels::kernel_deriv1(ks, x, u)
                              : kernels::kernel_eval(ks, x, u));
        },
        lo, upper, m);
}

} // namespace

double super_kee(const EnsembleSpec& spec, double y, double yp) {
    require_super(spec);
    const auto ks = base_kernel(spec);
    const double k = kernels::kernel_eval(ks, y, yp);
    if (is_laguerre(spec.family)) return k;
    return (1.0 - y) * k;
}

double super_koe(const EnsembleSpec& spec, double x, double y) {
    require_super(spec);
    const auto ks = base_kernel(spec);
    const double A = spec.A;
    if (is_laguerre(spec.family))
        return -(0.5 * A * kernels::kernel_eval(ks, x, y) + kernels::kernel_deriv1(ks, x, y));
    // -(1-x)^{A/2} d/dx { (1-x)^{1-A/2} K } expanded
    const double k = kernels::kernel_eval(ks, x, y);
    const double kx = kernels::kernel_deriv1(ks, x, y);
    return (1.0 - 0.5 * A) * k - (1.0 - x) * kx;
}

double super_keo(const EnsembleSpec& spec, double y, double x) {
    require_super(spec);
    const auto ks = base_kernel(spec);
    const double A = spec.A;
    if (is_laguerre(spec.family)) {
        const double ind = (x > y) ? -std::exp(0.5 * A * (x - y)) : 0.0;
        return ind + inner_int_ref(spec, ks, y, x, x, false);
    }
    const double ind = (x > y) ? -std::pow((1.0 - x) / (1.0 - y), -0.5 * A) : 0.0;
    return ind + (1.0 - y) * inner_int_ref(spec, ks, y, x, x, false);
}

double super_koo(const EnsembleSpec& spec, double x, double xp) {
    require_super(spec);
    const auto ks = base_kernel(spec);
    const double A = spec.A;
    // the expanded derivative of the pairing-weighted kernel integral, with
    // every weight expressed relative to x'
    const double v = inner_int_ref(spec, ks, x, xp, xp, false);
    const double dv = inner_int_ref(spec, ks, x, xp, xp, true);
    if (is_laguerre(spec.family)) return -(0.5 * A * v + dv);
    return (1.0 - 0.5 * A) * v - (1.0 - x) * dv;
}

SuperBlocks super_blocks(const EnsembleSpec& spec, double x, double y) {
    SuperBlocks b;
    b.oo = super_koo(spec, x, x);
    b.oe = super_koe(spec, x, y);
    b.eo = super_keo(spec, y, x);
    b.ee = super_kee(spec, y, y);
    return b;
}

double rho_super(const EnsembleSpec& spec, const std::vector<double>& odd_pts,
                 const std::vector<double>& even_pts) {
    require_super(spec);
    const std::size_t k1 = odd_pts.size(), k2 = even_pts.size();
    if (k1 + k2 == 0) return 1.0;
    Matrix m(k1 + k2, k1 + k2);
    for (std::size_t i = 0; i < k1; ++i) {
        for (std::size_t j = 0; j < k1; ++j) m(i, j) = super_koo(spec, odd_pts[i], odd_pts[j]);
        for (std::size_t j = 0; j < k2; ++j)
            m(i, k1 + j) = super_koe(spec, odd_pts[i], even_pts[j]);
    }
    for (std::size_t i = 0; i < k2; ++i) {
        for (std::size_t j = 0; j < k1; ++j)
            m(k1 + i, j) = super_keo(spec, even_pts[i], odd_pts[j]);
        for (std::size_t j = 0; j < k2; ++j)
            m(k1 + i, k1 + j) = super_kee(spec, even_pts[i], even_pts[j]);
    }
    return det(m);
}

} // namespace rmt::supercorr
