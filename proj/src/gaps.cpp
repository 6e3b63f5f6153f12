#include "rmt/gaps.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/quad.hpp"

namespace rmt::gaps {

double fredholm_det(const std::function<double(double, double)>& kernel, double lo, double hi,
                    int m, double xi) {
    const Matrix g = quad::nystrom(kernel, lo, hi, m);
    Matrix a = Matrix::identity(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) -= xi * g(i, j);
    return det(a);
}

double fredholm_qdet(const std::function<void(double, double, double*)>& kernel2x2, double lo,
                     double hi, int m, double xi) {
    const auto rule = quad::gauss_legendre(m);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::vector<double> x(m), sw(m);
    for (int i = 0; i < m; ++i) {
        x[i] = mid + half * rule.nodes[i];
        sw[i] = std::sqrt(half * rule.weights[i]);
    }
    auto assemble = [&](double z) {
        Matrix a = Matrix::identity(2 * m);
        double block[4];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                kernel2x2(x[i], x[j], block);
                const double w = sw[i] * sw[j];
                a(2 * i, 2 * j) -= z * w * block[0];
                a(2 * i, 2 * j + 1) -= z * w * block[1];
                a(2 * i + 1, 2 * j) -= z * w * block[2];
                a(2 * i + 1, 2 * j + 1) -= z * w * block[3];
            }
        return det(a);
    };
    // branch of the square root fixed by continuity from xi = 0 (value 1)
    const int steps = 24;
    double sign = 1.0;
    double prev = 1.0;
    for (int s = 1; s <= steps; ++s) {
        const double z = xi * s / steps;
        const double d = assemble(z);
        if (d < 0.0)
            throw std::runtime_error("fredholm_qdet: discretized determinant went negative");
        const double root = std::sqrt(d);
        // a sign change of the square root would show as a near-zero crossing
        if (root < 1e-12 * prev) sign = -sign;
        prev = root;
    }
    return sign * std::sqrt(assemble(xi));
}

namespace {

// polynomial fit through Chebyshev nodes on [0, 1.2]; returns derivatives
// at xi = 1 up to order pmax
std::vector<double> chebfit_derivs(const std::function<double(double)>& f, int pmax) {
    const int deg = pmax + 3;
    const int npts = deg + 1;
    std::vector<double> xs(npts), ys(npts);
    for (int i = 0; i < npts; ++i) {
        const double t = std::cos(M_PI * (i + 0.5) / npts);
        xs[i] = 0.6 + 0.6 * t;  // Chebyshev nodes on [0, 1.2]
        ys[i] = f(xs[i]);
    }
    // divided-difference Newton form, then evaluate derivatives at 1 by
    // synthetic differentiation of the expanded monomial coefficients
    Matrix v(npts, npts);
    for (int i = 0; i < npts; ++i) {
        double p = 1.0;
        for (int j = 0; j < npts; ++j) {
            v(i, j) = p;
            p *= (xs[i] - 1.0);  // expand about xi = 1
        }
    }
    // solve V c = y by Gaussian elimination
    std::vector<double> c = ys;
    for (int k = 0; k < npts; ++k) {
        int piv = k;
        for (int i = k + 1; i < npts; ++i)
            if (std::fabs(v(i, k)) > std::fabs(v(piv, k))) piv = i;
        for (int j = 0; j < npts; ++j) std::swap(v(k, j), v(piv, j));
        std::swap(c[k], c[piv]);
        for (int i = k + 1; i < npts; ++i) {
            const double fmul = v(i, k) / v(k, k);
            for (int j = k; j < npts; ++j) v(i, j) -= fmul * v(k, j);
            c[i] -= fmul * c[k];
        }
    }
    for (int i = npts - 1; i >= 0; --i) {
        for (int j = i + 1; j < npts; ++j) c[i] -= v(i, j) * c[j];
        c[i] /= v(i, i);
    }
    // c[p] = f^{(p)}(1)/p!
    std::vector<double> derivs(pmax + 1);
    double fact = 1.0;
    for (int p = 0; p <= pmax; ++p) {
        derivs[p] = c[p] * fact;
        fact *= (p + 1.0);
    }
    return derivs;
}

} // namespace

std::vector<double> gap_probabilities(const std::function<double(double, double)>& kernel,
                                      double lo, double hi, int m, int pmax,
                                      double* self_convergence) {
    auto dets = [&](int order) {
        return chebfit_derivs(
            [&](double xi) { return fredholm_det(kernel, lo, hi, order, xi); }, pmax);
    };
    const auto d1 = dets(m);
    if (self_convergence) {
        const auto d2 = dets(2 * m);
        double shift = 0.0;
        for (int p = 0; p <= pmax; ++p) shift = std::max(shift, std::fabs(d1[p] - d2[p]));
        *self_convergence = shift;
        if (shift > 1e-6)
            throw std::runtime_error("gap_probabilities: Nystrom not converged (doubling m moved "
                                     "the result by more than 1e-6)");
    }
    std::vector<double> e(pmax + 1);
    double fact = 1.0;
    for (int p = 0; p <= pmax; ++p) {
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        e[p] = sign / fact * d1[p];
        fact *= (p + 1.0);
    }
    return e;
}

ParityGaps parity_from_blind(const std::vector<double>& blind) {
    ParityGaps out;
    auto at = [&](int idx) { return (idx < 0 || idx >= static_cast<int>(blind.size()))
                                        ? 0.0
                                        : blind[idx]; };
    const int pmax = static_cast<int>(blind.size()) / 2;
    for (int p = 0; p < pmax; ++p) {
        out.odd.push_back(at(2 * p - 1) + at(2 * p));
        out.even.push_back(at(2 * p) + at(2 * p + 1));
    }
    return out;
}

std::vector<double> blind_from_parity(const ParityGaps& parity) {
    const int pmax = static_cast<int>(std::min(parity.odd.size(), parity.even.size()));
    std::vector<double> blind;
    double odd_run = 0.0, even_run = 0.0;
    for (int p = 0; p < pmax; ++p) {
        odd_run += parity.odd[p];
        // E(2p) = sum_{j<=p} E_odd(j) - sum_{j<=p-1} E_even(j)
        const double e2p = odd_run - even_run;
        even_run += parity.even[p];
        // E(2p+1) = sum_{j<=p} E_even(j) - sum_{j<=p} E_odd(j)
        const double e2p1 = even_run - odd_run;
        if (e2p < -1e-12 || e2p1 < -1e-12)
            throw std::invalid_argument("blind_from_parity: inconsistent inputs (negative "
                                        "probability)");
        blind.push_back(e2p);
        blind.push_back(e2p1);
    }
    return blind;
}

double eig_pdf(int k, double s, const std::function<double(int, double)>& gap_at, double h0) {
    if (k < 1) throw std::invalid_argument("eig_pdf: k >= 1 required");
    double total = 0.0;
    for (int j = 0; j < k; ++j) {
        // central difference with one Richardson refinement and step control
        double h = h0;
        double prev = 0.0;
        for (int it = 0; it < 3; ++it) {
            const double d1 = (gap_at(j, s + h) - gap_at(j, s - h)) / (2.0 * h);
            const double d2 = (gap_at(j, s + 0.5 * h) - gap_at(j, s - 0.5 * h)) / h;
            const double rich = (4.0 * d2 - d1) / 3.0;
            if (it > 0 && std::fabs(rich - prev) < 1e-7 * (1.0 + std::fabs(rich))) {
                prev = rich;
                break;
            }
            prev = rich;
            h *= 0.5;
        }
        total += prev;
    }
    return total;
}

} // namespace rmt::gaps
