#include "rmt/pfaff.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rmt::pfaff {

Matrix symplectic_unit(std::size_t two_k) {
    if (two_k % 2 != 0) throw std::invalid_argument("symplectic_unit: even dimension required");
    Matrix z(two_k, two_k);
    for (std::size_t l = 0; l + 1 < two_k; l += 2) {
        z(l, l + 1) = -1.0;
        z(l + 1, l) = 1.0;
    }
    return z;
}

namespace {
double max_abs(const Matrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v = std::max(v, std::fabs(m(i, j)));
    return v;
}
} // namespace

double antisymmetry_residual(const Matrix& m) {
    const double scale = std::max(1.0, max_abs(m));
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::fabs(m(i, j) + m(j, i)));
    return r / scale;
}

double self_duality_residual(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("self_duality_residual: even square matrix required");
    return antisymmetry_residual(m * symplectic_unit(m.rows()));
}

double pfaffian(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: square matrix required");
    const std::size_t n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: even dimension required");
    if (antisymmetry_residual(m) > 1e-9)
        throw std::invalid_argument("pfaffian: antisymmetry residual exceeds 1e-9");
    if (n == 0) return 1.0;

    // enforce exact antisymmetry so the congruence updates stay closed
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) - m(j, i));
            m(i, j) = v;
            m(j, i) = -v;
        }
    }

    double pf = 1.0;
    std::vector<double> c(n), r(n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        // pivot: largest |m(k, j)| for j > k, brought into position k+1
        std::size_t piv = k + 1;
        double best = std::fabs(m(k, k + 1));
        for (std::size_t j = k + 2; j < n; ++j)
            if (std::fabs(m(k, j)) > best) { best = std::fabs(m(k, j)); piv = j; }
        if (best == 0.0) return 0.0;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
            pf = -pf;
        }
        const double pivot = m(k, k + 1);
        pf *= pivot;
        if (k + 2 >= n) break;
        // congruence by row/col i += c_i * (row/col k+1) zeroes row/col k
        for (std::size_t i = k + 2; i < n; ++i) {
            c[i] = -m(k, i) / pivot;
            r[i] = m(k + 1, i);
        }
        for (std::size_t i = k + 2; i < n; ++i)
            for (std::size_t j = k + 2; j < n; ++j)
                m(i, j) += c[i] * r[j] - c[j] * r[i];
    }
    return pf;
}

double qdet(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("qdet: even square matrix required");
    const double res = self_duality_residual(m);
    if (res > 1e-9)
        throw std::invalid_argument("qdet: self-duality residual " + std::to_string(res)
                                    + " exceeds 1e-9");
    const std::size_t k = m.rows() / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // 1/Pf(Z_{2k})
    return sign * pfaffian(m * symplectic_unit(m.rows()));
}

} // namespace rmt::pfaff
