#include "rmt/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double det(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    const std::size_t n = m.rows();
    double sign = 1.0, logsum = 0.0;
    // Track magnitude in log space so moderately large Nystrom systems
    // cannot overflow before the final product.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > best) { best = std::fabs(m(i, k)); piv = i; }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        const double pivot = m(k, k);
        if (pivot < 0.0) sign = -sign;
        logsum += std::log(std::fabs(pivot));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / pivot;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return sign * std::exp(logsum);
}

double frobenius_distance(const Matrix& m, const Matrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double d = m(i, j) - n(i, j);
            s += d * d;
        }
    return std::sqrt(s);
}

namespace {
double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }
}

void tridiag_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    if (static_cast<int>(e.size()) < n) e.resize(n, 0.0);
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (++iter > 60) throw std::runtime_error("tridiag_eigen: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        f = (*z)[i + 1];
                        (*z)[i + 1] = s * (*z)[i] + c * f;
                        (*z)[i] = c * (*z)[i] - s * f;
                    }
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // insertion sort ascending, carrying z along
    for (int i = 1; i < n; ++i) {
        const double dv = d[i];
        const double zv = z ? (*z)[i] : 0.0;
        int j = i - 1;
        while (j >= 0 && d[j] > dv) {
            d[j + 1] = d[j];
            if (z) (*z)[j + 1] = (*z)[j];
            --j;
        }
        d[j + 1] = dv;
        if (z) (*z)[j + 1] = zv;
    }
}

} // namespace rmt
