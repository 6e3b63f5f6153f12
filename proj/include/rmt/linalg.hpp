#ifndef RMT_LINALG_HPP
#define RMT_LINALG_HPP

#include <cstddef>
#include <vector>

namespace rmt {

// Minimal dense row-major matrix, sized for the small determinants and
// Nystrom discretizations used throughout (n up to a few hundred).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Determinant by LU with partial pivoting; destroys a local copy.
double det(Matrix m);

// Frobenius norm of (m - n).
double frobenius_distance(const Matrix& m, const Matrix& n);

// Eigenvalues of a symmetric tridiagonal matrix (diag d, offdiag e) by the
// implicit QL method, optionally tracking the first component of each
// eigenvector in z (as needed by Golub-Welsch).  d and z are overwritten
// with eigenvalues (ascending) and first components.
void tridiag_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z);

} // namespace rmt

#endif
