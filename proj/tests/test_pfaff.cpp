#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <random>
#include <vector>

#include "rmt/linalg.hpp"
#include "rmt/pfaff.hpp"

using namespace rmt;
using namespace rmt::pfaff;

namespace {

// (2k-1)!! perfect-matching expansion, test oracle for k <= 3
double pfaffian_ref(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    // recursive expansion along the first remaining index
    std::function<double(std::vector<int>)> rec = [&](std::vector<int> rest) -> double {
        if (rest.empty()) return 1.0;
        const int i = rest[0];
        double s = 0.0;
        for (std::size_t p = 1; p < rest.size(); ++p) {
            const int j = rest[p];
            std::vector<int> next;
            for (std::size_t q = 1; q < rest.size(); ++q)
                if (q != p) next.push_back(rest[q]);
            const double sign = (p % 2 == 1) ? 1.0 : -1.0;
            s += sign * m(i, j) * rec(next);
        }
        return s;
    };
    return rec(idx);
}

Matrix random_antisymmetric(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = u(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

Matrix random_self_dual(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = u(rng);
    // project: (B + Z^{-1} B^T Z)/2 is self-dual
    const Matrix z = symplectic_unit(n);
    Matrix zt(n, n);  // Z^{-1} = Z^T = -Z
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) zt(i, j) = -z(i, j);
    Matrix btr(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) btr(i, j) = b(j, i);
    Matrix proj = zt * btr * z;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (b(i, j) + proj(i, j));
    return out;
}

} // namespace

TEST_SUITE_BEGIN("pfaff");

TEST_CASE("pfaffian 2x2 and 4x4") {
    Matrix m2(2, 2);
    m2(0, 1) = 3.0;
    m2(1, 0) = -3.0;
    CHECK(pfaffian(m2) == doctest::Approx(3.0).epsilon(1e-15));

    Matrix m4 = random_antisymmetric(4, 11);
    const double expect = m4(0, 1) * m4(2, 3) - m4(0, 2) * m4(1, 3) + m4(0, 3) * m4(1, 2);
    CHECK(pfaffian(m4) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("pfaffian vs matching expansion, k <= 3") {
    for (unsigned seed : {1u, 2u, 3u})
        for (std::size_t n : {2u, 4u, 6u}) {
            Matrix m = random_antisymmetric(n, seed * 100 + n);
            CHECK(pfaffian(m) == doctest::Approx(pfaffian_ref(m)).epsilon(1e-12));
        }
}

TEST_CASE("pfaffian squared equals determinant") {
    for (unsigned seed : {5u, 6u}) {
        Matrix m = random_antisymmetric(8, seed);
        const double pf = pfaffian(m);
        CHECK(pf * pf == doctest::Approx(det(m)).epsilon(1e-10));
    }
}

TEST_CASE("pfaffian rejects bad input") {
    Matrix odd(3, 3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
    Matrix sym(2, 2);
    sym(0, 1) = 1.0;
    sym(1, 0) = 1.0;
    CHECK_THROWS_AS(pfaffian(sym), std::invalid_argument);
}

TEST_CASE("qdet identity and blocks") {
    for (std::size_t n : {2u, 4u, 8u}) CHECK(qdet(Matrix::identity(n)) == doctest::Approx(1.0).epsilon(1e-14));
    // block-diagonal of scalar 2x2 blocks c*I has qdet c^k
    const double cval = 1.7;
    Matrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) m(i, i) = cval;
    CHECK(qdet(m) == doctest::Approx(cval * cval * cval).epsilon(1e-13));
}

TEST_CASE("qdet squared equals det on random self-dual") {
    for (unsigned seed : {3u, 7u, 9u}) {
        Matrix m = random_self_dual(12, seed);
        CHECK(self_duality_residual(m) < 1e-12);
        const double q = qdet(m);
        CHECK(q * q == doctest::Approx(det(m)).epsilon(1e-10));
    }
}

TEST_CASE("qdet rejects non-self-dual") {
    Matrix m = random_antisymmetric(4, 42);
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;  // generic, not self-dual
    CHECK_THROWS_AS(qdet(m), std::invalid_argument);
}

TEST_SUITE_END();
