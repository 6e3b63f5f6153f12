#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rmt/kernels.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::kernels;

namespace {

const std::vector<double> kLagGrid = {0.15, 0.6, 1.2, 2.0, 3.1, 4.5, 6.2, 8.0};
const std::vector<double> kJacGrid = {-0.9, -0.62, -0.35, -0.1, 0.12, 0.4, 0.66, 0.88};

} // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("kernel_eval point values") {
    CHECK(kernel_eval(KernelSpec::laguerre(1, 0.0), 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernel_eval(KernelSpec::jacobi(1, 0.0, 0.0), 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(kernel_eval(KernelSpec::laguerre(2, 0.0), -0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::jacobi(2, 0.0, 0.0), 1.5, 0.0), std::invalid_argument);
}

TEST_CASE("kernel symmetry") {
    const auto lag = KernelSpec::laguerre(7, 1.3);
    const auto jac = KernelSpec::jacobi(6, 0.8, 0.4);
    for (double x : {0.4, 2.2, 5.0})
        for (double y : {0.9, 3.3}) {
            CHECK(kernel_eval(lag, x, y) == doctest::Approx(kernel_eval(lag, y, x)).epsilon(1e-13));
        }
    for (double x : {-0.5, 0.2, 0.7})
        for (double y : {-0.1, 0.5}) {
            CHECK(kernel_eval(jac, x, y) == doctest::Approx(kernel_eval(jac, y, x)).epsilon(1e-13));
        }
}

TEST_CASE("kernel against direct unnormalized sum") {
    const double a = 1.3;
    const auto spec = KernelSpec::laguerre(6, a);
    for (double x : {0.5, 2.5})
        for (double y : {1.5, 4.0}) {
            double s = 0.0;
            for (int l = 0; l < 6; ++l)
                s += specfun::laguerre(l, a, x) * specfun::laguerre(l, a, y)
                     / specfun::laguerre_norm(l, a);
            s *= std::pow(x * y, 0.5 * a) * std::exp(-0.5 * (x + y));
            CHECK(kernel_eval(spec, x, y) == doctest::Approx(s).epsilon(1e-12));
        }
    const double aj = 0.7, bj = 1.1;
    const auto jspec = KernelSpec::jacobi(5, aj, bj);
    for (double x : {-0.4, 0.3})
        for (double y : {-0.2, 0.6}) {
            double s = 0.0;
            for (int l = 0; l < 5; ++l)
                s += specfun::jacobi(l, aj, bj, x) * specfun::jacobi(l, aj, bj, y)
                     / specfun::jacobi_norm(l, aj, bj);
            s *= std::pow((1.0 - x) * (1.0 - y), 0.5 * (aj - 1.0))
                 * std::pow((1.0 + x) * (1.0 + y), 0.5 * bj);
            CHECK(kernel_eval(jspec, x, y) == doctest::Approx(s).epsilon(1e-12));
        }
}

TEST_CASE("kernel_cd equals sum form") {
    const auto jac = KernelSpec::jacobi(6, 1.0, 0.0);
    CHECK(kernel_cd(jac, 0.3, -0.2) == doctest::Approx(kernel_eval(jac, 0.3, -0.2)).epsilon(1e-11));
    // n=1 reduces to p0 p0 / h0 with prefactors
    const auto lag1 = KernelSpec::laguerre(1, 0.0);
    CHECK(kernel_cd(lag1, 0.7, 0.2) == doctest::Approx(kernel_eval(lag1, 0.7, 0.2)).epsilon(1e-12));
    // near-diagonal confluent branch
    const auto lag = KernelSpec::laguerre(10, 0.0);
    CHECK(kernel_cd(lag, 3.0, 3.0000001)
          == doctest::Approx(kernel_eval(lag, 3.0, 3.0000001)).epsilon(1e-6));
    const double diag = kernel_cd(lag, 3.0, 3.0);
    CHECK(std::isfinite(diag));
    CHECK(diag == doctest::Approx(kernel_eval(lag, 3.0, 3.0)).epsilon(1e-10));
}

TEST_CASE("kernel_deriv1 against finite differences") {
    const auto lag = KernelSpec::laguerre(8, 0.0);
    const auto jac = KernelSpec::jacobi(7, 1.5, 0.0);
    const double h = 1e-6;
    for (double x : {0.8, 2.5})
        CHECK(kernel_deriv1(lag, x, 1.1)
              == doctest::Approx((kernel_eval(lag, x + h, 1.1) - kernel_eval(lag, x - h, 1.1))
                                 / (2.0 * h)).epsilon(1e-7));
    for (double x : {-0.3, 0.45})
        CHECK(kernel_deriv1(jac, x, 0.2)
              == doctest::Approx((kernel_eval(jac, x + h, 0.2) - kernel_eval(jac, x - h, 0.2))
                                 / (2.0 * h)).epsilon(1e-7));
}

TEST_CASE("rho_ue basics") {
    CHECK(rho_ue(KernelSpec::laguerre(1, 0.0), {0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    // duplicated point annihilates the determinant
    CHECK(rho_ue(KernelSpec::laguerre(4, 0.0), {1.3, 1.3}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rho_ue(KernelSpec::jacobi(3, 0.5, 0.0), {0.2, 0.2}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rho_ue one-point integral equals n") {
    // trace of the projection kernel
    for (int n : {2, 5}) {
        const auto spec = KernelSpec::laguerre(n, 0.0);
        const double tr = quad::integrate_panels([&](double x) { return rho_ue(spec, {x}); },
                                                 0.0, 4.0 * n + 60.0, 0.5);
        CHECK(tr == doctest::Approx(n).epsilon(1e-8));
    }
    const auto jac = KernelSpec::jacobi(4, 1.0, 0.0);
    // endpoint weight singularity (1-x)^{a-1}: keep clear of x = 1 analytically
    const double tr = quad::integrate_panels([&](double x) { return rho_ue(jac, {x}); },
                                             -1.0 + 1e-13, 1.0 - 1e-13, 0.01);
    CHECK(tr == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("tail_int against quadrature") {
    // Laguerre a=0: int_lower^inf K(arg, t) dt
    const auto lag = KernelSpec::laguerre(8, 0.0);
    for (double arg : {0.5, 2.0})
        for (double lower : {0.0, 1.3}) {
            const double ref = quad::integrate_panels(
                [&](double t) { return kernel_eval(lag, arg, t); }, lower, 90.0, 0.5);
            CHECK(tail_int(lag, arg, lower) == doctest::Approx(ref).epsilon(1e-9));
        }
    const auto jac = KernelSpec::jacobi(6, 1.5, 0.0);
    for (double arg : {-0.4, 0.3})
        for (double lower : {-0.8, 0.1}) {
            const double ref = quad::adaptive_simpson(
                [&](double t) { return kernel_eval(jac, arg, t); }, lower, 1.0 - 1e-12, 1e-12);
            CHECK(tail_int(jac, arg, lower) == doctest::Approx(ref).epsilon(1e-9));
        }
}

TEST_CASE("tail_int_d against finite differences") {
    const auto lag = KernelSpec::laguerre(8, 0.0);
    const auto jac = KernelSpec::jacobi(6, 1.5, 0.0);
    const double h = 1e-6;
    for (double arg : {0.7, 2.4}) {
        const double fd = (tail_int(lag, arg + h, 1.0) - tail_int(lag, arg - h, 1.0)) / (2.0 * h);
        CHECK(tail_int_d(lag, arg, 1.0) == doctest::Approx(fd).epsilon(1e-7));
    }
    for (double arg : {-0.3, 0.5}) {
        const double fd = (tail_int(jac, arg + h, -0.5) - tail_int(jac, arg - h, -0.5)) / (2.0 * h);
        CHECK(tail_int_d(jac, arg, -0.5) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("evaluation-at-origin tail identities") {
    // -int_y^inf K_{2n}(0,u) du = int_0^inf K_{2n}(y,u) du  (Laguerre, a=0)
    for (int n : {1, 2, 3, 4}) {
        const auto spec = KernelSpec::laguerre(2 * n, 0.0);
        for (double y : kLagGrid) {
            const double lhs = -tail_int(spec, 0.0, y);
            const double rhs = tail_int(spec, y, 0.0);
            CHECK(std::fabs(lhs - rhs) < 1e-9 * (1.0 + std::fabs(rhs)));
        }
    }
    // Jacobi analogue with the (1-y)/2 factor
    for (int n : {1, 2, 3}) {
        const auto spec = KernelSpec::jacobi(2 * n, 1.2, 0.0);
        for (double y : kJacGrid) {
            const double lhs = -tail_int(spec, -1.0, y);
            const double rhs = 0.5 * (1.0 - y) * tail_int(spec, y, -1.0);
            CHECK(std::fabs(lhs - rhs) < 1e-9 * (1.0 + std::fabs(rhs)));
        }
    }
}

TEST_CASE("origin value equals integrated derivative") {
    // K_{2n}(0,y) = int_0^inf d/dy' K(y',u) du at y' = y ... i.e. tail_int_d(y; 0)
    for (int n : {2, 3}) {
        const auto spec = KernelSpec::laguerre(2 * n, 0.0);
        for (double y : kLagGrid) {
            const double lhs = kernel_eval(spec, 0.0, y);
            const double rhs = tail_int_d(spec, y, 0.0);
            CHECK(std::fabs(lhs - rhs) < 1e-7 * (1.0 + std::fabs(lhs)));
        }
    }
}

TEST_CASE("laguerre kernel derivative identity") {
    // (d/dx + d/dy) K_{n,a} = c (phi(x) psi(y) + phi(y) psi(x))
    for (int n : {4, 8})
        for (double a : {0.0, 1.5}) {
            const auto spec = KernelSpec::laguerre(n, a);
            for (double x : kLagGrid)
                for (double y : {0.9, 3.4}) {
                    const double lhs = kernel_deriv1(spec, x, y) + kernel_deriv1(spec, y, x);
                    const double rhs = lag_c(n, a)
                                       * (lag_phi(n, a, x) * lag_psi(n, a, y)
                                          + lag_phi(n, a, y) * lag_psi(n, a, x));
                    CHECK(std::fabs(lhs - rhs) < 1e-8 * (1.0 + std::fabs(rhs)));
                }
        }
}

TEST_CASE("jacobi kernel derivative identity") {
    // ((1-x)dx + (1-y)dy) (1-x)(1-y) K_{n,a,b} = c (phi psi + psi phi)
    for (int n : {4, 8})
        for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.5}}) {
            const auto spec = KernelSpec::jacobi(n, a, b);
            for (double x : kJacGrid)
                for (double y : {-0.25, 0.5}) {
                    const double k = kernel_eval(spec, x, y);
                    const double kx = kernel_deriv1(spec, x, y);
                    const double ky = kernel_deriv1(spec, y, x);
                    // expand the operator acting on (1-x)(1-y)K
                    const double lhs = (1.0 - x) * ((-(1.0 - y)) * k + (1.0 - x) * (1.0 - y) * kx)
                                     + (1.0 - y) * ((-(1.0 - x)) * k + (1.0 - x) * (1.0 - y) * ky);
                    const double rhs = jac_c(n, a, b)
                                       * (jac_phi(n, a, b, x) * jac_psi(n, a, b, y)
                                          + jac_psi(n, a, b, x) * jac_phi(n, a, b, y));
                    CHECK(std::fabs(lhs - rhs) < 1e-8 * (1.0 + std::fabs(rhs)));
                }
        }
}

TEST_CASE("laguerre integral representation reproduces kernel") {
    for (double a : {0.0, 1.0}) {
        const auto spec = KernelSpec::laguerre(5, a);
        for (double x : {0.8, 2.1})
            for (double y : {1.4, 3.0}) {
                const double rep = kernel_from_integral_rep_laguerre(5, a, x, y);
                CHECK(rep == doctest::Approx(kernel_eval(spec, x, y)).epsilon(1e-8));
            }
    }
}

TEST_CASE("jacobi integral representation reproduces kernel") {
    const int n = 5;
    const double a = 1.0, b = 0.5;
    const auto spec = KernelSpec::jacobi(n, a, b);
    for (double X : {-0.3, 0.25})
        for (double Y : {-0.6, 0.4}) {
            const double rep = kernel_from_integral_rep_jacobi(n, a, b, X, Y);
            CHECK(rep == doctest::Approx(kernel_eval(spec, X, Y)).epsilon(1e-8));
        }
}

TEST_CASE("half-operator specializations") {
    // (1/2)(dx+dy) K_{2n} = c phi psi at a = 0; phi and psi proportional there
    const int n = 6;
    const auto spec = KernelSpec::laguerre(n, 0.0);
    for (double x : {0.7, 2.2})
        for (double y : {1.1, 3.5}) {
            const double lhs = 0.5 * (kernel_deriv1(spec, x, y) + kernel_deriv1(spec, y, x));
            const double rhs = lag_c(n, 0.0) * lag_phi(n, 0.0, x) * lag_psi(n, 0.0, y);
            CHECK(std::fabs(lhs - rhs) < 1e-8 * (1.0 + std::fabs(rhs)));
        }
    // Jacobi b=0 half-operator form
    const double a = 1.5;
    const auto jspec = KernelSpec::jacobi(n, a, 0.0);
    for (double x : {-0.4, 0.3})
        for (double y : {-0.1, 0.55}) {
            const double k = kernel_eval(jspec, x, y);
            const double kx = kernel_deriv1(jspec, x, y);
            const double ky = kernel_deriv1(jspec, y, x);
            const double lhs = 0.5 * ((1.0 - x) * ((-(1.0 - y)) * k + (1.0 - x) * (1.0 - y) * kx)
                                      + (1.0 - y) * ((-(1.0 - x)) * k + (1.0 - x) * (1.0 - y) * ky));
            const double rhs = jac_c(n, a, 0.0) * jac_phi(n, a, 0.0, x) * jac_psi(n, a, 0.0, y);
            CHECK(std::fabs(lhs - rhs) < 1e-8 * (1.0 + std::fabs(rhs)));
        }
}

TEST_SUITE_END();
