#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rmt/kernels.hpp"
#include "rmt/quad.hpp"
#include "rmt/scaled.hpp"
#include "rmt/skewcorr.hpp"
#include "rmt/specfun.hpp"
#include "rmt/supercorr.hpp"

using namespace rmt;
using namespace rmt::scaled;

TEST_SUITE_BEGIN("scaled");

TEST_CASE("scaled kernel point values") {
    CHECK(k_scaled(Regime::Bulk, 0.0, 1.7, 1.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k_scaled(Regime::Bulk, 0.0, 1.0, 0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-13));
    CHECK(k_scaled(Regime::Hard, 0.0, 1e-12, 1e-12) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("integral and two-term kernel forms agree") {
    for (double X : {0.4, 1.7})
        for (double Y : {0.9, 3.2}) {
            CHECK(std::fabs(k_bulk_integral(X, Y) - k_scaled(Regime::Bulk, 0.0, X, Y)) < 1e-10);
            CHECK(std::fabs(k_hard_integral(1.3, X, Y) - k_scaled(Regime::Hard, 1.3, X, Y))
                  < 1e-10);
        }
    for (double X : {-1.2, 0.6})
        for (double Y : {-0.3, 1.4})
            CHECK(std::fabs(k_soft_integral(X, Y) - k_scaled(Regime::Soft, 0.0, X, Y)) < 1e-10);
}

TEST_CASE("kernel derivative against finite differences") {
    const double h = 1e-6;
    for (auto [rg, a] : std::vector<std::pair<Regime, double>>{
             {Regime::Bulk, 0.0}, {Regime::Soft, 0.0}, {Regime::Hard, 0.8}}) {
        const double X = (rg == Regime::Soft) ? -0.7 : 1.3;
        const double Y = (rg == Regime::Soft) ? 0.4 : 2.1;
        const double fd = (k_scaled(rg, a, X + h, Y) - k_scaled(rg, a, X - h, Y)) / (2.0 * h);
        CHECK(k_scaled_d1(rg, a, X, Y) == doctest::Approx(fd).epsilon(1e-6));
        // confluent branch consistency just off the diagonal
        const double fd2 = (k_scaled(rg, a, Y + h, Y) - k_scaled(rg, a, Y - h, Y)) / (2.0 * h);
        CHECK(k_scaled_d1(rg, a, Y + 1e-9, Y) == doctest::Approx(fd2).epsilon(1e-4));
    }
}

TEST_CASE("airy exponential integral identity") {
    for (double eps : {0.05, 0.2, 0.5}) {
        const double whole = airy_exp_tail(eps, -360.0 - 40.0 / eps);
        CHECK(whole == doctest::Approx(std::exp(eps * eps * eps / 3.0)).epsilon(1e-8));
    }
}

TEST_CASE("bessel kernel shift identity") {
    for (double a : {0.0, 0.7, 2.0})
        for (double X : {0.5, 1.0})
            for (double Y : {2.0, 3.7}) {
                const double lhs = std::sqrt(X / Y) * k_scaled(Regime::Hard, a + 1.0, X, Y);
                CHECK(std::fabs(lhs - bessel_kernel_shift(a, X, Y)) < 1e-12);
            }
    // confluent: both sides finite and equal on the diagonal
    const double diag = bessel_kernel_shift(0.0, 1.2, 1.2);
    CHECK(diag == doctest::Approx(k_scaled(Regime::Hard, 1.0, 1.2, 1.2)).epsilon(1e-9));
}

TEST_CASE("hard-edge tail derivative vanishes at a=0") {
    // d/dY of the resummed int_0^inf K_hard(t, Y) dt
    const double h = 1e-3;
    for (double Y : {0.8, 2.5}) {
        const double up = tail_int_scaled(Regime::Hard, 0.0, Y + h, 0.0);
        const double dn = tail_int_scaled(Regime::Hard, 0.0, Y - h, 0.0);
        CHECK(std::fabs((up - dn) / (2.0 * h)) < 1e-6);
    }
}

TEST_CASE("superposition blocks: bulk oe at alpha=0 is -dK") {
    ScalingSpec sp;
    sp.regime = Regime::Bulk;
    sp.alpha = 0.0;
    const double h = 1e-6;
    for (double X : {0.3, 1.1}) {
        const double fd = (k_scaled(Regime::Bulk, 0.0, X + h, 0.0)
                           - k_scaled(Regime::Bulk, 0.0, X - h, 0.0)) / (2.0 * h);
        CHECK(scaled_super_koe(sp, X, 0.0) == doctest::Approx(-fd).epsilon(1e-7));
    }
    CHECK(scaled_super_kee(sp, 0.7, 0.7) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(
        [] {
            ScalingSpec bad;
            bad.regime = Regime::Bulk;
            bad.alpha = 0.5;
            bad.validate();
        }(),
        std::invalid_argument);
}

TEST_CASE("finite-n kernel converges to the sine kernel in the bulk") {
    // local unit-spacing variables in a symmetric window around the
    // mid-spectrum centre (cancels the density-gradient correction), n = 200
    const int n = 200;
    const auto ks = kernels::KernelSpec::laguerre(n, 0.0);
    const double c = 2.0 * n;
    const double s = 1.0 / kernels::kernel_eval(ks, c, c);
    for (double d : {0.25, 0.5, 1.0, 1.6}) {
        const double got = s * kernels::kernel_eval(ks, c + 0.5 * s * d, c - 0.5 * s * d);
        CHECK(std::fabs(got - k_scaled(Regime::Bulk, 0.0, d, 0.0)) < 5e-3);
    }
}

TEST_CASE("finite-n superposition blocks converge to the scaled hard-edge blocks") {
    const double alpha = -0.6;
    ScalingSpec sp;
    sp.regime = Regime::Hard;
    sp.alpha = alpha;
    const double X = 1.1, Y = 2.4;
    const int n = 80;
    EnsembleSpec spec;
    spec.family = Family::LagSuper;
    spec.n = n;
    spec.A = 4.0 * n * alpha;
    const double b = 1.0 / (4.0 * n);
    const double keo_fin = supercorr::super_keo(spec, Y * b, X * b);
    CHECK(std::fabs(keo_fin - scaled_super_keo(sp, Y, X)) < 2e-2);
    const double kee_fin = b * supercorr::super_kee(spec, Y * b, Y * b);
    CHECK(std::fabs(kee_fin - scaled_super_kee(sp, Y, Y)) < 2e-2);
}

TEST_CASE("hard-at-one superposition blocks converge from finite n") {
    const double alpha = -0.8, a = 1.0;
    ScalingSpec sp;
    sp.regime = Regime::HardAtOne;
    sp.a = a;
    sp.alpha = alpha;
    sp.source = Source::Superposition;
    const double X = 1.4, Y = 2.3;
    const int n = 48;
    EnsembleSpec spec;
    spec.family = Family::JacSuper;
    spec.n = n;
    spec.a = a;
    spec.A = alpha;
    const double b = 1.0 / (2.0 * n * n);
    CHECK(std::fabs(b * supercorr::super_kee(spec, 1.0 - Y * b, 1.0 - Y * b)
                    - scaled_super_kee(sp, Y, Y)) < 4e-2 * std::fabs(scaled_super_kee(sp, Y, Y)));
    CHECK(std::fabs(supercorr::super_keo(spec, 1.0 - Y * b, 1.0 - X * b)
                    - scaled_super_keo(sp, Y, X)) < 4e-2 * std::fabs(scaled_super_keo(sp, Y, X)));
}

TEST_CASE("left Jacobi edge feeds the exponential hard blocks") {
    // under x = -1 + X/(2N^2), A = 4 N^2 alpha the Jacobi superposition
    // blocks converge to the exponential hard-edge forms at Bessel order 0
    const double alpha = -0.6, X = 1.1, Y = 2.4;
    ScalingSpec sp;
    sp.regime = Regime::Hard;
    sp.alpha = alpha;
    const int N = 64;
    EnsembleSpec spec;
    spec.family = Family::JacSuper;
    spec.n = N;
    spec.a = 1.0;
    const double b = 1.0 / (2.0 * N * N);
    spec.A = 2.0 * alpha / b;
    spec.validate();
    const double x = -1.0 + X * b, y = -1.0 + Y * b;
    CHECK(std::fabs(b * supercorr::super_kee(spec, y, y) - scaled_super_kee(sp, Y, Y)) < 2e-3);
    CHECK(std::fabs(supercorr::super_keo(spec, y, x) - scaled_super_keo(sp, Y, X)) < 4e-3);
    CHECK(std::fabs(b * b * supercorr::super_koe(spec, x, y) - scaled_super_koe(sp, X, Y))
          < 2e-3);
    CHECK(std::fabs(b * supercorr::super_koo(spec, x, x) - scaled_super_koo(sp, X, X)) < 3e-3);
}

TEST_CASE("hard-at-one decimation blocks converge at a = 1") {
    const double alpha = -1.0, a = 1.0, X = 1.4, Y = 2.3;
    ScalingSpec sp;
    sp.regime = Regime::HardAtOne;
    sp.a = a;
    sp.alpha = alpha;
    sp.source = Source::Decimation;
    const auto p17 = scaled_decim_blocks(sp, X, Y);
    const int nn = 32;
    EnsembleSpec spec;
    spec.family = Family::JacDecim;
    spec.n = nn;
    spec.a = a;
    spec.A = alpha;
    const int N = 2 * nn;
    const double b = 1.0 / (2.0 * N * N);
    const auto f = skewcorr::f_blind(spec, 1.0 - X * b, 1.0 - Y * b);
    CHECK(std::fabs(f.e11 * b - p17.e11) < 0.03 * std::fabs(p17.e11));
    CHECK(std::fabs(f.e12 * b * b - p17.e12) < 0.06 * std::fabs(p17.e12));
    CHECK(std::fabs(f.e21 - p17.e21) < 0.02 * std::fabs(p17.e21));
    CHECK(std::fabs(f.e22 * b - p17.e22) < 0.03 * std::fabs(p17.e22));
}

TEST_CASE("decimation blocks: antisymmetric 21 entry on the diagonal") {
    for (auto rg : {Regime::Bulk, Regime::Soft, Regime::Hard}) {
        ScalingSpec sp;
        sp.regime = rg;
        sp.alpha = -0.5;
        sp.source = Source::Decimation;
        const double X = (rg == Regime::Soft) ? -0.4 : 1.2;
        CHECK(scaled_decim_blocks(sp, X, X).e21 == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("decimation blocks at alpha=0 reduce to the orthogonal-limit forms") {
    // bulk and soft against the independently coded closed forms
    {
        ScalingSpec sp;
        sp.regime = Regime::Bulk;
        sp.alpha = 0.0;
        sp.source = Source::Decimation;
        const double X = 0.6, Y = 1.9;
        const auto blk = scaled_decim_blocks(sp, X, Y);
        CHECK(blk.e11 == doctest::Approx(ir11_bulk(X, Y)).epsilon(1e-8));
        CHECK(blk.e11 == doctest::Approx(fk11_bulk(X, Y)).epsilon(1e-8));
    }
    {
        ScalingSpec sp;
        sp.regime = Regime::Soft;
        sp.alpha = 0.0;
        sp.source = Source::Decimation;
        const double X = -0.8, Y = 0.5;
        const auto blk = scaled_decim_blocks(sp, X, Y);
        // the blocks follow the finite-n orientation f22(X,Y) = f11(Y,X)
        CHECK(blk.e22 == doctest::Approx(ir11_soft(X, Y)).epsilon(1e-8));
        CHECK(blk.e22 == doctest::Approx(fk11_soft(X, Y)).epsilon(1e-8));
        // and the 12/21 relations of the orthogonal limit: 2 f12 = dX f22
        const double h = 1e-5;
        const double dfdx = (scaled_decim_blocks(sp, X + h, Y).e22
                             - scaled_decim_blocks(sp, X - h, Y).e22) / (2.0 * h);
        CHECK(2.0 * blk.e12 == doctest::Approx(dfdx).epsilon(1e-5));
    }
    {
        ScalingSpec sp;
        sp.regime = Regime::HardAtOne;
        sp.a = 1.0;
        sp.alpha = 0.0;
        sp.source = Source::Decimation;
        const double X = 1.4, Y = 2.3;
        const auto blk = scaled_decim_blocks(sp, X, Y);
        CHECK(blk.e22 == doctest::Approx(ir11_hard(1.0, X, Y)).epsilon(1e-8));
        CHECK(blk.e22 == doctest::Approx(fk11_hard(0.0, X, Y)).epsilon(1e-8));
    }
}

TEST_CASE("orthogonal-limit reconciliation at the hard edge") {
    // the composed form at order a+1 equals the previous-studies form at a
    for (double a : {0.0, 1.0, 2.0})
        for (double X : {0.5, 1.2, 2.0, 2.9, 3.8})
            for (double Y : {0.7, 1.5, 2.3, 3.1, 4.0})
                CHECK(std::fabs(ir11_hard(a + 1.0, X, Y) - fk11_hard(a, X, Y)) < 1e-8);
}

TEST_CASE("symplectic-limit reconciliation at the hard edge") {
    for (double a : {0.0, 1.0, 2.0})
        for (double X : {0.5, 1.2, 2.0, 2.9, 3.8})
            for (double Y : {0.7, 1.5, 2.3, 3.1, 4.0})
                CHECK(std::fabs(tf22_hard(a, X, Y) - fnh22_hard(a + 1.0, X, Y)) < 1e-8);
}

TEST_CASE("decimation 22 entry approaches the symplectic forms as alpha -> -inf") {
    // soft edge
    {
        const double X = -0.3, Y = 0.6;
        const double target = fnh22_soft(X, Y);
        double prev = 1e9;
        for (double alpha : {-20.0, -60.0}) {
            ScalingSpec sp;
            sp.regime = Regime::Soft;
            sp.alpha = alpha;
            sp.source = Source::Decimation;
            const double diff = std::fabs(scaled_decim_blocks(sp, X, Y).e22 - target);
            CHECK(diff < prev);
            prev = diff;
        }
        CHECK(prev < 5e-3);
    }
    // x=1 hard edge: rescaled 22 entry against tf22 (equivalently fnh at a+1)
    {
        const double a = 0.0, X = 1.2, Y = 2.1;
        const double target = tf22_hard(a, X, Y);
        double prev = 1e9;
        for (double alpha : {-20.0, -60.0}) {
            ScalingSpec sp;
            sp.regime = Regime::HardAtOne;
            sp.a = a;
            sp.alpha = alpha;
            sp.source = Source::Decimation;
            const double got = (Y / X) * scaled_decim_blocks(sp, X, Y).e22;
            const double diff = std::fabs(got - target);
            CHECK(diff < prev);
            prev = diff;
        }
        CHECK(prev < 5e-3);
    }
}

TEST_CASE("alpha validity guards") {
    ScalingSpec sp;
    sp.regime = Regime::HardAtOne;
    sp.a = 0.0;
    sp.alpha = 1.6;
    CHECK_THROWS_AS(sp.validate(), std::invalid_argument);
    ScalingSpec sp2;
    sp2.regime = Regime::HardAtOne;
    sp2.alpha = 0.5;
    sp2.source = Source::Decimation;
    CHECK_THROWS_AS(scaled_decim_blocks(sp2, 1.0, 2.0), std::runtime_error);
}

TEST_SUITE_END();
