#ifndef RMT_SCALED_HPP
#define RMT_SCALED_HPP

#include "rmt/skewcorr.hpp"

namespace rmt::scaled {

// Scaling regimes of the n -> infinity limits.  Hard is the exponential-
// factor hard edge reached from the Laguerre families (Bessel parameter a);
// HardAtOne is the power-factor hard edge at the right end of the Jacobi
// support (general a, parameter bound alpha < 3/2).
enum class Regime { Bulk, Soft, Hard, HardAtOne };

enum class Source { Superposition, Decimation };

struct ScalingSpec {
    Regime regime = Regime::Bulk;
    double a = 0.0;      // Bessel order at the hard edges
    double alpha = 0.0;  // scaled coupling parameter
    Source source = Source::Superposition;

    void validate() const;
};

// ---- scaled kernels --------------------------------------------------------
// sine (Bulk), Airy (Soft) and Bessel (Hard/HardAtOne, order a) kernels with
// confluent diagonal branches.
double k_scaled(Regime regime, double a, double X, double Y);
double k_scaled_d1(Regime regime, double a, double X, double Y);

// integral-representation forms (test oracles)
double k_bulk_integral(double X, double Y);
double k_soft_integral(double X, double Y);
double k_hard_integral(double a, double X, double Y);

// ---- special-function tails used by the scaled formulas --------------------
// int_z^inf J_nu(u) du (nu > -1; via 1 - 2 sum J_{nu+2k+1})
double bessel_tail(double nu, double z);
// int_0^z J_nu(u) du
double bessel_int0(double nu, double z);
// int_z^inf u^beta J_nu(u) du, beta < 3/2, oscillatory tail resummed
double bessel_power_tail(double nu, double beta, double z);
// int_z^inf Ai(t) dt
double airy_tail(double z);
// int_u^inf e^{c t} Ai(t) dt (absolutely convergent for every real c)
double airy_exp_tail(double c, double u);
// sine integral Si(x)
double sine_integral(double x);

// int_Y^inf K^scaled(arg, u) du
double tail_int_scaled(Regime regime, double a, double arg, double Y);
// d/darg of the same
double tail_int_scaled_d(Regime regime, double a, double arg, double Y);
// int_lower^X e^{-alpha v / 2} K^scaled(v, Y) dv over the natural support
double weighted_left_int(Regime regime, double a, double alpha, double X, double Y);
// the same against dK/darg in the kernel's first slot
double weighted_left_int_d(Regime regime, double a, double alpha, double X, double Y);

// ---- scaled superposition blocks -------------------------------------------
struct SuperBlocks {
    double oo = 0.0, oe = 0.0, eo = 0.0, ee = 0.0;
};

double scaled_super_kee(const ScalingSpec& spec, double Y, double Yp);
double scaled_super_koe(const ScalingSpec& spec, double X, double Y);
double scaled_super_keo(const ScalingSpec& spec, double Y, double X);
double scaled_super_koo(const ScalingSpec& spec, double X, double Xp);
SuperBlocks scaled_super_blocks(const ScalingSpec& spec, double X, double Y);

// ---- scaled decimation blocks ----------------------------------------------
skewcorr::Block2x2 scaled_decim_blocks(const ScalingSpec& spec, double X, double Y);

// ---- closed-form cross-validation targets ----------------------------------
// orthogonal-limit (alpha = 0) top-left entries of previous studies
double fk11_bulk(double X, double Y);
double fk11_soft(double X, double Y);
double fk11_hard(double a, double X, double Y);
// the alpha = 0 composition forms read off the scaled matrix elements
double ir11_bulk(double X, double Y);
double ir11_soft(double X, double Y);
double ir11_hard(double a, double X, double Y);
// symplectic-limit hard-edge 22-entries: the rescaled alpha -> -inf form and
// the previous-studies closed form
double tf22_hard(double a, double X, double Y);
double fnh22_hard(double a, double X, double Y);
double fnh22_soft(double X, double Y);

// Bessel-order shift: (X/Y)^{1/2} K^hard|_{a+1}(X,Y) via the order-a
// recurrence.
double bessel_kernel_shift(double a, double X, double Y);

} // namespace rmt::scaled

#endif
