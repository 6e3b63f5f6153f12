#ifndef RMT_SKEWCORR_HPP
#define RMT_SKEWCORR_HPP

#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/kernels.hpp"

namespace rmt::skewcorr {

// One real quaternion block of the correlation matrix.
struct Block2x2 {
    double e11 = 0.0, e12 = 0.0, e21 = 0.0, e22 = 0.0;
};

// Skew-orthogonal basis data for a decimation-type ensemble with 2n points:
// integration coefficients c_kp, expansion coefficients alpha_lj and the
// block normalizations r_l.
class SkewCoeffs {
public:
    explicit SkewCoeffs(const EnsembleSpec& spec);

    const EnsembleSpec& spec() const { return spec_; }
    int basis_size() const { return 2 * spec_.n; }

    double r(int l) const;         // l = 0 .. n-1
    double c(int k, int p) const;  // p <= k < 2n
    double alpha(int l, int j) const;

    // factorization of the skew pairing <p_j, p_k> = a_j b_k (j < k) and the
    // diagonal coefficient of the one-sided integral (sd1)
    double pair_a(int j) const;
    double pair_b(int k) const;
    double a_tilde(int k) const;

private:
    EnsembleSpec spec_;
    std::vector<std::vector<double>> c_;
    std::vector<std::vector<double>> alpha_;
    std::vector<double> r_;
};

// R_l(x): skew-orthogonal polynomial of degree l (explicit classical series).
double skew_poly(const SkewCoeffs& coeffs, int l, double x);

// Phi_l^e(x) = int_x^edge w(t) kappa(t,x) R_l(t) dt, by closed form.
double phi_e(const SkewCoeffs& coeffs, int l, double x);

// Basis transforms entering the generic block formulas:
double wr(const SkewCoeffs& coeffs, int l, double x);        // w(x) R_l(x)
double kr(const SkewCoeffs& coeffs, int l, double x);        // int_lo^x w kappa(x,.) R_l
double er(const SkewCoeffs& coeffs, int l, double x);        // kr - phi_e

// ---- production blocks (kernel closed forms) ------------------------------
Block2x2 f_ee(const EnsembleSpec& spec, double y, double yp);
Block2x2 f_blind(const EnsembleSpec& spec, double x, double y);
Block2x2 f_oe(const EnsembleSpec& spec, double x, double y);
Block2x2 f_eo(const EnsembleSpec& spec, double y, double x);
Block2x2 f_oo(const EnsembleSpec& spec, double x, double xp);

// individual even-even pieces (exposed for tests and scaled-limit checks)
double fee12(const EnsembleSpec& spec, double y, double yp);
double fee12_dy(const EnsembleSpec& spec, double y, double yp);
double fee12_dyp(const EnsembleSpec& spec, double y, double yp);
double fee12_dydyp(const EnsembleSpec& spec, double y, double yp);

// f_blind^{22}(x,y) alone (the building block of the other parities)
double blind22(const EnsembleSpec& spec, double x, double y);

// int_y^edge kappa(s,y) f_blind^22(x,s) ds, closed form
double kappa_f22_int(const EnsembleSpec& spec, double x, double y);

// ---- defining-sum assembly (independent oracle path) ----------------------
Block2x2 f_ee_sum(const SkewCoeffs& coeffs, double y, double yp);
Block2x2 f_blind_sum(const SkewCoeffs& coeffs, double x, double y);
Block2x2 f_oe_sum(const SkewCoeffs& coeffs, double x, double y);
Block2x2 f_oo_sum(const SkewCoeffs& coeffs, double x, double xp);

// ---- correlations ----------------------------------------------------------
// parity-respecting (k1,k2)-point correlation (quaternion determinant)
double rho_decim(const EnsembleSpec& spec, const std::vector<double>& odd_pts,
                 const std::vector<double>& even_pts);

// parity-blind k-point correlation
double rho_blind(const EnsembleSpec& spec, const std::vector<double>& pts);

// the 2n-polynomial kernel of the family (K_{2n}^L a=0 / K_{2n}^J b=0)
kernels::KernelSpec decim_kernel(const EnsembleSpec& spec);

} // namespace rmt::skewcorr

#endif
