#ifndef RMT_SUPERCORR_HPP
#define RMT_SUPERCORR_HPP

#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/kernels.hpp"

namespace rmt::supercorr {

// Biorthogonal partner basis: p_j are the classical polynomials (Laguerre
// a=0 / Jacobi (a,0)), Q_j the derivative-built partners, diagonalizing the
// pairing form with normalizations N_j.
struct BiorthoBasis {
    EnsembleSpec spec;
    int max_degree = 0;
    std::vector<double> norms;  // N_0 .. N_max_degree

    BiorthoBasis(const EnsembleSpec& s, int max_deg);
};

double biortho_p(const BiorthoBasis& basis, int j, double x);  // p_j
double biortho_q(const BiorthoBasis& basis, int j, double x);  // Q_j

struct SuperBlocks {
    double oo = 0.0, oe = 0.0, eo = 0.0, ee = 0.0;
};

// Scalar entries of the parity-respecting correlation matrix for the
// superposition families.  Arguments follow the block labels:
// oo(x,x'), oe(x,y), eo(y,x), ee(y,y').
double super_koo(const EnsembleSpec& spec, double x, double xp);
double super_koe(const EnsembleSpec& spec, double x, double y);
double super_keo(const EnsembleSpec& spec, double y, double x);
double super_kee(const EnsembleSpec& spec, double y, double yp);

SuperBlocks super_blocks(const EnsembleSpec& spec, double x, double y);

// (k1,k2)-point parity-respecting correlation: determinant of the assembled
// block matrix over odd points x and even points y.
double rho_super(const EnsembleSpec& spec, const std::vector<double>& odd_pts,
                 const std::vector<double>& even_pts);

// underlying unitary-ensemble kernel of the family (K_n^L or K_n^J)
kernels::KernelSpec base_kernel(const EnsembleSpec& spec);

} // namespace rmt::supercorr

#endif
