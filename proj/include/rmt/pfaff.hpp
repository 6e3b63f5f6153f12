#ifndef RMT_PFAFF_HPP
#define RMT_PFAFF_HPP

#include "rmt/linalg.hpp"

namespace rmt::pfaff {

// Z_{2k} = 1_k (x) [[0,-1],[1,0]]
Matrix symplectic_unit(std::size_t two_k);

// max |M + M^T| entry, scaled by the largest entry magnitude
double antisymmetry_residual(const Matrix& m);

// max |(MZ) + (MZ)^T| entry over scale: 0 for self-dual M
double self_duality_residual(const Matrix& m);

// Pfaffian of an antisymmetric 2k x 2k matrix by skew-symmetric elimination
// with pivoting.  Pf(M)^2 = det(M).
double pfaffian(Matrix m);

// Quaternion determinant of a self-dual matrix, normalized so qdet(1) = 1;
// equals Pf(MZ)/Pf(Z).
double qdet(const Matrix& m);

} // namespace rmt::pfaff

#endif
