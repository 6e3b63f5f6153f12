#ifndef RMT_GAPS_HPP
#define RMT_GAPS_HPP

#include <functional>
#include <vector>

#include "rmt/linalg.hpp"

namespace rmt::gaps {

// Fredholm determinant det(1 - xi K) of a scalar kernel on [lo, hi] by
// Gauss-Legendre Nystrom discretization of order m.
double fredholm_det(const std::function<double(double, double)>& kernel, double lo, double hi,
                    int m, double xi = 1.0);

// 2x2 matrix kernels discretize to a 2m x 2m system; the quaternion
// determinant is the sign-fixed square root of the ordinary determinant,
// with the branch selected by continuity from xi = 0.
double fredholm_qdet(const std::function<void(double, double, double*)>& kernel2x2, double lo,
                     double hi, int m, double xi = 1.0);

// E(p) = ((-1)^p / p!) d^p/dxi^p det(1 - xi K) |_{xi=1} for p = 0..pmax,
// derivative by a Chebyshev-node polynomial fit of det(1 - xi K) on [0, 1.2].
// The optional convergence check doubles m and reports the shift.
std::vector<double> gap_probabilities(const std::function<double(double, double)>& kernel,
                                      double lo, double hi, int m, int pmax,
                                      double* self_convergence = nullptr);

// parity <-> blind counting conversions for I = (s, inf):
//   E_odd(p) = E(2p-1) + E(2p), E_even(p) = E(2p) + E(2p+1), E(-1) := 0
struct ParityGaps {
    std::vector<double> odd;
    std::vector<double> even;
};

ParityGaps parity_from_blind(const std::vector<double>& blind);
// inverse by the telescoping sums; blind has odd.size() + even.size() entries
std::vector<double> blind_from_parity(const ParityGaps& parity);

// PDF of the (k-1)-indexed ordered eigenvalue from gap probabilities:
// p(k-1; s) = d/ds E(k-1; (s,inf)) + p(k-2; s), central differences with
// step control.
double eig_pdf(int k, double s, const std::function<double(int, double)>& gap_at, double h0 = 1e-3);

} // namespace rmt::gaps

#endif
