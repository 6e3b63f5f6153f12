#ifndef RMT_KERNELS_HPP
#define RMT_KERNELS_HPP

#include <vector>

namespace rmt::kernels {

enum class KernelFamily { Laguerre, Jacobi };

// Finite-n unitary-ensemble kernel
//   Laguerre: (xy)^{a/2} e^{-(x+y)/2} sum_{l<n} L_l^a(x) L_l^a(y) / h_l
//   Jacobi:   ((1-x)(1-y))^{(a-1)/2} ((1+x)(1+y))^{b/2}
//             sum_{l<n} P_l^{(a,b)}(x) P_l^{(a,b)}(y) / h_l
struct KernelSpec {
    KernelFamily family = KernelFamily::Laguerre;
    int n = 1;
    double a = 0.0;
    double b = 0.0;  // Jacobi only

    static KernelSpec laguerre(int n, double a);
    static KernelSpec jacobi(int n, double a, double b);
    void validate() const;
};

// Weighted orthonormal functions phi_l(x) = w(x)^{1/2}-style factors folded in,
// i.e. the summands of the kernel: phi_l(x) phi_l(y) sums to the kernel.
std::vector<double> weighted_funcs(const KernelSpec& spec, double x);
std::vector<double> weighted_funcs_deriv(const KernelSpec& spec, double x);

double kernel_eval(const KernelSpec& spec, double x, double y);

// derivative with respect to the first argument
double kernel_deriv1(const KernelSpec& spec, double x, double y);

// Christoffel-Darboux two-term form; routes |x-y| < 1e-8 through the
// confluent branch.
double kernel_cd(const KernelSpec& spec, double x, double y);

// det[K(x_j,x_l)] (Laguerre) or det[(1-x_l) K(x_j,x_l)] (Jacobi).
double rho_ue(const KernelSpec& spec, const std::vector<double>& points);

// ---- analytic kernel integrals (a=0 Laguerre / b=0 Jacobi families) -------
// tail_int(spec, arg, lower)   = int_lower^edge K(arg, t) dt
// tail_int_d(spec, arg, lower) = d/darg of the same
// where edge = +inf (Laguerre) or 1 (Jacobi).  Closed forms from the
// polynomial integration identities; no quadrature.
double tail_int(const KernelSpec& spec, double arg, double lower);
double tail_int_d(const KernelSpec& spec, double arg, double lower);

// Convenience for identity tests: c, phi, psi from the kernel derivative
// identities, Laguerre (index n, parameter a) and Jacobi (n, a, b).
double lag_c(int n, double a);
double lag_phi(int n, double a, double x);
double lag_psi(int n, double a, double x);
double jac_c(int n, double a, double b);
double jac_phi(int n, double a, double b, double x);
double jac_psi(int n, double a, double b, double x);

// Integral representations used as cross-validation oracles:
// Laguerre: K_{n,a}(x,y) = c int_0^inf (phi(x+t) psi(y+t) + phi(y+t) psi(x+t)) dt
double kernel_from_integral_rep_laguerre(int n, double a, double x, double y);
// Jacobi: 4 x y K_{n,a,b}(1-2x, 1-2y) = c int_0^1 (...) du/u, evaluated with
// the u = v^2 endpoint substitution; returns K_{n,a,b}(X, Y) for X,Y in (-1,1).
double kernel_from_integral_rep_jacobi(int n, double a, double b, double X, double Y);

} // namespace rmt::kernels

#endif
