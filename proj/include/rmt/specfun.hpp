#ifndef RMT_SPECFUN_HPP
#define RMT_SPECFUN_HPP

#include <vector>

namespace rmt::specfun {

// Generalized Laguerre polynomial L_n^a(x), forward three-term recurrence.
// Requires a > -1.
double laguerre(int n, double a, double x);

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x).
double laguerre_deriv(int n, double a, double x);

// All of L_0^a(x) .. L_{nmax}^a(x) in one recurrence pass.
std::vector<double> laguerre_all(int nmax, double a, double x);

// Jacobi polynomial P_n^{(a,b)}(x).  Requires a, b > -1.
double jacobi(int n, double a, double b, double x);

// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_deriv(int n, double a, double b, double x);

std::vector<double> jacobi_all(int nmax, double a, double b, double x);

// Squared norms: int w p_n^2 with w = x^a e^{-x} resp. (1-x)^a (1+x)^b.
double laguerre_norm(int n, double a);
double jacobi_norm(int n, double a, double b);

// Bessel function J_nu(x) for nu >= 0, x >= 0.
double bessel_j(double nu, double x);

// J_nu'(x), via J_nu' = (nu/x) J_nu - J_{nu+1}.
double bessel_j_deriv(double nu, double x);

// J_{nu}(x), J_{nu+1}(x), ..., J_{nu+count-1}(x) in one sweep.
std::vector<double> bessel_j_seq(double nu, int count, double x);

// Airy function and derivative, absolute accuracy ~1e-13 on [-10, 10].
double airy_ai(double x);
double airy_ai_prime(double x);

// exp(lgamma(p) - lgamma(q)); keeps norm ratios finite for large degree.
double gamma_ratio(double p, double q);

} // namespace rmt::specfun

#endif
