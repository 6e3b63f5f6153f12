#ifndef RMT_QUAD_HPP
#define RMT_QUAD_HPP

#include <functional>
#include <string>
#include <vector>

#include "rmt/linalg.hpp"

namespace rmt::quad {

// Gaussian quadrature rule: nodes strictly increasing, weights positive.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::string descriptor;

    double integrate(const std::function<double(double)>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

// Exact for polynomials of degree <= 2m-1 on [-1,1].
QuadratureRule gauss_legendre(int m);

// Weight x^a e^{-x} on (0,inf).
QuadratureRule gauss_laguerre(int m, double a);

// Weight (1-x)^a (1+x)^b on (-1,1).
QuadratureRule gauss_jacobi(int m, double a, double b);

// Affine image of a rule on [-1,1] onto [lo,hi].
QuadratureRule mapped(const QuadratureRule& base, double lo, double hi);

// Default orders; RMT_QUAD_ORDER overrides the semi-infinite default.
int default_semiinf_order();
int default_finite_order();

// int_y^inf f(x) exp(-decay*(x-y)) dx * exp(-decay*y), i.e. the integral of
// the declared integrand f(x) e^{-decay x} over (y, inf), by shifted
// Gauss-Laguerre.  decay must be positive.
double integrate_semiinf(const std::function<double(double)>& f, double y, double decay, int m);

// Fixed-order Gauss-Legendre over [lo,hi].
double integrate_finite(const std::function<double(double)>& f, double lo, double hi, int m);

// Composite Gauss-Legendre with panels of width <= h.
double integrate_panels(const std::function<double(double)>& f, double lo, double hi,
                        double h, int pts_per_panel = 12);

// Adaptive Simpson, used as a test oracle only.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-12, int max_depth = 40);

// Nystrom discretization G_ij = sqrt(w_i w_j) K(x_i, x_j) on [lo,hi].
Matrix nystrom(const std::function<double(double, double)>& kernel, double lo, double hi, int m);

} // namespace rmt::quad

#endif
