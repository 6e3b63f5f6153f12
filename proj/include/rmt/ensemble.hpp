#ifndef RMT_ENSEMBLE_HPP
#define RMT_ENSEMBLE_HPP

#include <limits>
#include <string>

namespace rmt {

// The four parameter-dependent eigenvalue densities on 2n ordered points.
// Superposition families carry the split (odd/even) Vandermonde and have
// determinantal parity correlations; decimation families carry the full
// Vandermonde and have Pfaffian (quaternion determinant) correlations.
enum class Family { LagSuper, LagDecim, JacSuper, JacDecim };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

inline bool is_laguerre(Family f) { return f == Family::LagSuper || f == Family::LagDecim; }
inline bool is_superposition(Family f) { return f == Family::LagSuper || f == Family::JacSuper; }

struct EnsembleSpec {
    Family family = Family::LagSuper;
    int n = 1;       // pair count; the configuration has 2n coordinates
    double a = 0.0;  // Jacobi weight parameter (> -1); ignored for Laguerre
    double A = 0.0;  // coupling parameter

    void validate() const;

    // normalizability bound: A < 1 (Laguerre), A < a+1 (Jacobi)
    double a_bound() const { return is_laguerre(family) ? 1.0 : a + 1.0; }

    double support_lo() const { return is_laguerre(family) ? 0.0 : -1.0; }
    double support_hi() const {
        return is_laguerre(family) ? std::numeric_limits<double>::infinity() : 1.0;
    }

    // one-body weight w(x) shared by both parities, and the pairing kernel
    // kappa(x,y) (nonzero for x > y); epsilon(x,y) is the antisymmetrized
    // version used by the parity-blind correlations.
    double weight(double x) const;
    double kappa(double x, double y) const;
    double epsilon(double x, double y) const;
};

} // namespace rmt

#endif
