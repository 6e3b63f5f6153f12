#include "rmt/ensemble.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {

std::string family_name(Family f) {
    switch (f) {
        case Family::LagSuper: return "lag-super";
        case Family::LagDecim: return "lag-decim";
        case Family::JacSuper: return "jac-super";
        case Family::JacDecim: return "jac-decim";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "lag-super") return Family::LagSuper;
    if (name == "lag-decim") return Family::LagDecim;
    if (name == "jac-super") return Family::JacSuper;
    if (name == "jac-decim") return Family::JacDecim;
    throw std::invalid_argument("unknown family '" + name
                                + "' (expected lag-super|lag-decim|jac-super|jac-decim)");
}

void EnsembleSpec::validate() const {
    if (n < 1) throw std::invalid_argument("EnsembleSpec: n >= 1 required");
    if (!is_laguerre(family) && !(a > -1.0))
        throw std::invalid_argument("EnsembleSpec: a > -1 required");
    if (is_laguerre(family)) {
        if (!(A < 1.0)) throw std::invalid_argument("EnsembleSpec: A < 1 required");
    } else {
        if (!(A < a + 1.0)) throw std::invalid_argument("EnsembleSpec: A < a+1 required");
    }
}

double EnsembleSpec::weight(double x) const {
    if (is_laguerre(family)) return std::exp(-0.5 * x);
    return std::pow(1.0 - x, 0.5 * (a - 1.0));
}

double EnsembleSpec::kappa(double x, double y) const {
    if (!(x > y)) return 0.0;
    if (is_laguerre(family)) return std::exp(0.5 * A * (x - y));
    return std::pow((1.0 - x) / (1.0 - y), -0.5 * A);
}

double EnsembleSpec::epsilon(double x, double y) const {
    if (x == y) return 0.0;  // sgn(0) := 0
    if (x > y) return kappa(x, y);
    return -kappa(y, x);
}

} // namespace rmt
