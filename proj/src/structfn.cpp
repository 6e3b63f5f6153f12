#include "rmt/structfn.hpp"

#include <cmath>
#include <limits>
#include <functional>
#include <stdexcept>

#include "rmt/quad.hpp"

namespace rmt::structfn {

double s_bulk_box_piece(double k) {
    const double ak = std::fabs(k);
    return (ak < 2.0 * M_PI) ? 2.0 * M_PI - ak : 0.0;
}

double s_bulk(double alpha, double k) {
    const double ak = std::fabs(k);
    const double c = 0.25 * alpha * alpha;  // (alpha/2)^2
    const double k2 = k * k;
    if (ak < 2.0 * M_PI) {
        if (alpha == 0.0) {
            // the log|1 - |k|/pi| term carries an alpha^2 prefactor; at
            // alpha = 0 the branch reduces to the orthogonal-ensemble form
            return ak / M_PI - ak / (2.0 * M_PI) * std::log1p(ak / M_PI);
        }
        const double atdiff = std::atan(2.0 * M_PI / alpha)
                              - std::atan((2.0 * ak + 2.0 * M_PI) / alpha);
        const double logring = std::log((c + (ak + M_PI) * (ak + M_PI)) / (c + M_PI * M_PI));
        const double gap = std::fabs(1.0 - ak / M_PI);
        if (gap == 0.0) return std::numeric_limits<double>::infinity();
        return ak / M_PI
               + ak / (4.0 * M_PI * (c + k2))
                     * (alpha * ak * atdiff - (0.5 * alpha * alpha + k2) * logring
                        - 0.5 * alpha * alpha * std::log(gap));
    }
    if (alpha == 0.0)
        return 2.0 - ak / (4.0 * M_PI)
                         * std::log(((ak + M_PI) * (ak + M_PI)) / ((ak - M_PI) * (ak - M_PI)));
    const double at1 = std::atan(2.0 * (ak - M_PI) / alpha);
    const double at2 = std::atan(2.0 * (ak + M_PI) / alpha);
    return 2.0 + alpha * k2 * at1 / (4.0 * M_PI * (c + k2))
           - alpha * k2 * at2 / (4.0 * M_PI * (c + k2))
           - (2.0 * c * ak + ak * ak * ak) / (4.0 * M_PI * (c + k2))
                 * std::log((c + (ak + M_PI) * (ak + M_PI)) / (c + (ak - M_PI) * (ak - M_PI)));
}

double s_bulk_series(double alpha, double k) {
    const double ak = std::fabs(k);
    const double c = 0.25 * alpha * alpha;
    const double p2 = M_PI * M_PI;
    const double c2 = (c - p2) / (2.0 * p2 * (c + p2));
    const double c3 = (c - p2) * (c - p2) / (4.0 * p2 * M_PI * (c + p2) * (c + p2));
    return ak / M_PI + c2 * k * k + c3 * ak * ak * ak;
}

namespace {

// transformed matrix elements (bulk):
//   f11-hat = f22-hat = chi_{|l| < pi}
//   f12-hat = ((alpha/2)^2 + l^2) / (2 i l) chi_{|l| < pi}
//   f21-hat = -2 i l / ((alpha/2)^2 + l^2) chi_{|l| > pi}
// The 12*21 convolution integrand over |l| < pi, |l - k| > pi:
double conv_integrand(double alpha, double k, double l) {
    const double c = 0.25 * alpha * alpha;
    const double m = l - k;
    return -(c + l * l) / l * m / (c + m * m);
}

} // namespace

namespace {

// integral of f over a segment (A, B) with 0 outside; the l = sign e^u map
// keeps the 1/l approach resolved however close the endpoint sits to 0
double pole_segment(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    if (a > 0.0)
        return quad::integrate_panels(
            [&](double u) { return f(std::exp(u)) * std::exp(u); }, std::log(a), std::log(b),
            0.05);
    if (b < 0.0)
        return quad::integrate_panels(
            [&](double u) { return f(-std::exp(u)) * std::exp(u); }, std::log(-b), std::log(-a),
            0.05);
    throw std::invalid_argument("pole_segment: segment must not contain 0");
}

} // namespace

double s_bulk_numeric(double alpha, double k) {
    const double ak = std::fabs(k);
    // chi * chi piece
    double total = s_bulk_box_piece(k);
    // 12 * 21 piece: l in (-pi, min(pi, k - pi)) after the support constraints
    const double hi = std::min(M_PI, ak - M_PI);
    if (hi > -M_PI) {
        const double lo = -M_PI;
        auto f = [&](double l) { return conv_integrand(alpha, ak, l); };
        double piece = 0.0;
        if (hi > 0.0) {
            // principal value at l = 0 by symmetric pairing on (-d, d)
            const double d = std::min(-lo, hi);
            piece += quad::integrate_panels(
                [&](double l) { return f(l) + f(-l); }, 1e-13, d, d / 64.0);
            if (hi > d) piece += pole_segment(f, d, hi);
            if (-lo > d) piece += pole_segment(f, lo, -d);
        } else {
            piece = pole_segment(f, lo, hi);
        }
        total += piece;
    }
    return 1.0 - total / (2.0 * M_PI);
}

} // namespace rmt::structfn
