#ifndef RMT_STRUCTFN_HPP
#define RMT_STRUCTFN_HPP

namespace rmt::structfn {

// Bulk structure function S(k) of the decimated ensemble with scaled
// parameter alpha <= 0.  Closed form with the |k| < 2pi and |k| >= 2pi
// branches; even in k.  At |k| = pi the value diverges logarithmically for
// alpha != 0 (finite for alpha = 0); the guarded evaluation returns +inf
// there.
double s_bulk(double alpha, double k);

// small-|k| expansion |k|/pi + c2 k^2 + c3 |k|^3
double s_bulk_series(double alpha, double k);

// Fourier-side numerical evaluation through the transformed matrix
// elements; serves as the oracle for s_bulk.
double s_bulk_numeric(double alpha, double k);

// the chi-chi convolution piece: 2pi - |k| for |k| < 2pi, else 0
double s_bulk_box_piece(double k);

} // namespace rmt::structfn

#endif
