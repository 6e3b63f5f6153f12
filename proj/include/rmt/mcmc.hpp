#ifndef RMT_MCMC_HPP
#define RMT_MCMC_HPP

#include <cstdint>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt::mcmc {

// strictly decreasing coordinates x_1 > x_2 > ... > x_{2n} within support
using Configuration = std::vector<double>;

// log of the unnormalized density; -infinity outside the ordered cone
double log_density(const EnsembleSpec& spec, const Configuration& coords);

struct ChainOptions {
    int sweeps = 100000;
    std::uint64_t seed = 1;
    double burn_in_fraction = 0.1;
    int thin = 1;          // keep every thin-th sweep after burn-in
    double target_accept = 0.4;
};

struct Samples {
    std::vector<Configuration> kept;  // one configuration per kept sweep
    double acceptance_rate = 0.0;
    bool acceptance_in_band = true;   // within [0.1, 0.9] after adaptation
    int n_pairs = 0;
};

// Metropolis chain over the ordered representation: symmetric single
// coordinate proposals, adaptive step during burn-in then frozen.
Samples run_chain(const EnsembleSpec& spec, const ChainOptions& opts);

enum class Parity { All, Odd, Even };

struct Histogram {
    std::vector<double> centers;
    std::vector<double> density;  // per-bin rho_k estimate
    std::vector<double> stderr_;  // batch-means standard error
    double binwidth = 0.0;
};

// binned k-point estimator (k = 1 or 2; for k = 2 the first coordinate runs
// over bins and the second is confined to window around `anchor`)
Histogram estimate_rho(const Samples& samples, Parity parity, int k, double lo, double hi,
                       int bins, double anchor = 0.0, double window = 0.0);

// Geweke-style two-halves z score for the mean of coordinate index
double stationarity_z(const Samples& samples, int coordinate);

} // namespace rmt::mcmc

#endif
