#include "rmt/mcmc.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace rmt::mcmc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_density(const EnsembleSpec& spec, const Configuration& coords) {
    spec.validate();
    const int n = spec.n;
    if (static_cast<int>(coords.size()) != 2 * n)
        throw std::invalid_argument("log_density: 2n coordinates required");
    const double lo = spec.support_lo(), hi = spec.support_hi();
    for (int i = 0; i < 2 * n; ++i) {
        if (!(coords[i] >= lo) || !(coords[i] < hi)) return kNegInf;
        if (i > 0 && !(coords[i - 1] > coords[i])) return kNegInf;
    }
    double logp = 0.0;
    if (is_laguerre(spec.family)) {
        for (int i = 0; i < 2 * n; ++i) logp -= 0.5 * coords[i];
        for (int l = 0; l < n; ++l) logp += 0.5 * spec.A * (coords[2 * l] - coords[2 * l + 1]);
    } else {
        for (int i = 0; i < 2 * n; ++i) logp += 0.5 * (spec.a - 1.0) * std::log(1.0 - coords[i]);
        for (int l = 0; l < n; ++l)
            logp -= 0.5 * spec.A
                    * (std::log(1.0 - coords[2 * l]) - std::log(1.0 - coords[2 * l + 1]));
    }
    if (is_superposition(spec.family)) {
        // split Vandermonde over odd- and even-labelled coordinates
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                logp += std::log(coords[2 * j] - coords[2 * k]);
                logp += std::log(coords[2 * j + 1] - coords[2 * k + 1]);
            }
    } else {
        for (int j = 0; j < 2 * n; ++j)
            for (int k = j + 1; k < 2 * n; ++k) logp += std::log(coords[j] - coords[k]);
    }
    return logp;
}

Samples run_chain(const EnsembleSpec& spec, const ChainOptions& opts) {
    spec.validate();
    if (opts.sweeps < 1) throw std::invalid_argument("run_chain: sweeps >= 1 required");
    const int n2 = 2 * spec.n;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // spread the initial configuration over the typical support
    Configuration x(n2);
    if (is_laguerre(spec.family)) {
        for (int i = 0; i < n2; ++i) x[i] = 2.0 * (n2 - i);
    } else {
        for (int i = 0; i < n2; ++i) x[i] = 0.9 - 1.8 * (i + 0.5) / n2;
    }
    double logp = log_density(spec, x);

    std::vector<double> step(n2, is_laguerre(spec.family) ? 1.0 : 0.2);
    const int burn = std::max(1, static_cast<int>(opts.burn_in_fraction * opts.sweeps));
    std::vector<int> acc(n2, 0), tot(n2, 0);
    long long accepted = 0, proposed = 0;

    Samples out;
    out.n_pairs = spec.n;
    out.kept.reserve((opts.sweeps - burn) / opts.thin + 1);

    for (int sweep = 0; sweep < opts.sweeps; ++sweep) {
        for (int i = 0; i < n2; ++i) {
            const double old = x[i];
            const double prop = old + step[i] * (2.0 * unif(rng) - 1.0);
            x[i] = prop;
            const double logp_new = log_density(spec, x);
            const bool take = std::isfinite(logp_new)
                              && (logp_new >= logp || unif(rng) < std::exp(logp_new - logp));
            if (take) {
                logp = logp_new;
                ++acc[i];
                ++accepted;
            } else {
                x[i] = old;
            }
            ++tot[i];
            ++proposed;
        }
        if (sweep < burn) {
            // per-coordinate adaptation toward the target rate, frozen after
            if (sweep % 50 == 49) {
                for (int i = 0; i < n2; ++i) {
                    const double rate = static_cast<double>(acc[i]) / std::max(1, tot[i]);
                    step[i] *= std::exp(0.6 * (rate - opts.target_accept));
                    acc[i] = 0;
                    tot[i] = 0;
                }
                accepted = 0;
                proposed = 0;
            }
        } else {
            if ((sweep - burn) % opts.thin == 0) out.kept.push_back(x);
        }
    }
    out.acceptance_rate = proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
    out.acceptance_in_band = out.acceptance_rate >= 0.1 && out.acceptance_rate <= 0.9;
    return out;
}

Histogram estimate_rho(const Samples& samples, Parity parity, int k, double lo, double hi,
                       int bins, double anchor, double window) {
    if (k != 1 && k != 2) throw std::invalid_argument("estimate_rho: k in {1,2} required");
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("estimate_rho: bad binning");
    Histogram h;
    h.binwidth = (hi - lo) / bins;
    h.centers.resize(bins);
    for (int b = 0; b < bins; ++b) h.centers[b] = lo + (b + 0.5) * h.binwidth;

    const std::size_t nkept = samples.kept.size();
    const int nbatch = 50;
    const std::size_t batch_len = std::max<std::size_t>(1, nkept / nbatch);
    std::vector<std::vector<double>> batch_counts(nbatch, std::vector<double>(bins, 0.0));
    std::vector<std::size_t> batch_sizes(nbatch, 0);

    auto selected = [&](int idx) {
        if (parity == Parity::All) return true;
        const bool odd = (idx % 2 == 0);  // x_1 (index 0) is odd-labelled
        return parity == Parity::Odd ? odd : !odd;
    };

    for (std::size_t s = 0; s < nkept; ++s) {
        const std::size_t b = std::min<std::size_t>(nbatch - 1, s / batch_len);
        ++batch_sizes[b];
        const auto& cfg = samples.kept[s];
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            if (!selected(static_cast<int>(i))) continue;
            if (k == 2) {
                // second point inside the anchor window, first point binned
                bool partner = false;
                for (std::size_t j = 0; j < cfg.size(); ++j)
                    if (j != i && selected(static_cast<int>(j))
                        && std::fabs(cfg[j] - anchor) <= 0.5 * window) {
                        partner = true;
                        break;
                    }
                if (!partner) continue;
            }
            const double v = cfg[i];
            if (v < lo || v >= hi) continue;
            const int bin = static_cast<int>((v - lo) / h.binwidth);
            batch_counts[b][bin] += 1.0;
        }
    }

    h.density.assign(bins, 0.0);
    h.stderr_.assign(bins, 0.0);
    const double norm_window = (k == 2) ? window : 1.0;
    std::vector<double> means(nbatch);
    for (int b = 0; b < bins; ++b) {
        double mean = 0.0;
        int used = 0;
        for (int q = 0; q < nbatch; ++q) {
            if (batch_sizes[q] == 0) continue;
            means[used++] = batch_counts[q][b] / (batch_sizes[q] * h.binwidth * norm_window);
        }
        for (int q = 0; q < used; ++q) mean += means[q];
        mean /= std::max(1, used);
        double var = 0.0;
        for (int q = 0; q < used; ++q) var += (means[q] - mean) * (means[q] - mean);
        var /= std::max(1, used * (used - 1));
        h.density[b] = mean;
        h.stderr_[b] = std::sqrt(var);
    }
    return h;
}

double stationarity_z(const Samples& samples, int coordinate) {
    const std::size_t n = samples.kept.size();
    if (n < 20) throw std::invalid_argument("stationarity_z: too few samples");
    const std::size_t half = n / 2;
    const int nbatch = 20;
    auto batch_mean_se = [&](std::size_t from, std::size_t to, double& mean, double& se) {
        const std::size_t len = (to - from) / nbatch;
        std::vector<double> bm(nbatch, 0.0);
        for (int q = 0; q < nbatch; ++q) {
            double s = 0.0;
            for (std::size_t i = from + q * len; i < from + (q + 1) * len; ++i)
                s += samples.kept[i][coordinate];
            bm[q] = s / len;
        }
        mean = 0.0;
        for (double v : bm) mean += v;
        mean /= nbatch;
        double var = 0.0;
        for (double v : bm) var += (v - mean) * (v - mean);
        se = std::sqrt(var / (nbatch * (nbatch - 1.0)));
    };
    double m1, se1, m2, se2;
    batch_mean_se(0, half, m1, se1);
    batch_mean_se(half, n, m2, se2);
    return (m1 - m2) / std::sqrt(se1 * se1 + se2 * se2 + 1e-300);
}

} // namespace rmt::mcmc
