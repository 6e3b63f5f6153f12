// Command-line surface: kernel/correlation/scaled-limit evaluation on grids,
// bulk structure function, gap probabilities, Monte Carlo sampling and the
// invariant verification suite.  Output is CSV or JSON with a meta block.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/gaps.hpp"
#include "rmt/kernels.hpp"
#include "rmt/mcmc.hpp"
#include "rmt/pfaff.hpp"
#include "rmt/quad.hpp"
#include "rmt/scaled.hpp"
#include "rmt/skewcorr.hpp"
#include "rmt/specfun.hpp"
#include "rmt/structfn.hpp"
#include "rmt/supercorr.hpp"

using json = nlohmann::json;
using namespace rmt;

namespace {

constexpr int kExitParameter = 2;
constexpr int kExitNumerical = 3;

struct Grid {
    double lo = 0.0, hi = 1.0;
    int count = 1;

    static Grid parse(const std::string& s) {
        Grid g;
        std::istringstream in(s);
        char c1, c2;
        if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || g.count < 1)
            throw CLI::ValidationError("grid", "expected min:max:count with count >= 1");
        return g;
    }

    double at(int i) const {
        if (count == 1) return lo;
        return lo + (hi - lo) * i / (count - 1.0);
    }
};

struct OutputSink {
    std::string path;
    std::string format = "csv";
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json meta;

    void write() const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output path " + path);
            os = &file;
        }
        if (format == "csv") {
            for (std::size_t i = 0; i < columns.size(); ++i)
                *os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
            os->precision(17);
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    *os << r[i] << (i + 1 < r.size() ? "," : "\n");
            }
        } else {
            json j;
            j["meta"] = meta;
            j["columns"] = columns;
            j["rows"] = rows;
            *os << j.dump(2) << "\n";
        }
    }
};

std::vector<double> parse_points(const std::string& csv) {
    std::vector<double> pts;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) pts.push_back(std::stod(tok));
    return pts;
}

EnsembleSpec make_spec(const std::string& family, int n, double a, double A) {
    EnsembleSpec spec;
    spec.family = family_from_name(family);
    spec.n = n;
    spec.a = a;
    spec.A = A;
    spec.validate();
    return spec;
}

scaled::ScalingSpec make_scaling(const std::string& regime, double a, double alpha,
                                 const std::string& source) {
    scaled::ScalingSpec sp;
    if (regime == "bulk")
        sp.regime = scaled::Regime::Bulk;
    else if (regime == "soft")
        sp.regime = scaled::Regime::Soft;
    else if (regime == "hard")
        sp.regime = scaled::Regime::Hard;
    else if (regime == "hard1")
        sp.regime = scaled::Regime::HardAtOne;
    else
        throw std::invalid_argument("regime must be bulk|soft|hard|hard1");
    sp.a = a;
    sp.alpha = alpha;
    sp.source = (source == "decim") ? scaled::Source::Decimation : scaled::Source::Superposition;
    sp.validate();
    return sp;
}

// ---- verify suite -----------------------------------------------------------

struct VerifyReport {
    int failures = 0;

    void check(const std::string& name, double residual, double tol) {
        const bool ok = residual < tol;
        if (!ok) ++failures;
        std::printf("%-58s %10.3e  (tol %g)  %s\n", name.c_str(), residual, tol,
                    ok ? "PASS" : "FAIL");
    }
};

double run_verify(const std::string& suite) {
    VerifyReport rep;
    const bool full = (suite == "full");

    {  // orthogonal polynomial identities
        double worst = 0.0;
        for (int p = 1; p <= 10; ++p)
            for (double t : {0.4, 2.0, 6.5}) {
                double s = specfun::laguerre_deriv(p, 0.0, t);
                for (int l = 0; l < p; ++l) s += specfun::laguerre(l, 0.0, t);
                worst = std::max(worst, std::fabs(s));
            }
        rep.check("laguerre derivative identity", worst, 1e-10);
    }
    {  // quadrature exactness
        auto r = quad::gauss_legendre(16);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], 30);
        rep.check("gauss-legendre degree-30 exactness", std::fabs(s - 2.0 / 31.0), 1e-13);
    }
    {  // biorthogonality
        double worst = 0.0;
        for (double A : {-1.0, 0.5}) {
            EnsembleSpec spec = make_spec("lag-super", 4, 0.0, A);
            supercorr::BiorthoBasis basis(spec, 5);
            const auto inner = quad::gauss_laguerre(40, 0.0);
            const auto outer = quad::gauss_laguerre(40, 0.0);
            const double decay = 0.5 * (1.0 - A);
            for (int p = 0; p <= 5; ++p)
                for (int q = 0; q <= 5; ++q) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
                        double g = 0.0;
                        for (std::size_t k2 = 0; k2 < inner.nodes.size(); ++k2)
                            g += inner.weights[k2]
                                 * supercorr::biortho_q(basis, q,
                                                        outer.nodes[i] + inner.nodes[k2] / decay);
                        s += outer.weights[i] * supercorr::biortho_p(basis, p, outer.nodes[i]) * g
                             / decay;
                    }
                    const double expect = (p == q) ? basis.norms[p] : 0.0;
                    worst = std::max(worst, std::fabs(s - expect));
                }
        }
        rep.check("laguerre biorthogonality", worst, 1e-9);
    }
    {  // A-independence of even-even correlations
        const std::vector<double> pts = {0.7, 2.4};
        const double ref = supercorr::rho_super(make_spec("lag-super", 3, 0.0, 0.0), {}, pts);
        double worst = 0.0;
        for (double A : {-4.0, 0.9})
            worst = std::max(worst, std::fabs(supercorr::rho_super(make_spec("lag-super", 3, 0.0, A),
                                                                    {}, pts)
                                              - ref));
        rep.check("superposition even-even A-independence", worst, 1e-8);
    }
    {  // qdet vs det
        Matrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i) m(i, i) = 1.4;
        m(0, 1) = 0.3;
        m(1, 0) = -0.2;
        m(2, 3) = -0.1;
        m(3, 2) = 0.15;
        // symmetrize into a self-dual matrix
        const Matrix z = pfaff::symplectic_unit(6);
        Matrix zt(6, 6), mt(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                zt(i, j) = -z(i, j);
                mt(i, j) = m(j, i);
            }
        Matrix proj = zt * mt * z;
        Matrix sd(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) sd(i, j) = 0.5 * (m(i, j) + proj(i, j));
        const double q = pfaff::qdet(sd);
        rep.check("qdet^2 = det", std::fabs(q * q - det(sd)), 1e-10);
    }
    {  // skew orthogonality (quick: Laguerre only)
        EnsembleSpec spec = make_spec("lag-decim", 4, 0.0, -1.0);
        skewcorr::SkewCoeffs coeffs(spec);
        const auto inner = quad::gauss_laguerre(40, 0.0);
        const auto outer = quad::gauss_laguerre(40, 0.0);
        const double decay = 0.5 * (1.0 - spec.A);
        double worst = 0.0;
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k) {
                double s = 0.0;
                for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
                    const double y = outer.nodes[i];
                    double gj = 0.0, gk = 0.0;
                    for (std::size_t q2 = 0; q2 < inner.nodes.size(); ++q2) {
                        const double x = y + inner.nodes[q2] / decay;
                        gj += inner.weights[q2] * skewcorr::skew_poly(coeffs, j, x);
                        gk += inner.weights[q2] * skewcorr::skew_poly(coeffs, k, x);
                    }
                    s += outer.weights[i]
                         * (skewcorr::skew_poly(coeffs, j, y) * gk
                            - skewcorr::skew_poly(coeffs, k, y) * gj)
                         / decay;
                }
                double expect = 0.0;
                if (j % 2 == 0 && k == j + 1) expect = coeffs.r(j / 2);
                if (j % 2 == 1 && k == j - 1) expect = -coeffs.r(k / 2);
                worst = std::max(worst, std::fabs(s - expect));
            }
        rep.check("laguerre skew orthogonality", worst, 1e-8);
    }
    {  // blind blocks against the defining sums
        EnsembleSpec spec = make_spec("lag-decim", 2, 0.0, 0.5);
        skewcorr::SkewCoeffs coeffs(spec);
        const auto closed = skewcorr::f_blind(spec, 0.5, 1.6);
        const auto sum = skewcorr::f_blind_sum(coeffs, 0.5, 1.6);
        const double worst = std::max({std::fabs(closed.e11 - sum.e11),
                                       std::fabs(closed.e12 - sum.e12),
                                       std::fabs(closed.e21 - sum.e21),
                                       std::fabs(closed.e22 - sum.e22)});
        rep.check("parity-blind block vs defining sum", worst, 1e-7);
    }
    {  // structure function
        const double r1 = std::fabs(structfn::s_bulk(0.0, M_PI) - (1.0 - 0.5 * std::log(2.0)));
        rep.check("structure function alpha=0 at k=pi", r1, 1e-12);
        const double r2 = std::fabs(structfn::s_bulk(-2.0, 1.0) - structfn::s_bulk_numeric(-2.0, 1.0));
        rep.check("structure function vs transform oracle", r2, 1e-6);
    }
    {  // scaled-limit identities
        rep.check("bessel-shift identity",
                  std::fabs(std::sqrt(0.5) * scaled::k_scaled(scaled::Regime::Hard, 1.0, 1.0, 2.0)
                            - scaled::bessel_kernel_shift(0.0, 1.0, 2.0)),
                  1e-12);
        rep.check("hard-edge orthogonal reconciliation",
                  std::fabs(scaled::ir11_hard(1.0, 1.3, 2.2) - scaled::fk11_hard(0.0, 1.3, 2.2)),
                  1e-8);
        if (full)
            rep.check("hard-edge symplectic reconciliation",
                      std::fabs(scaled::tf22_hard(0.0, 1.3, 2.2)
                                - scaled::fnh22_hard(1.0, 1.3, 2.2)),
                      1e-8);
    }
    {  // gap machinery
        auto sine = [](double x, double y) {
            const double d = x - y;
            return (std::fabs(d) < 1e-10) ? 1.0 : std::sin(M_PI * d) / (M_PI * d);
        };
        const double d40 = gaps::fredholm_det(sine, 0.0, 1.0, 40);
        const double d80 = gaps::fredholm_det(sine, 0.0, 1.0, 80);
        rep.check("sine-kernel Nystrom self-convergence", std::fabs(d40 - d80), 1e-10);
        std::vector<double> blind = {0.3, 0.25, 0.2, 0.15, 0.06, 0.04};
        const auto parity = gaps::parity_from_blind(blind);
        const auto back = gaps::blind_from_parity(parity);
        double worst = 0.0;
        for (std::size_t i = 0; i < blind.size(); ++i)
            worst = std::max(worst, std::fabs(blind[i] - back[i]));
        rep.check("parity conversion round trip", worst, 1e-14);
    }
    if (full) {  // MC cross-check (slower)
        EnsembleSpec spec = make_spec("lag-decim", 1, 0.0, -1.0);
        mcmc::ChainOptions opts;
        opts.sweeps = 200000;
        opts.seed = 7;
        const auto samples = mcmc::run_chain(spec, opts);
        const auto hist = mcmc::estimate_rho(samples, mcmc::Parity::Even, 1, 0.0, 6.0, 10);
        auto rho_at = [&](double y) {
            Matrix m(2, 2);
            const auto blk = skewcorr::f_ee(spec, y, y);
            m(0, 0) = blk.e11;
            m(0, 1) = blk.e12;
            m(1, 0) = blk.e21;
            m(1, 1) = blk.e22;
            return pfaff::qdet(m);
        };
        double worstz = 0.0;
        for (std::size_t b = 0; b < hist.centers.size(); ++b) {
            // bin-averaged analytic value against the bin-averaged estimator
            const double lo = hist.centers[b] - 0.5 * hist.binwidth;
            const double rho = quad::integrate_finite(rho_at, lo, lo + hist.binwidth, 8)
                               / hist.binwidth;
            const double z = std::fabs(hist.density[b] - rho) / std::max(hist.stderr_[b], 1e-12);
            worstz = std::max(worstz, z);
        }
        rep.check("MC even-parity density vs analytic (z-score)", worstz, 4.0);
    }

    if (rep.failures > 0) {
        std::printf("verify: %d check(s) FAILED\n", rep.failures);
        return kExitNumerical;
    }
    std::printf("verify: all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlation toolkit for parameter-dependent Laguerre/Jacobi ensembles"};
    app.require_subcommand(1);
    app.fallthrough();  // global --out/--format may follow the subcommand

    std::string out_path, format = "csv";
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // kernel
    auto* ck = app.add_subcommand("kernel", "finite-n unitary-ensemble kernel on a grid");
    std::string k_family = "laguerre";
    int k_n = 4;
    double k_a = 0.0, k_b = 0.0, k_y = 1.0;
    std::string k_grid = "0:8:33";
    ck->add_option("--family", k_family)->check(CLI::IsMember({"laguerre", "jacobi"}));
    ck->add_option("--n", k_n);
    ck->add_option("--a", k_a);
    ck->add_option("--b", k_b);
    ck->add_option("--y", k_y, "second kernel argument");
    ck->add_option("--x-grid", k_grid, "min:max:count");

    // corr
    auto* cc = app.add_subcommand("corr", "finite-n correlations of the four ensembles");
    std::string c_family = "lag-super", c_odd, c_even, c_blind;
    int c_n = 2;
    double c_a = 0.0, c_A = 0.0;
    cc->add_option("--family", c_family);
    cc->add_option("--n", c_n);
    cc->add_option("--a", c_a);
    cc->add_option("--A", c_A);
    cc->add_option("--odd-points", c_odd, "comma separated odd-labelled coordinates");
    cc->add_option("--even-points", c_even, "comma separated even-labelled coordinates");
    cc->add_option("--blind-points", c_blind, "parity-blind coordinates (decimation only)");

    // scaled
    auto* cs = app.add_subcommand("scaled", "scaled-limit blocks");
    std::string s_regime = "bulk", s_source = "super";
    double s_a = 0.0, s_alpha = 0.0, s_X = 0.5, s_Y = 1.0;
    cs->add_option("--regime", s_regime)->check(CLI::IsMember({"bulk", "soft", "hard", "hard1"}));
    cs->add_option("--source", s_source)->check(CLI::IsMember({"super", "decim"}));
    cs->add_option("--a", s_a);
    cs->add_option("--alpha", s_alpha);
    cs->add_option("--X", s_X);
    cs->add_option("--Y", s_Y);

    // sk
    auto* csk = app.add_subcommand("sk", "bulk structure function");
    double sk_alpha = 0.0;
    std::string sk_grid = "0:6.28:100";
    bool sk_numeric = false;
    csk->add_option("--alpha", sk_alpha);
    csk->add_option("--k-grid", sk_grid, "min:max:count");
    csk->add_flag("--numeric", sk_numeric, "add the transform-oracle column");

    // gap
    auto* cg = app.add_subcommand("gap", "gap probabilities");
    std::string g_kind = "sine";
    double g_s = 1.0, g_A = 0.0;
    int g_p = 3, g_m = 40, g_n = 2;
    cg->add_option("--kind", g_kind, "sine | lag-super-odd")
        ->check(CLI::IsMember({"sine", "lag-super-odd"}));
    cg->add_option("--s", g_s, "interval endpoint");
    cg->add_option("--p", g_p, "highest count");
    cg->add_option("--m", g_m, "Nystrom order");
    cg->add_option("--n", g_n, "ensemble size (lag-super-odd)");
    cg->add_option("--A", g_A, "coupling (lag-super-odd)");

    // sample
    auto* cm = app.add_subcommand("sample", "Metropolis sampling of the four densities");
    std::string m_family = "lag-decim";
    int m_n = 2, m_sweeps = 10000, m_thin = 10;
    double m_a = 0.0, m_A = 0.0;
    std::uint64_t m_seed = 1;
    cm->add_option("--family", m_family);
    cm->add_option("--n", m_n);
    cm->add_option("--a", m_a);
    cm->add_option("--A", m_A);
    cm->add_option("--sweeps", m_sweeps);
    cm->add_option("--seed", m_seed);
    cm->add_option("--thin", m_thin);

    // verify
    auto* cv = app.add_subcommand("verify", "run the invariant suite");
    std::string v_suite = "quick";
    cv->add_option("--suite", v_suite)->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("RMT_QUAD_ORDER")) (void)env;  // read by the library

    OutputSink sink;
    sink.path = out_path;
    sink.format = format;

    try {
        if (ck->parsed()) {
            const Grid grid = Grid::parse(k_grid);
            kernels::KernelSpec spec = (k_family == "laguerre")
                                           ? kernels::KernelSpec::laguerre(k_n, k_a)
                                           : kernels::KernelSpec::jacobi(k_n, k_a, k_b);
            sink.columns = {"x", "y", "value"};
            for (int i = 0; i < grid.count; ++i) {
                const double x = grid.at(i);
                sink.rows.push_back({x, k_y, kernels::kernel_eval(spec, x, k_y)});
            }
            sink.meta = {{"cmd", "kernel"}, {"family", k_family}, {"n", k_n},
                         {"a", k_a},        {"b", k_b},           {"y", k_y},
                         {"x_grid", k_grid}};
        } else if (cc->parsed()) {
            const EnsembleSpec spec = make_spec(c_family, c_n, c_a, c_A);
            const auto odd = parse_points(c_odd);
            const auto even = parse_points(c_even);
            const auto blind = parse_points(c_blind);
            double value;
            if (!blind.empty()) {
                if (is_superposition(spec.family))
                    throw std::invalid_argument(
                        "parity-blind qdet correlations exist for the decimation families only");
                value = skewcorr::rho_blind(spec, blind);
            } else if (is_superposition(spec.family)) {
                value = supercorr::rho_super(spec, odd, even);
            } else {
                value = skewcorr::rho_decim(spec, odd, even);
            }
            sink.columns = {"value"};
            sink.rows.push_back({value});
            sink.meta = {{"cmd", "corr"},       {"family", c_family}, {"n", c_n}, {"a", c_a},
                         {"A", c_A},            {"odd", c_odd},       {"even", c_even},
                         {"blind", c_blind}};
        } else if (cs->parsed()) {
            const auto sp = make_scaling(s_regime, s_a, s_alpha, s_source);
            sink.meta = {{"cmd", "scaled"},   {"regime", s_regime}, {"source", s_source},
                         {"a", s_a},          {"alpha", s_alpha},   {"X", s_X},
                         {"Y", s_Y}};
            if (sp.source == scaled::Source::Superposition) {
                const auto b = scaled::scaled_super_blocks(sp, s_X, s_Y);
                sink.columns = {"K_oo", "K_oe", "K_eo", "K_ee"};
                sink.rows.push_back({b.oo, b.oe, b.eo, b.ee});
            } else {
                const auto b = scaled::scaled_decim_blocks(sp, s_X, s_Y);
                sink.columns = {"f11", "f12", "f21", "f22"};
                sink.rows.push_back({b.e11, b.e12, b.e21, b.e22});
            }
        } else if (csk->parsed()) {
            const Grid grid = Grid::parse(sk_grid);
            sink.columns = sk_numeric ? std::vector<std::string>{"k", "S", "S_numeric"}
                                      : std::vector<std::string>{"k", "S"};
            for (int i = 0; i < grid.count; ++i) {
                const double k = grid.at(i);
                if (sk_numeric)
                    sink.rows.push_back(
                        {k, structfn::s_bulk(sk_alpha, k), structfn::s_bulk_numeric(sk_alpha, k)});
                else
                    sink.rows.push_back({k, structfn::s_bulk(sk_alpha, k)});
            }
            sink.meta = {{"cmd", "sk"}, {"alpha", sk_alpha}, {"k_grid", sk_grid}};
        } else if (cg->parsed()) {
            if (g_kind == "sine") {
                auto sine = [](double x, double y) {
                    const double d = x - y;
                    return (std::fabs(d) < 1e-10) ? 1.0 : std::sin(M_PI * d) / (M_PI * d);
                };
                double conv = 0.0;
                const auto e = gaps::gap_probabilities(sine, 0.0, g_s, g_m, g_p, &conv);
                sink.columns = {"p", "E"};
                for (int p = 0; p <= g_p; ++p)
                    sink.rows.push_back({static_cast<double>(p), e[p]});
                sink.meta = {{"cmd", "gap"}, {"kind", g_kind}, {"s", g_s},
                             {"m", g_m},     {"self_convergence", conv}};
            } else {
                const EnsembleSpec spec = make_spec("lag-super", g_n, 0.0, g_A);
                auto koo = [&](double x, double y) { return supercorr::super_koo(spec, x, y); };
                const double span = 8.0 * g_n + 20.0;
                const double e0 = gaps::fredholm_det(koo, g_s, g_s + span, g_m);
                sink.columns = {"p", "E"};
                sink.rows.push_back({0.0, e0});
                sink.meta = {{"cmd", "gap"}, {"kind", g_kind}, {"s", g_s},
                             {"n", g_n},     {"A", g_A},       {"m", g_m}};
            }
        } else if (cm->parsed()) {
            const EnsembleSpec spec = make_spec(m_family, m_n, m_a, m_A);
            mcmc::ChainOptions opts;
            opts.sweeps = m_sweeps;
            opts.seed = m_seed;
            opts.thin = m_thin;
            const auto samples = mcmc::run_chain(spec, opts);
            if (!samples.acceptance_in_band)
                std::cerr << "warning: acceptance rate " << samples.acceptance_rate
                          << " outside [0.1, 0.9]\n";
            sink.columns.clear();
            for (int i = 1; i <= 2 * m_n; ++i) sink.columns.push_back("x" + std::to_string(i));
            for (const auto& cfg : samples.kept) sink.rows.push_back(cfg);
            sink.meta = {{"cmd", "sample"},   {"family", m_family},
                         {"n", m_n},          {"a", m_a},
                         {"A", m_A},          {"sweeps", m_sweeps},
                         {"seed", m_seed},    {"thin", m_thin},
                         {"acceptance", samples.acceptance_rate}};
        } else if (cv->parsed()) {
            return static_cast<int>(run_verify(v_suite));
        }
        sink.write();
    } catch (const std::invalid_argument& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameter;
    } catch (const std::runtime_error& err) {
        std::cerr << "numerical error: " << err.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
