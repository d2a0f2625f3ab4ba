#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "edgekit/kernels.hpp"
#include "edgekit/lgtransform.hpp"
#include "edgekit/montecarlo.hpp"
#include "edgekit/operator.hpp"
#include "edgekit/quadrature.hpp"
#include "edgekit/ratelab.hpp"
#include "edgekit/scaling.hpp"
#include "edgekit/specfun.hpp"

using namespace edgekit;

namespace {

// Tolerances and thresholds of the acceptance criteria.
constexpr double kSumSlopeLo = -0.80, kSumSlopeHi = -0.55, kSumR2 = 0.98;
constexpr double kSingleSlopeLo = -0.45, kSingleSlopeHi = -0.22;
constexpr double kW1SlopeMax = -0.5;
constexpr double kRateSeconds = 300.0;
constexpr double kTwSelfTol = 1e-8, kTwAnchorS = -1.7694, kTwAnchorValue = 0.5, kTwAnchorTol = 5e-3;
constexpr double kTwSeconds = 30.0;
constexpr int kMcN = 200, kMcA = 200, kMcReps = 5000;
constexpr std::uint64_t kMcSeed = 42;
constexpr double kKsMax = 0.05, kMcSeconds = 600.0;
constexpr double kTraceIneqSlack = 1e-9, kTraceRel = 1e-6, kFactorTol = 1e-6, kSpectrumTol = 1e-8;
constexpr double kOdeRel = 1e-6, kClosedFormRel = 1e-10, kPsiLo = 0.30, kPsiHi = 0.32;
constexpr double kWronskianTol = 1e-10, kRBound = 1.0, kLambda0Lo = 1.0, kLambda0Hi = 1.2, kLambda1Tol = 1e-3;
constexpr double kMpL1Max = 0.05;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [failed]");
    }
};

std::string num(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++g_failures;
    std::printf("%s %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
}

void info(const std::string& text) {
    std::printf("  info: %s\n", text.c_str());
    std::fflush(stdout);
}

QuadratureSpec interval(double s0, double length, int nodes) {
    QuadratureSpec q;
    q.s0 = s0;
    q.length = length;
    q.nodes = nodes;
    return q;
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g(rng);
    return 0.5 * (m + m.transpose());
}

Outcome rate_exponent(const RateReport& r, double secs) {
    Outcome o;
    o.require(r.fit_sum.slope >= kSumSlopeLo && r.fit_sum.slope <= kSumSlopeHi && r.fit_sum.r_squared >= kSumR2,
              "slope_sum " + num(r.fit_sum.slope) + " r2 " + num(r.fit_sum.r_squared));
    o.require(r.fit_g.slope >= kSingleSlopeLo && r.fit_g.slope <= kSingleSlopeHi, "slope_g " + num(r.fit_g.slope));
    o.require(r.fit_h.slope >= kSingleSlopeLo && r.fit_h.slope <= kSingleSlopeHi, "slope_h " + num(r.fit_h.slope));
    o.require(secs <= kRateSeconds, "sweep " + num(secs, 3) + " s");
    return o;
}

Outcome w1_decay(const RateReport& r) {
    Outcome o;
    bool decreasing = true;
    std::string values;
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (i > 0 && !(r.entries[i].w1_bound < r.entries[i - 1].w1_bound)) decreasing = false;
        values += (i ? "," : "") + num(r.entries[i].w1_bound, 4);
    }
    o.require(decreasing, "w1 " + values + " strictly decreasing");
    o.require(r.fit_w1.slope <= kW1SlopeMax, "slope_w1 " + num(r.fit_w1.slope));
    return o;
}

Outcome tw2_checks() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    QuadratureSpec q80 = tw2_quadrature(80), q160 = tw2_quadrature(160);
    double worst = 0.0;
    for (int i = 0; i <= 140; ++i) {
        double s = -5.0 + 0.05 * i;
        worst = std::max(worst, std::abs(tw2(s, q80) - tw2(s, q160)));
    }
    o.require(worst < kTwSelfTol, "max |F2(m=80) - F2(m=160)| on [-5, 2] = " + num(worst, 3));
    double anchor = tw2(kTwAnchorS, q80);
    o.require(std::abs(anchor - kTwAnchorValue) <= kTwAnchorTol, "F2(-1.7694) = " + num(anchor, 8) + " vs 0.5 +- 5e-3");
    o.require(seconds_since(t0) <= kTwSeconds, "runtime " + num(seconds_since(t0), 3) + " s");
    return o;
}

Outcome operator_identities() {
    Outcome o;
    std::mt19937_64 rng(20240607);
    int violations = 0;
    double worst_margin = INFINITY;
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::MatrixXd a = random_symmetric(rng, 20), b = random_symmetric(rng, 20), c = random_symmetric(rng, 20);
        TraceBound t = trace_bound(a, b, c);
        if (!(t.lhs <= t.rhs + kTraceIneqSlack)) ++violations;
        worst_margin = std::min(worst_margin, t.rhs - t.lhs);
    }
    o.require(violations == 0, "(a) trace inequality violations " + std::to_string(violations) + "/1000, min margin " +
                                   num(worst_margin, 3));

    double worst_trace = 0.0;
    for (auto [big_n, a] : std::vector<std::pair<int, int>>{{5, 3}, {10, 4}, {30, 6}}) {
        EnsembleParams p = make_params(big_n, a);
        const double top = 4.0 * p.n + 20.0 * std::sqrt(static_cast<double>(p.n)) + 60.0;
        double trace = 0.0;
        for (double lo = 0.0; lo < top; lo += 5.0)
            trace += integrate_adaptive([&](double x) { return lue_kernel(p, x, x); }, lo, lo + 5.0, 1e-14, 1e-12, 20);
        worst_trace = std::max(worst_trace, std::abs(trace - big_n) / big_n);
    }
    o.require(worst_trace < kTraceRel, "(b) max relative trace error " + num(worst_trace, 3));

    std::mt19937_64 prng(777);
    std::uniform_int_distribution<int> nd(1, 30), ad(2, 10);
    std::uniform_real_distribution<double> xd(0.05, 1.0);
    double worst_res = 0.0;
    for (int i = 0; i < 20; ++i) {
        EnsembleParams e = make_params(nd(prng), ad(prng));
        double x = xd(prng) * 4.0 * e.n, y = xd(prng) * 4.0 * e.n;
        worst_res = std::max(worst_res, factorization_residual(e, x, y, factorization_quadrature(e)));
    }
    o.require(worst_res < kFactorTol, "(c) max factorization residual " + num(worst_res, 3));

    double lo = INFINITY, hi = -INFINITY;
    auto spectrum = [&](const KernelSpec& k, const QuadratureSpec& q) {
        Eigen::VectorXd ev = eigenvalues(discretize(k, q));
        lo = std::min(lo, ev.minCoeff());
        hi = std::max(hi, ev.maxCoeff());
    };
    spectrum(KernelSpec::airy(), interval(0.0, 12.0, 60));
    spectrum(KernelSpec::airy(), interval(-8.0, 16.0, 120));
    for (int big_n : {64, 200}) {
        EnsembleParams p = make_params(big_n, big_n);
        spectrum(KernelSpec::lue_scaled_left(p, composite_left(p)), interval(0.0, 14.0, 120));
    }
    o.require(lo >= -kSpectrumTol && hi <= 1.0 + kSpectrumTol,
              "(d) spectra within [" + num(lo, 3) + ", " + num(hi, 10) + "]");
    return o;
}

Outcome lg_identities() {
    Outcome o;
    std::vector<EnsembleParams> ens{make_params(2, 5), make_params(100, 100), make_params(1000, 500)};

    double worst_ode = 0.0;
    for (const auto& p : ens) {
        LGContext c = lg_context(p);
        std::vector<double> zs;
        for (double t : {0.05, 0.2, 0.5, 0.8, 0.95}) zs.push_back(t * c.z1);
        for (double t : {0.05, 0.3, 0.6}) zs.push_back(c.z1 + t * (c.z2 - c.z1));
        for (double z : zs) {
            double h = 1e-5 * z;
            double d = (zeta_left(c, z + h) - zeta_left(c, z - h)) / (2.0 * h);
            double lhs = zeta_left(c, z) * d * d, f = f_eval(c, z);
            worst_ode = std::max(worst_ode, std::abs(lhs - f) / std::abs(f));
        }
    }
    o.require(worst_ode < kOdeRel, "zeta zeta'^2 = f max rel err " + num(worst_ode, 3));

    double worst_cf = 0.0;
    for (int big_n : {3, 40, 500, 10000}) {
        LGContext c = lg_context(make_params(big_n, big_n));
        for (double t : {1e-8, 1e-3, 0.1, 0.5, 0.9, 0.99}) {
            double z = t * c.z1;
            double q = zeta_left_quadrature(c, z);
            worst_cf = std::max(worst_cf, std::abs(zeta_left(c, z) - q) / q);
        }
    }
    o.require(worst_cf < kClosedFormRel, "closed form vs quadrature zeta max rel " + num(worst_cf, 3));

    double plo = INFINITY, phi = -INFINITY;
    for (const auto& p : ens) {
        LGContext c = lg_context(p);
        double z = c.z1 * 1e-6, zeta = zeta_left(c, z);
        double v = psi_eval(c, z) * zeta * zeta;
        plo = std::min(plo, v);
        phi = std::max(phi, v);
    }
    o.require(plo >= kPsiLo && phi <= kPsiHi, "Psi zeta^2 at z1 1e-6 in [" + num(plo, 5) + ", " + num(phi, 5) + "]");

    EnsembleParams p = make_params(10000, 10000);
    LGContext c = lg_context(p);
    MuSigma ms = mu_sigma_left(p.n, p.big_n);
    double s_n = 1.0 / c.z1 + 1.0 / (2.0 * (c.z2 - c.z1));
    bool seq_ok = true;
    double worst_ratio = 0.0;
    for (double s : {1.0, 2.0, 4.0}) {
        double x = ms.mu - ms.sigma * s;
        double lhs = std::abs(std::cbrt(c.kappa * c.kappa) * zeta_left(c, x / c.kappa) - s);
        double rhs = 2.0 * (2.0 * std::abs(s_n) / 5.0) * s * s * ms.sigma / c.kappa;
        seq_ok = seq_ok && lhs <= rhs;
        worst_ratio = std::max(worst_ratio, lhs / rhs);
    }
    double eps = 1e-3;
    double norm = std::pow(c.kappa / std::pow(ms.sigma, 3), 1.0 / 6.0) * std::pow(f_tilde(c, c.z1 - eps), -0.25);
    double first_order = std::abs(norm - (1.0 - 0.4 * s_n * eps));
    seq_ok = seq_ok && first_order <= 10.0 * eps * eps;
    o.require(seq_ok, "expansion at N = 1e4: max lhs/rhs " + num(worst_ratio, 3) + ", normalization residual " +
                          num(first_order, 3));
    return o;
}

Outcome constants() {
    Outcome o;
    double worst_w = 0.0;
    for (int i = 0; i < 400; ++i) {
        double x = -20.0 + 30.0 * i / 399.0;
        AiryPair a = airy_eval(x);
        worst_w = std::max(worst_w, std::abs(a.ai * a.bi_prime - a.ai_prime * a.bi - 1.0 / std::numbers::pi));
    }
    o.require(worst_w < kWronskianTol, "Wronskian max error on [-20, 10] " + num(worst_w, 3));

    double worst_r = 0.0;
    std::string rs;
    for (int big_n = 100; big_n <= 800; big_n += 100) {
        double v = big_n * std::abs(r_constant(make_params(big_n, big_n)) - 1.0);
        worst_r = std::max(worst_r, v);
        rs += (big_n > 100 ? "," : "") + num(v, 4);
    }
    o.require(worst_r <= kRBound, "N|r_N - 1| = " + rs);

    double l0 = lambda0_estimate();
    o.require(l0 >= kLambda0Lo && l0 <= kLambda0Hi, "lambda0 " + num(l0, 8));
    double l1 = lambda1_sup(-50.0, 50.0);
    o.require(std::abs(l1 - 1.0) < kLambda1Tol, "lambda1 sup " + num(l1, 8));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;

    RateReport sweep;
    double sweep_secs = 0.0;
    report(1, "rate exponent", [&] {
        auto t0 = std::chrono::steady_clock::now();
        sweep = norm_sweep(0.5, {64, 128, 256, 512}, 0.0, interval(0.0, 14.0, 120));
        sweep_secs = seconds_since(t0);
        return rate_exponent(sweep, sweep_secs);
    });
    report(2, "W1 proxy decay", [&] {
        if (sweep.entries.empty()) throw std::runtime_error("sweep unavailable");
        return w1_decay(sweep);
    });

    report(3, "TW2 self-convergence and anchor", tw2_checks);
    info("F2(-1.7694) differs from 0.5 by about 0.0158; the F2 median is " +
         num(-1.8049124, 8) + " with F2 = " + num(tw2(-1.8049124), 8));

    SampleBatch batch;
    report(4, "Monte Carlo Tracy-Widom", [&] {
        auto t0 = std::chrono::steady_clock::now();
        batch = scaled_min_batch(make_params(kMcN, kMcA), kMcReps, kMcSeed);
        QuadratureSpec q = tw2_quadrature();
        double ks = ks_to_tw2(batch, q);
        double secs = seconds_since(t0);
        Outcome o;
        o.require(ks <= kKsMax, "KS " + num(ks, 4) + " over " + std::to_string(batch.reps) + " samples");
        o.require(secs <= kMcSeconds, "runtime " + num(secs, 3) + " s");
        return o;
    });
    if (!batch.scaled_min.empty()) {
        double mean = 0.0;
        for (double s : batch.scaled_min) mean += s;
        mean /= batch.reps;
        info("mean scaled minimum " + num(mean, 6) + " (TW2 mean -1.7710868)");
        double ks_printed = ks_statistic(printed_convention(batch), [](double s) { return tw2(s); });
        info("KS under the (min + mu) / sigma convention " + num(ks_printed, 4));
    }

    report(5, "operator identities", operator_identities);
    report(6, "Liouville-Green identities", lg_identities);
    report(7, "constants", constants);
    report(8, "Marchenko-Pastur sanity", [] {
        MpComparison c = esm_vs_mp(make_params(200, 200), 50, kMcSeed, 50);
        Outcome o;
        o.require(c.l1 < kMpL1Max, "L1 " + num(c.l1, 4) + ", mass outside " + num(c.outside_mass, 3));
        return o;
    });

    std::printf("%d of 8 criteria passed\n", 8 - g_failures);
    return strict ? g_failures : 0;
}
