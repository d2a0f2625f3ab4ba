#include "edgekit/montecarlo.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "edgekit/errors.hpp"
#include "edgekit/kernels.hpp"
#include "edgekit/parallel.hpp"
#include "edgekit/quadrature.hpp"

namespace edgekit {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform on the open interval (0, 1) from the top 53 bits.
double open_uniform(std::mt19937_64& gen) { return ((gen() >> 11) + 0.5) * 0x1p-53; }

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t rep) { return splitmix64(splitmix64(seed) ^ rep); }

std::vector<double> sample_wishart(const EnsembleParams& p, std::uint64_t seed) {
    if (p.big_n < 1 || p.a < 0) throw DomainError("sample_wishart: need N >= 1 and a >= 0");
    std::mt19937_64 gen(seed);
    Eigen::MatrixXcd x(p.n, p.big_n);
    // Box-Muller: sqrt(-log u1) (cos, sin)(2 pi u2) gives two independent N(0, 1/2) parts.
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            double r = std::sqrt(-std::log(open_uniform(gen)));
            double t = 2.0 * std::numbers::pi * open_uniform(gen);
            x(i, j) = {r * std::cos(t), r * std::sin(t)};
        }
    }
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(p.big_n, p.big_n);
    w.selfadjointView<Eigen::Lower>().rankUpdate(x.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
    const Eigen::VectorXd& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

SampleBatch scaled_min_batch(const EnsembleParams& p, int reps, std::uint64_t seed) {
    if (reps < 0) throw DomainError("scaled_min_batch: reps must be nonnegative");
    EdgeScaling sc = composite_left(p);
    SampleBatch b;
    b.params = p;
    b.seed = seed;
    b.reps = reps;
    b.mu = sc.mu;
    b.sigma = sc.sigma;
    b.min_eigs.assign(reps, 0.0);
    b.scaled_min.assign(reps, 0.0);
    parallel_for(static_cast<std::size_t>(reps), [&](std::size_t r) {
        double m = sample_wishart(p, stream_seed(seed, r)).front();
        b.min_eigs[r] = m;
        b.scaled_min[r] = (sc.mu - m) / sc.sigma;
    });
    return b;
}

std::vector<double> printed_convention(const SampleBatch& batch) {
    std::vector<double> out(batch.min_eigs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (batch.min_eigs[i] + batch.mu) / batch.sigma;
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    std::vector<double> f(n);
    parallel_for(n, [&](std::size_t i) { f[i] = cdf(samples[i]); });
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d = std::max(d, static_cast<double>(i + 1) / n - f[i]);
        d = std::max(d, f[i] - static_cast<double>(i) / n);
    }
    return d;
}

double ks_to_tw2(const SampleBatch& batch, const QuadratureSpec& quad) {
    return ks_statistic(batch.scaled_min, [&](double s) { return tw2(s, quad); });
}

MpComparison esm_vs_mp(const EnsembleParams& p, int reps, std::uint64_t seed, int bins) {
    if (p.big_n < 10) throw DomainError("esm_vs_mp requires N >= 10");
    if (reps < 1 || bins < 1) throw DomainError("esm_vs_mp requires reps >= 1 and bins >= 1");
    const double gamma = p.gamma, r = std::sqrt(gamma);
    const double lo_edge = (1.0 - r) * (1.0 - r), hi_edge = (1.0 + r) * (1.0 + r);
    const double lo = std::max(0.0, lo_edge - 0.2), hi = hi_edge + 0.2;

    std::vector<std::vector<double>> eigs(reps);
    parallel_for(static_cast<std::size_t>(reps), [&](std::size_t k) { eigs[k] = sample_wishart(p, stream_seed(seed, k)); });

    MpComparison c;
    c.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) c.edges[b] = lo + (hi - lo) * b / bins;
    std::vector<double> counts(bins, 0.0);
    double total = 0.0, outside = 0.0;
    for (const auto& ev : eigs) {
        for (double v : ev) {
            double x = v / p.n;
            total += 1.0;
            if (x < lo || x >= hi) {
                outside += 1.0;
                continue;
            }
            int b = std::min(bins - 1, static_cast<int>((x - lo) / (hi - lo) * bins));
            counts[b] += 1.0;
        }
    }
    // Bin probabilities of the law in the variable x = lo_edge + (hi_edge - lo_edge) sin^2(theta),
    // which removes the square-root endpoint behaviour.
    auto theta_of = [&](double x) {
        double u = std::clamp((x - lo_edge) / (hi_edge - lo_edge), 0.0, 1.0);
        return std::asin(std::sqrt(u));
    };
    auto integrand = [&](double th) {
        double sn = std::sin(th), cs = std::cos(th);
        double x = lo_edge + (hi_edge - lo_edge) * sn * sn;
        return edgekit::mp_density(gamma, 1.0, x) * 2.0 * (hi_edge - lo_edge) * sn * cs;
    };
    c.hist_mass.resize(bins);
    c.mp_mass.resize(bins);
    c.mp_density.resize(bins);
    double l1 = 0.0;
    for (int b = 0; b < bins; ++b) {
        double ta = theta_of(c.edges[b]), tb = theta_of(c.edges[b + 1]);
        c.mp_mass[b] = tb > ta ? integrate_adaptive(integrand, ta, tb, 1e-14, 1e-10) : 0.0;
        c.hist_mass[b] = counts[b] / total;
        c.mp_density[b] = edgekit::mp_density(gamma, 1.0, 0.5 * (c.edges[b] + c.edges[b + 1]));
        l1 += std::abs(c.hist_mass[b] - c.mp_mass[b]);
    }
    c.outside_mass = outside / total;
    c.l1 = l1 + c.outside_mass;
    return c;
}

}  // namespace edgekit
