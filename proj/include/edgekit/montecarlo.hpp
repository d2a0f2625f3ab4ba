#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "edgekit/operator.hpp"
#include "edgekit/scaling.hpp"

namespace edgekit {

/// Least eigenvalues of independent LUE samples and their left-soft-edge scaled values.
struct SampleBatch {
    EnsembleParams params{};
    std::uint64_t seed = 0;
    int reps = 0;
    double mu = 0.0;     ///< mu~ of the composite left scaling
    double sigma = 0.0;  ///< sigma~ of the composite left scaling
    std::vector<double> min_eigs;
    std::vector<double> scaled_min;  ///< (mu~ - min_eig) / sigma~
};

/// Seed of the independent stream used for repetition `rep` of a batch seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t rep);

/// Ascending eigenvalues of X*X for an (N+a) x N matrix X of standard complex Gaussians
/// (real and imaginary parts independent with variance 1/2), drawn from mt19937_64(seed).
std::vector<double> sample_wishart(const EnsembleParams& p, std::uint64_t seed);

/// `reps` independent least eigenvalues with repetition r drawn from stream_seed(seed, r). Requires a >= 2.
SampleBatch scaled_min_batch(const EnsembleParams& p, int reps, std::uint64_t seed);

/// The alternative printed convention (min_eig + mu~) / sigma~, reported for comparison only.
std::vector<double> printed_convention(const SampleBatch& batch);

/// Kolmogorov-Smirnov distance sup |ECDF - F| over the jump points of the sample.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// KS distance between the batch's scaled minima and F2 computed on `quad`.
double ks_to_tw2(const SampleBatch& batch, const QuadratureSpec& quad = tw2_quadrature());

/// Histogram of the eigenvalues of X*X/n against the Marchenko-Pastur law with lambda = gamma, sigma = 1.
struct MpComparison {
    std::vector<double> edges;       ///< bins + 1 edges
    std::vector<double> hist_mass;   ///< empirical probability per bin
    std::vector<double> mp_mass;     ///< Marchenko-Pastur probability per bin
    std::vector<double> mp_density;  ///< density at bin centres
    double outside_mass = 0.0;       ///< empirical mass outside the binned range
    double l1 = 0.0;                 ///< sum |hist_mass - mp_mass| + outside_mass
};

MpComparison esm_vs_mp(const EnsembleParams& p, int reps, std::uint64_t seed, int bins = 50);

}  // namespace edgekit
