#pragma once

namespace edgekit {

/// One LUE instance: X is n x N complex Gaussian, n = N + a, gamma = N / n.
struct EnsembleParams {
    int big_n = 1;
    int a = 0;
    int n = 1;
    double gamma = 1.0;
};

/// Validated constructor; throws DomainError unless N >= 1 and a >= 0.
EnsembleParams make_params(int big_n, int a);

/// Ensemble with a = round(N (1 - gamma) / gamma); throws DomainError unless gamma in (0, 1].
EnsembleParams params_for_gamma(int big_n, double gamma);

enum class EdgeSide { left_soft, right_soft };

/// Affine edge scaling x = mu - sigma s (left) or x = mu + sigma s (right).
struct EdgeScaling {
    double mu = 0.0;
    double sigma = 1.0;
    EdgeSide side = EdgeSide::left_soft;
};

struct MuSigma {
    double mu = 0.0;
    double sigma = 0.0;
};

/// Left pair mu_{j,k} = (sqrt(j+1/2) - sqrt(k+1/2))^2 and the positive-convention sigma_{j,k}.
/// Requires j > k >= 1.
MuSigma mu_sigma_left(int j, int k);

/// Right pair mu^R_{j,k} = (sqrt(j+1/2) + sqrt(k+1/2))^2 and sigma^R_{j,k}. Requires j, k >= 1.
MuSigma mu_sigma_right(int j, int k);

/// kappa for the pair (j, k): k + (j - k + 1)/2.
double pair_kappa(int j, int k);

/// Composite left-edge scaling (mu~, sigma~) built from the pairs (n-1, N) and (n, N-1).
/// Requires a >= 2.
EdgeScaling composite_left(const EnsembleParams& p);

/// Combination of two arbitrary (mu, sigma) pairs with the same weights as composite_left.
MuSigma combine_pairs(const MuSigma& p1, const MuSigma& p2);

/// Composite right-edge scaling (mu_R, sigma_R) from the right pairs (n-1, N) and (n, N-1).
EdgeScaling composite_right(const EnsembleParams& p);

/// Deviation parameters of a left scaling relative to the two elementary pairs.
struct DeviationParams {
    double theta_left = 1.0;   ///< theta_{n-1,N}
    double theta_right = 1.0;  ///< theta_{n,N-1}
    double delta_left = 0.0;   ///< delta_{n-1,N}
    double delta_right = 0.0;  ///< delta_{n,N-1}
};

/// theta_{j,k} = (nN)^{1/4} sqrt(sigma_{j,k}) sigma~/mu~ and the deltas; requires a left scaling.
DeviationParams deviation_params(const EnsembleParams& p, const EdgeScaling& s);

/// epsilon~_{n,N}(s) = (mu_{n,N} - mu~)/kappa_N + (sigma~/kappa_N) s.
double epsilon_tilde(const EnsembleParams& p, const EdgeScaling& s, double t);

}  // namespace edgekit
