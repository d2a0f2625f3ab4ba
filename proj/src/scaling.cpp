#include "edgekit/scaling.hpp"

#include <cmath>
#include <string>

#include "edgekit/errors.hpp"

namespace edgekit {

EnsembleParams make_params(int big_n, int a) {
    if (big_n < 1) throw DomainError("ensemble: N must be >= 1 (got " + std::to_string(big_n) + ")");
    if (a < 0) throw DomainError("ensemble: a must be >= 0 (got " + std::to_string(a) + ")");
    EnsembleParams p;
    p.big_n = big_n;
    p.a = a;
    p.n = big_n + a;
    p.gamma = static_cast<double>(big_n) / p.n;
    return p;
}

EnsembleParams params_for_gamma(int big_n, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in (0, 1]");
    long a = std::lround(big_n * (1.0 - gamma) / gamma);
    return make_params(big_n, static_cast<int>(a));
}

MuSigma mu_sigma_left(int j, int k) {
    if (k < 1 || j <= k) throw DomainError("left pair requires j > k >= 1");
    double sj = std::sqrt(j + 0.5), sk = std::sqrt(k + 0.5);
    double d = sj - sk;
    return {d * d, d * std::cbrt(1.0 / sk - 1.0 / sj)};
}

MuSigma mu_sigma_right(int j, int k) {
    if (j < 1 || k < 1) throw DomainError("right pair requires j, k >= 1");
    double sj = std::sqrt(j + 0.5), sk = std::sqrt(k + 0.5);
    double s = sj + sk;
    return {s * s, s * std::cbrt(1.0 / sk + 1.0 / sj)};
}

double pair_kappa(int j, int k) { return k + (j - k + 1) / 2.0; }

MuSigma combine_pairs(const MuSigma& p1, const MuSigma& p2) {
    double r1 = std::sqrt(p1.sigma), r2 = std::sqrt(p2.sigma);
    double den = 1.0 / (p1.mu * r1) + 1.0 / (p2.mu * r2);
    return {(1.0 / r1 + 1.0 / r2) / den, (r1 / p1.mu + r2 / p2.mu) / den};
}

EdgeScaling composite_left(const EnsembleParams& p) {
    if (p.a < 2) throw DomainError("composite left scaling requires a >= 2");
    MuSigma c = combine_pairs(mu_sigma_left(p.n - 1, p.big_n), mu_sigma_left(p.n, p.big_n - 1));
    return {c.mu, c.sigma, EdgeSide::left_soft};
}

EdgeScaling composite_right(const EnsembleParams& p) {
    if (p.big_n < 2) throw DomainError("composite right scaling requires N >= 2");
    MuSigma c = combine_pairs(mu_sigma_right(p.n - 1, p.big_n), mu_sigma_right(p.n, p.big_n - 1));
    return {c.mu, c.sigma, EdgeSide::right_soft};
}

DeviationParams deviation_params(const EnsembleParams& p, const EdgeScaling& s) {
    if (s.side != EdgeSide::left_soft) throw DomainError("deviation parameters need a left-soft scaling");
    MuSigma l = mu_sigma_left(p.n - 1, p.big_n);
    MuSigma r = mu_sigma_left(p.n, p.big_n - 1);
    double pre = std::pow(static_cast<double>(p.n) * p.big_n, 0.25) * s.sigma / s.mu;
    DeviationParams d;
    d.theta_left = pre * std::sqrt(l.sigma);
    d.theta_right = pre * std::sqrt(r.sigma);
    d.delta_left = (l.mu - s.mu) / pair_kappa(p.n - 1, p.big_n);
    d.delta_right = (r.mu - s.mu) / pair_kappa(p.n, p.big_n - 1);
    return d;
}

double epsilon_tilde(const EnsembleParams& p, const EdgeScaling& s, double t) {
    MuSigma c = mu_sigma_left(p.n, p.big_n);
    double kappa = pair_kappa(p.n, p.big_n);
    return (c.mu - s.mu) / kappa + s.sigma / kappa * t;
}

}  // namespace edgekit
