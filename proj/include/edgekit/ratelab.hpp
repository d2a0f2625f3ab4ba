#pragma once

#include <vector>

#include "edgekit/operator.hpp"
#include "edgekit/scaling.hpp"

namespace edgekit {

/// Least-squares fit of log y against x.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares on (x, log y). Requires at least 3 points, y > 0 and non-constant x.
SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct RateEntry {
    int big_n = 0;
    int a = 0;
    double gamma_n = 0.0;    ///< realized N / (N + a)
    double norm_sum = 0.0;   ///< ||G + H + (-1)^{N+1} sqrt2 Ai||
    double norm_plus = 0.0;  ///< same with the opposite sign on Ai
    double norm_g = 0.0;
    double norm_h = 0.0;
    double norm_diff = 0.0;  ///< ||G - H||
    double w1_bound = 0.0;
};

struct RateReport {
    double gamma = 0.0;
    double s0 = 0.0;
    std::vector<RateEntry> entries;  ///< sorted by N
    SlopeFit fit_sum, fit_g, fit_h, fit_w1;
};

/// Sweep N at fixed gamma with a = round(N (1 - gamma) / gamma); slopes are fitted against log N.
RateReport norm_sweep(double gamma, const std::vector<int>& n_list, double s0,
                      const QuadratureSpec& quad = tw2_quadrature(120, 14.0));

struct EnvelopeRow {
    double t = 0.0;
    double value_sum = 0.0;      ///< N^{2/3} |G(t) + H(t) + (-1)^{N+1} sqrt2 Ai(t)| e^{t/2}
    double value_flipped = 0.0;  ///< same with the opposite parity sign
    double value_g = 0.0;        ///< N^{1/3} |G(t) + (-1)^{N+1} Ai(t) / sqrt2| e^{t/2}
    double value_h = 0.0;        ///< N^{1/3} |H(t) + (-1)^{N+1} Ai(t) / sqrt2| e^{t/2}
    bool sum_below_cap = false;
    bool g_below_cap = false;
    bool h_below_cap = false;
};

/// Default evaluation grid 0, 0.1, ..., 8.
std::vector<double> default_t_grid();

/// Scaled pointwise differences at each t >= s0, with G(t) = xi_tau(t) and H(t) = -eta_tau(t).
/// With split_region set, G and H are taken as zero for t >= e0 mu~ / sigma~.
std::vector<EnvelopeRow> pointwise_envelope(double gamma, int big_n, double s0, const std::vector<double>& t_grid,
                                            double cap, bool split_region = true);

}  // namespace edgekit
