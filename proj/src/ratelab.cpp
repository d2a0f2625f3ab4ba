#include "edgekit/ratelab.hpp"

#include <cmath>
#include <numbers>

#include "edgekit/errors.hpp"
#include "edgekit/kernels.hpp"
#include "edgekit/quadrature.hpp"
#include "edgekit/specfun.hpp"

namespace edgekit {

SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DomainError("fit_slope: xs and ys differ in length");
    if (xs.size() < 3) throw DomainError("fit_slope: at least 3 points are required");
    const double n = static_cast<double>(xs.size());
    std::vector<double> ly(ys.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(ys[i] > 0.0) || !std::isfinite(ys[i])) throw DomainError("fit_slope: ys must be positive and finite");
        ly[i] = std::log(ys[i]);
        mx += xs[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mx, dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw DomainError("fit_slope: degenerate design, all xs equal");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    return f;
}

RateReport norm_sweep(double gamma, const std::vector<int>& n_list, double s0, const QuadratureSpec& quad) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("norm_sweep: gamma must lie in (0, 1)");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) throw DomainError("norm_sweep: N list must be strictly increasing");
    RateReport rep;
    rep.gamma = gamma;
    rep.s0 = s0;
    for (int big_n : n_list) {
        EnsembleParams p = params_for_gamma(big_n, gamma);
        if (p.a < 2) throw DomainError("norm_sweep: N = " + std::to_string(big_n) + " gives a < 2");
        EdgeNorms e = edge_norms(p, composite_left(p), s0, quad);
        rep.entries.push_back({p.big_n, p.a, p.gamma, e.norm_sum, e.norm_plus, e.norm_g, e.norm_h, e.norm_diff, e.w1});
    }
    std::vector<double> ln, sum, g, h, w1;
    for (const auto& e : rep.entries) {
        ln.push_back(std::log(static_cast<double>(e.big_n)));
        sum.push_back(e.norm_sum);
        g.push_back(e.norm_g);
        h.push_back(e.norm_h);
        w1.push_back(e.w1_bound);
    }
    rep.fit_sum = fit_slope(ln, sum);
    rep.fit_g = fit_slope(ln, g);
    rep.fit_h = fit_slope(ln, h);
    rep.fit_w1 = fit_slope(ln, w1);
    return rep;
}

std::vector<double> default_t_grid() {
    std::vector<double> t;
    for (int i = 0; i <= 80; ++i) t.push_back(0.1 * i);
    return t;
}

std::vector<EnvelopeRow> pointwise_envelope(double gamma, int big_n, double s0, const std::vector<double>& t_grid,
                                            double cap, bool split_region) {
    EnsembleParams p = params_for_gamma(big_n, gamma);
    if (p.a < 2) throw DomainError("pointwise_envelope requires a >= 2");
    EdgeScaling sc = composite_left(p);
    const double split = kE0 * sc.mu / sc.sigma;
    const double sign = (big_n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N+1}
    const double n23 = std::pow(static_cast<double>(big_n), 2.0 / 3.0);
    const double n13 = std::cbrt(static_cast<double>(big_n));
    std::vector<EnvelopeRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        if (t < s0) throw DomainError("pointwise_envelope: grid points must satisfy t >= s0");
        XiEta v = (split_region && t >= split) ? XiEta{} : xi_eta_tau(p, sc, t);
        const double g = v.xi, h = -v.eta, ai = airy_eval(t).ai, w = std::exp(0.5 * t);
        EnvelopeRow r;
        r.t = t;
        r.value_sum = n23 * std::abs(g + h + sign * std::numbers::sqrt2 * ai) * w;
        r.value_flipped = n23 * std::abs(g + h - sign * std::numbers::sqrt2 * ai) * w;
        r.value_g = n13 * std::abs(g + sign * ai / std::numbers::sqrt2) * w;
        r.value_h = n13 * std::abs(h + sign * ai / std::numbers::sqrt2) * w;
        r.sum_below_cap = r.value_sum <= cap;
        r.g_below_cap = r.value_g <= cap;
        r.h_below_cap = r.value_h <= cap;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace edgekit
