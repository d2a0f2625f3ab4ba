#include "edgekit/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "edgekit/errors.hpp"

namespace edgekit {

double QuadratureSpec::tail_bound() const { return std::exp(-(s0 + length) / 2.0); }

QuadratureRule gauss_legendre(int m) {
    if (m < 1) throw DomainError("gauss_legendre: need at least one node");
    QuadratureRule r;
    r.nodes.resize(m);
    r.weights.resize(m);
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[m - 1 - i] = x;
        r.weights[i] = w;
        r.weights[m - 1 - i] = w;
    }
    if (m % 2 == 1) r.nodes[m / 2] = 0.0;
    return r;
}

QuadratureRule gauss_legendre(int m, double lo, double hi) {
    QuadratureRule r = gauss_legendre(m);
    const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
    for (int i = 0; i < m; ++i) {
        r.nodes[i] = c + h * r.nodes[i];
        r.weights[i] *= h;
    }
    return r;
}

QuadratureRule make_rule(const QuadratureSpec& spec) {
    if (!(spec.length > 0.0)) throw DomainError("quadrature length must be positive");
    return gauss_legendre(spec.nodes, spec.s0, spec.s0 + spec.length);
}

namespace {

std::string fmt_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, unsigned max_depth) {
    double err = 0.0;
    double l1 = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &err, &l1);
    if (!std::isfinite(value)) throw ConvergenceError("adaptive quadrature produced a non-finite value");
    if (err > std::max(abs_tol, rel_tol * std::abs(value)) && err > 1e-13 * l1)
        throw ConvergenceError("adaptive quadrature did not reach tolerance (error estimate " +
                               fmt_sci(err) + ")");
    return value;
}

}  // namespace edgekit
