#pragma once

#include <functional>
#include <vector>

namespace edgekit {

/// e0 = 1 - 1/e, the fraction of mu~/sigma~ that splits the evaluation region.
inline constexpr double kE0 = 0.63212055882855767;

enum class QuadRule { gauss_legendre_mapped };

/// Quadrature on the truncated half-line [s0, s0 + length].
struct QuadratureSpec {
    double s0 = 0.0;
    double length = 14.0;
    int nodes = 120;
    QuadRule rule = QuadRule::gauss_legendre_mapped;

    /// Upper bound e^{-(s0+L)/2} on the discarded tail for kernels decaying like e^{-x/2}.
    double tail_bound() const;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with m points on [-1, 1] (Newton iteration on P_m).
QuadratureRule gauss_legendre(int m);

/// Gauss-Legendre rule mapped affinely onto [lo, hi].
QuadratureRule gauss_legendre(int m, double lo, double hi);

/// Nodes and weights described by a QuadratureSpec.
QuadratureRule make_rule(const QuadratureSpec& spec);

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b] (b may be +infinity).
/// Throws ConvergenceError when the error estimate exceeds max(abs_tol, rel_tol*|I|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10, unsigned max_depth = 11);

}  // namespace edgekit
