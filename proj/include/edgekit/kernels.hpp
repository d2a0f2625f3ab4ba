#pragma once

#include <string>

#include "edgekit/quadrature.hpp"
#include "edgekit/scaling.hpp"

namespace edgekit {

/// Diagonal seam: for |x - y| <= kernel_seam(x) kernels use their confluent (diagonal) form.
double kernel_seam(double x);

/// Airy kernel (Ai(x)Ai'(y) - Ai(y)Ai'(x))/(x - y), with (Ai')^2 - x Ai^2 on the diagonal.
double airy_kernel(double x, double y);

/// Bessel kernel with parameter a >= 0 on x, y >= 0.
double bessel_kernel(double a, double x, double y);

/// LUE kernel K_{L_a,N}(x, y); zero when x < 0 or y < 0.
double lue_kernel(const EnsembleParams& p, double x, double y);

struct XiEta {
    double xi = 0.0;
    double eta = 0.0;
};

/// Factorization kernels xi_{a,N}(x), eta_{a,N}(x); both vanish for x <= 0. Requires a >= 2.
XiEta xi_eta(const EnsembleParams& p, double x);

/// Half-line quadrature adequate for the factorization integral of an unscaled LUE.
QuadratureSpec factorization_quadrature(const EnsembleParams& p);

/// |K(x, y) - int_0^L [xi(x+t) eta(t+y) + eta(x+t) xi(t+y)] dt| with L = quad.length and
/// quad.nodes Gauss-Legendre points in 20-point panels.
double factorization_residual(const EnsembleParams& p, double x, double y, const QuadratureSpec& quad);

/// xi_tau(u) = sigma~ xi(mu~ - sigma~ u) and eta_tau(u) = sigma~ eta(mu~ - sigma~ u).
XiEta xi_eta_tau(const EnsembleParams& p, const EdgeScaling& scaling, double u);

struct ScaledKernels {
    double g = 0.0;     ///< G_tau(s, t) = xi_tau(s + t - s0)
    double h = 0.0;     ///< H_tau(s, t) = -eta_tau(s + t - s0)
    double k_ls = 0.0;  ///< sigma~ K_LUE(mu~ - sigma~ s, mu~ - sigma~ t)
};

/// Left-soft-edge scaled kernels. Requires a left scaling and a >= 2.
ScaledKernels scaled_kernels(const EnsembleParams& p, const EdgeScaling& scaling, double s0, double s, double t);

/// Marchenko-Pastur density g_{lambda,sigma}(x); zero outside [lambda-, lambda+].
double mp_density(double lambda, double sigma, double x);

enum class KernelKind { airy, bessel, lue, lue_scaled_left, g_tau, h_tau, airy_sum };

/// A kernel together with the parameters needed to evaluate it.
struct KernelSpec {
    KernelKind kind = KernelKind::airy;
    double bessel_a = 0.0;
    EnsembleParams params{};
    EdgeScaling scaling{};
    double s0 = 0.0;

    double operator()(double x, double y) const;
    std::string description() const;

    static KernelSpec airy();
    static KernelSpec bessel(double a);
    static KernelSpec lue(const EnsembleParams& p);
    static KernelSpec lue_scaled_left(const EnsembleParams& p, const EdgeScaling& s);
    static KernelSpec g_tau(const EnsembleParams& p, const EdgeScaling& s, double s0);
    static KernelSpec h_tau(const EnsembleParams& p, const EdgeScaling& s, double s0);
    static KernelSpec airy_sum(double s0);
};

}  // namespace edgekit
