#pragma once

#include "edgekit/scaling.hpp"
#include "edgekit/specfun.hpp"

namespace edgekit {

/// Liouville-Green quantities for one ensemble: x = kappa z turns the Laguerre equation into
/// w'' = (kappa^2 f(z) + g(z)) w with f = (z - z1)(z - z2)/(4 z^2), g = -1/(4 z^2).
struct LGContext {
    EnsembleParams ensemble;
    double kappa = 0.0;        ///< N + (a+1)/2
    double lambda_half = 0.0;  ///< a/2
    double omega = 0.0;        ///< 2 lambda / kappa = a / kappa
    double z1 = 0.0;           ///< 2 - sqrt(4 - omega^2)
    double z2 = 0.0;           ///< 2 + sqrt(4 - omega^2)
};

LGContext lg_context(const EnsembleParams& p);

/// f(z) and its first two derivatives; z > 0.
double f_eval(const LGContext& ctx, double z);
double f_prime(const LGContext& ctx, double z);
double f_second(const LGContext& ctx, double z);

/// g(z) = -1/(4 z^2).
double g_eval(double z);

/// Liouville-Green variable on the left branch, 0 < z < z2: zeta >= 0 for z <= z1 (closed form,
/// exact substituted integral near z1), zeta < 0 on (z1, z2) by adaptive quadrature.
double zeta_left(const LGContext& ctx, double z);

/// zeta on (0, z1] by adaptive quadrature of the defining integral (independent of the closed form).
double zeta_left_quadrature(const LGContext& ctx, double z);

/// (2/3) zeta^{3/2} = integral of f^{1/2} from z to z1, for 0 < z <= z1, by the closed form.
double zeta_power_closed_form(const LGContext& ctx, double z);

/// zeta'(z) = -sqrt(f/zeta), with the limit -((z2 - z1)/(4 z1^2))^{1/3} at z1.
double zeta_prime(const LGContext& ctx, double z);

/// f~ = f / zeta = (zeta')^2, continuous across z1.
double f_tilde(const LGContext& ctx, double z);

/// Perturbation Psi(zeta(z)) = 5/(16 zeta^2) - zeta (z^4 + (4 - 4p) z^2 + 4 p z)/(z^2 - 4 z + p)^3,
/// p = z1 z2, for 0 < z < z1. Throws DomainError at or beyond z1.
double psi_eval(const LGContext& ctx, double z);

/// log c_N (the L-G normalization constant at z1); the sign is always +1.
LogValue c_constant(const EnsembleParams& p);

/// r_N = sqrt(N!/(N+a)!) c_N kappa^{-1/6}; requires a >= 1.
double r_constant(const EnsembleParams& p);

/// V(zeta(z)) = integral over t > zeta(z) of |Psi(t)| t^{-1/2}, for 0 < z < z1.
double volterra_v(const LGContext& ctx, double z);

/// Error bound (M/E)(kappa^{2/3} zeta) (exp(lambda0 V(zeta)/kappa) - 1) for 0 < z < z1.
double eps2_bound(const LGContext& ctx, double z);

}  // namespace edgekit
