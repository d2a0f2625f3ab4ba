#include "edgekit/lgtransform.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "edgekit/errors.hpp"
#include "edgekit/quadrature.hpp"

namespace edgekit {

LGContext lg_context(const EnsembleParams& p) {
    if (p.big_n < 1 || p.a < 0) throw DomainError("lg_context: need N >= 1 and a >= 0");
    LGContext c;
    c.ensemble = p;
    c.kappa = p.big_n + (p.a + 1) / 2.0;
    c.lambda_half = p.a / 2.0;
    c.omega = 2.0 * c.lambda_half / c.kappa;
    double r = std::sqrt(4.0 - c.omega * c.omega);
    // z1 = 2 - r computed as omega^2 / (2 + r) to avoid cancellation when omega is small.
    c.z1 = c.omega * c.omega / (2.0 + r);
    c.z2 = 2.0 + r;
    return c;
}

double f_eval(const LGContext& ctx, double z) { return (z - ctx.z1) * (z - ctx.z2) / (4.0 * z * z); }

double f_prime(const LGContext& ctx, double z) {
    double p = ctx.omega * ctx.omega;
    return 1.0 / (z * z) - p / (2.0 * z * z * z);
}

double f_second(const LGContext& ctx, double z) {
    double p = ctx.omega * ctx.omega;
    return -2.0 / (z * z * z) + 1.5 * p / (z * z * z * z);
}

double g_eval(double z) { return -1.0 / (4.0 * z * z); }

namespace {

// Fraction of z1 below which the exact substituted integral replaces the closed form.
constexpr double kNearZ1 = 0.7;

const QuadratureRule& unit_rule() {
    static const QuadratureRule r = gauss_legendre(40, 0.0, 1.0);
    return r;
}

// (2/3) zeta^{3/2} for z = z1 - eps, 0 < eps <= kNearZ1 * z1, via t = z1 - eps u^2:
// integral = (sqrt(eps^3 A) / (2 z1)) * 2 int_0^1 u^2 sqrt(1 + eps u^2 / A) / (1 - eps u^2 / z1) du.
double zeta_power_near(const LGContext& ctx, double eps) {
    const double A = ctx.z2 - ctx.z1;
    const auto& r = unit_rule();
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        double u2 = r.nodes[i] * r.nodes[i];
        sum += r.weights[i] * u2 * std::sqrt(1.0 + eps * u2 / A) / (1.0 - eps * u2 / ctx.z1);
    }
    return std::sqrt(eps * eps * eps * A) / ctx.z1 * sum;
}

// (2/3)(-zeta)^{3/2} = int_{z1}^{z} sqrt(-f) for z = z1 + eps, via t = z1 + eps u^2:
// eps^{3/2} int_0^1 u^2 sqrt(A - eps u^2) / (z1 + eps u^2) du.
double zeta_power_right_near(const LGContext& ctx, double eps) {
    const double A = ctx.z2 - ctx.z1;
    const auto& r = unit_rule();
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        double u2 = r.nodes[i] * r.nodes[i];
        sum += r.weights[i] * u2 * std::sqrt(A - eps * u2) / (ctx.z1 + eps * u2);
    }
    return eps * std::sqrt(eps) * sum;
}

// (2/3)(-zeta)^{3/2} = int_{z1}^{z} sqrt(-f), z in (z1, z2), with t = z1 + u^2.
double zeta_power_right(const LGContext& ctx, double z) {
    const double A = ctx.z2 - ctx.z1;
    double eps = z - ctx.z1;
    if (eps <= 0.25 * std::min(ctx.z1, A)) return zeta_power_right_near(ctx, eps);
    auto integrand = [&](double u) {
        double u2 = u * u;
        return u2 * std::sqrt(std::max(A - u2, 0.0)) / (ctx.z1 + u2);
    };
    return integrate_adaptive(integrand, 0.0, std::sqrt(eps), 1e-14, 1e-12, 15);
}

// Explicit Psi formula, valid on both sides of z1 but losing digits as z approaches z1.
double psi_direct(const LGContext& ctx, double z) {
    double zeta = zeta_left(ctx, z);
    double p = ctx.omega * ctx.omega;
    double q = (z - ctx.z1) * (z - ctx.z2);
    double num = z * z * z * z + (4.0 - 4.0 * p) * z * z + 4.0 * p * z;
    return 5.0 / (16.0 * zeta * zeta) - zeta * num / (q * q * q);
}

// Psi is analytic through z1. Close to z1 it is taken from a Chebyshev interpolant on
// [z1 - h, z1 + h] whose nodes (an even count) all stay away from the turning point.
constexpr int kChebNodes = 16;
constexpr double kPsiDirectMin = 0.1;  // interpolant used for z1 - z < kPsiDirectMin * h

double psi_half_width(const LGContext& ctx) { return 0.3 * std::min(ctx.z1, ctx.z2 - ctx.z1); }

double psi_near(const LGContext& ctx, double z) {
    const double h = psi_half_width(ctx);
    const double x = (z - ctx.z1) / h;
    // Barycentric interpolation on Chebyshev points of the first kind.
    double numer = 0.0, denom = 0.0;
    for (int k = 0; k < kChebNodes; ++k) {
        double theta = (2.0 * k + 1.0) * std::numbers::pi / (2.0 * kChebNodes);
        double xk = std::cos(theta);
        double wk = ((k % 2) ? -1.0 : 1.0) * std::sin(theta);
        double c = wk / (x - xk);
        numer += c * psi_direct(ctx, ctx.z1 + h * xk);
        denom += c;
    }
    return numer / denom;
}

}  // namespace

double zeta_power_closed_form(const LGContext& ctx, double z) {
    if (!(z > 0.0) || z > ctx.z1) throw DomainError("closed-form zeta needs 0 < z <= z1");
    const double w = ctx.omega, z1 = ctx.z1;
    double q = std::sqrt(std::max(z * z - 4.0 * z + w * w, 0.0));
    double value = 0.5 * w * std::log(z1) - std::log(std::abs(z1 - 2.0)) -
                   0.5 * w * std::log(std::abs(w * w - 2.0 * z1)) - 0.5 * q +
                   std::log(std::abs(q + z - 2.0)) - 0.5 * w * std::log(z) +
                   0.5 * w * std::log(std::abs(w * q + w * w - 2.0 * z));
    return value;
}

double zeta_left(const LGContext& ctx, double z) {
    if (!(z > 0.0) || !(z < ctx.z2)) throw DomainError("zeta_left: z must lie in (0, z2)");
    if (z == ctx.z1) return 0.0;
    if (z < ctx.z1) {
        double eps = ctx.z1 - z;
        double pw = (eps <= kNearZ1 * ctx.z1) ? zeta_power_near(ctx, eps) : zeta_power_closed_form(ctx, z);
        return std::cbrt(1.5 * pw * 1.5 * pw);
    }
    double pw = zeta_power_right(ctx, z);
    return -std::cbrt(1.5 * pw * 1.5 * pw);
}

double zeta_left_quadrature(const LGContext& ctx, double z) {
    if (!(z > 0.0) || z > ctx.z1) throw DomainError("zeta_left_quadrature: z must lie in (0, z1]");
    if (z == ctx.z1) return 0.0;
    const double A = ctx.z2 - ctx.z1;
    // Near z1, t = z1 - u^2 gives the smooth integrand u^2 sqrt(A + u^2) / (z1 - u^2).
    const double split = std::max(z, 0.5 * ctx.z1);
    auto near = [&](double u) {
        double u2 = u * u;
        return u2 * std::sqrt(A + u2) / (ctx.z1 - u2);
    };
    double pw = integrate_adaptive(near, 0.0, std::sqrt(ctx.z1 - split), 1e-14, 1e-13, 20);
    if (z < split) {
        // Away from z1, t = e^v gives sqrt(f(t)) t = sqrt((z1 - t)(z2 - t)) / 2.
        auto far = [&](double v) {
            double t = std::exp(v);
            return 0.5 * std::sqrt((ctx.z1 - t) * (ctx.z2 - t));
        };
        pw += integrate_adaptive(far, std::log(z), std::log(split), 1e-14, 1e-13, 20);
    }
    return std::cbrt(1.5 * pw * 1.5 * pw);
}

double f_tilde(const LGContext& ctx, double z) {
    if (z == ctx.z1) return std::cbrt(std::pow((ctx.z2 - ctx.z1) / (4.0 * ctx.z1 * ctx.z1), 2));
    return f_eval(ctx, z) / zeta_left(ctx, z);
}

double zeta_prime(const LGContext& ctx, double z) { return -std::sqrt(f_tilde(ctx, z)); }

double psi_eval(const LGContext& ctx, double z) {
    if (!(z > 0.0) || !(z < ctx.z1)) throw DomainError("psi_eval: z must lie in (0, z1)");
    if (ctx.z1 - z < kPsiDirectMin * psi_half_width(ctx)) return psi_near(ctx, z);
    return psi_direct(ctx, z);
}

LogValue c_constant(const EnsembleParams& p) {
    if (p.a < 1) throw DomainError("c_constant requires a >= 1");
    const double N = p.big_n, a = p.a, n = p.n;
    const double kappa = N + (a + 1.0) / 2.0;
    double lc = 0.5 * std::log(2.0 * std::numbers::pi * a) + std::lgamma(n + 1.0) - std::lgamma(a + 1.0) -
                std::lgamma(N + 1.0) + std::log(kappa) / 6.0 + a * std::log(a) - a / 2.0 +
                0.5 * (N + 0.5) * std::log(N + 0.5) - 0.5 * (n + 0.5) * std::log(n + 0.5);
    return {1, lc};
}

double r_constant(const EnsembleParams& p) {
    LogValue c = c_constant(p);
    const double N = p.big_n, n = p.n, kappa = N + (p.a + 1.0) / 2.0;
    return std::exp(0.5 * (std::lgamma(N + 1.0) - std::lgamma(n + 1.0)) + c.log_abs - std::log(kappa) / 6.0);
}

namespace {

// Adaptive integral of g over [t0, t1], split where Psi(map(t)) changes sign so every piece
// is smooth.
template <class Map, class G>
double integrate_split(Map map, G g, double t0, double t1, const LGContext& ctx) {
    if (!(t1 > t0)) return 0.0;
    auto psi_t = [&](double t) { return psi_eval(ctx, map(t)); };
    std::vector<double> cuts{t0};
    constexpr int kScan = 64;
    double prev_t = t0, prev_psi = psi_t(t0);
    for (int i = 1; i <= kScan; ++i) {
        double t = t0 + (t1 - t0) * i / kScan;
        double cur = psi_t(t);
        if ((cur > 0.0) != (prev_psi > 0.0) && cur != 0.0 && prev_psi != 0.0) {
            boost::uintmax_t iters = 100;
            auto root = boost::math::tools::toms748_solve(psi_t, prev_t, t, prev_psi, cur,
                                                          boost::math::tools::eps_tolerance<double>(50), iters);
            cuts.push_back(0.5 * (root.first + root.second));
        }
        prev_t = t;
        prev_psi = cur;
    }
    cuts.push_back(t1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_adaptive(g, cuts[i], cuts[i + 1], 1e-12, 1e-8, 12);
    return total;
}

}  // namespace

double volterra_v(const LGContext& ctx, double z) {
    if (!(z > 0.0) || !(z < ctx.z1)) throw DomainError("volterra_v: z must lie in (0, z1)");
    // Below z_star the non-leading part of Psi is below 1e-12 relative, so the remaining range
    // t > zeta(z_star) contributes the closed form int 5/16 t^{-5/2} dt = (5/24) zeta^{-3/2}.
    double z_star = std::min(z, ctx.z1 * 1e-14);
    double zeta_star = zeta_left(ctx, z_star);
    double tail = 5.0 / 24.0 / std::pow(zeta_star, 1.5);
    if (z <= z_star) return tail;
    // Element |Psi| zeta^{-1/2} |zeta'(u)| du with |zeta'| = sqrt(f~). Below z1/2 the variable
    // v = log u is used; above it u = z1 - w^2 removes the zeta^{-1/2} endpoint singularity.
    auto element = [&](double u) {
        double zeta = zeta_left(ctx, u);
        return std::abs(psi_eval(ctx, u)) / std::sqrt(zeta) * std::sqrt(f_eval(ctx, u) / zeta);
    };
    const double z_mid = std::min(z, 0.5 * ctx.z1);
    double body = integrate_split(
        [&](double v) { return std::exp(v); }, [&](double v) { return element(std::exp(v)) * std::exp(v); },
        std::log(z_star), std::log(z_mid), ctx);
    if (z > z_mid) {
        body += integrate_split(
            [&](double w) { return ctx.z1 - w * w; },
            [&](double w) { return element(ctx.z1 - w * w) * 2.0 * w; }, std::sqrt(ctx.z1 - z),
            std::sqrt(ctx.z1 - z_mid), ctx);
    }
    return body + tail;
}

double eps2_bound(const LGContext& ctx, double z) {
    double v = volterra_v(ctx, z);
    double zeta = zeta_left(ctx, z);
    double me = airy_modulus(std::cbrt(ctx.kappa * ctx.kappa) * zeta).m_over_e;
    return me * std::expm1(lambda0_estimate() * v / ctx.kappa);
}

}  // namespace edgekit
