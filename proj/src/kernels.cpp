#include "edgekit/kernels.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "edgekit/errors.hpp"
#include "edgekit/specfun.hpp"

namespace edgekit {

namespace {

// a1 * b1 - a2 * b2 for log-form factors.
LogValue diff_of_products(const LogValue& a1, const LogValue& b1, const LogValue& a2, const LogValue& b2) {
    int s1 = a1.sign * b1.sign, s2 = a2.sign * b2.sign;
    if (s1 == 0 && s2 == 0) return {};
    double l1 = a1.log_abs + b1.log_abs, l2 = a2.log_abs + b2.log_abs;
    double m = (s1 == 0) ? l2 : (s2 == 0) ? l1 : std::max(l1, l2);
    double v = (s1 ? s1 * std::exp(l1 - m) : 0.0) - (s2 ? s2 * std::exp(l2 - m) : 0.0);
    if (v == 0.0) return {};
    return {v > 0.0 ? 1 : -1, m + std::log(std::abs(v))};
}

// log of x^{a/2} e^{-x/2}; x^0 = 1 at x = 0 when a = 0.
double log_weight(double a, double x) { return (a > 0.0 ? 0.5 * a * std::log(x) : 0.0) - 0.5 * x; }

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

double kernel_seam(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

// The kernels below order their arguments so that K(x, y) and K(y, x) are bitwise equal.

double airy_kernel(double x, double y) {
    if (y < x) std::swap(x, y);
    if (std::abs(x - y) <= kernel_seam(x)) {
        double m = 0.5 * (x + y);
        AiryPair a = airy_eval(m);
        return a.ai_prime * a.ai_prime - m * a.ai * a.ai;
    }
    AiryPair ax = airy_eval(x), ay = airy_eval(y);
    return (ax.ai * ay.ai_prime - ay.ai * ax.ai_prime) / (x - y);
}

double bessel_kernel(double a, double x, double y) {
    if (a < 0.0 || x < 0.0 || y < 0.0) throw DomainError("bessel_kernel: need a, x, y >= 0");
    if (y < x) std::swap(x, y);
    if (std::abs(x - y) <= kernel_seam(x)) {
        double m = 0.5 * (x + y);
        if (m == 0.0) return a == 0.0 ? 0.25 : 0.0;
        double r = std::sqrt(m);
        double j = bessel_j(a, r), jp = bessel_j_prime(a, r);
        return (m - a * a) / (4.0 * m) * j * j + 0.25 * jp * jp;
    }
    double rx = std::sqrt(x), ry = std::sqrt(y);
    double jx = bessel_j(a, rx), jy = bessel_j(a, ry);
    double jpx = bessel_j_prime(a, rx), jpy = bessel_j_prime(a, ry);
    return (ry * jpy * jx - rx * jpx * jy) / (2.0 * (x - y));
}

double lue_kernel(const EnsembleParams& p, double x, double y) {
    if (x < 0.0 || y < 0.0) return 0.0;
    if (y < x) std::swap(x, y);
    const int big_n = p.big_n;
    const double a = p.a;
    const double pref = std::sqrt(static_cast<double>(big_n) * (big_n + a));
    if (std::abs(x - y) <= kernel_seam(x)) {
        double m = 0.5 * (x + y);
        if (m == 0.0 && a > 0.0) return 0.0;
        OrthoLaguerre o = ortho_laguerre(big_n, a, m, true);
        LogValue d = diff_of_products(o.dp_j, o.p_jm1, o.p_j, o.dp_jm1);
        if (d.sign == 0) return 0.0;
        return -pref * d.sign * std::exp(d.log_abs + 2.0 * log_weight(a, m));
    }
    if ((x == 0.0 || y == 0.0) && a > 0.0) return 0.0;
    OrthoLaguerre ox = ortho_laguerre(big_n, a, x), oy = ortho_laguerre(big_n, a, y);
    LogValue d = diff_of_products(ox.p_j, oy.p_jm1, ox.p_jm1, oy.p_j);
    if (d.sign == 0) return 0.0;
    return -pref * d.sign * std::exp(d.log_abs + log_weight(a, x) + log_weight(a, y)) / (x - y);
}

XiEta xi_eta(const EnsembleParams& p, double x) {
    if (p.a < 2) throw DomainError("xi_eta requires a >= 2");
    if (!(x > 0.0)) return {};
    const int big_n = p.big_n;
    const double a = p.a;
    const double log_pref = 0.25 * std::log(static_cast<double>(big_n) * p.n) - 0.5 * std::log(2.0);
    const double lx = std::log(x);
    XiEta r;
    LogValue pn = ortho_laguerre(big_n, a - 1.0, x).p_j;
    if (pn.sign != 0)
        r.xi = parity_sign(big_n) * pn.sign * std::exp(log_pref + (0.5 * a - 1.0) * lx - 0.5 * x + pn.log_abs);
    LogValue pm = ortho_laguerre(big_n - 1, a + 1.0, x).p_j;
    if (pm.sign != 0)
        r.eta = parity_sign(big_n - 1) * pm.sign * std::exp(log_pref + 0.5 * a * lx - 0.5 * x + pm.log_abs);
    return r;
}

QuadratureSpec factorization_quadrature(const EnsembleParams& p) {
    QuadratureSpec q;
    q.s0 = 0.0;
    q.length = 4.0 * p.n + 20.0 * std::sqrt(static_cast<double>(p.n)) + 60.0;
    q.nodes = 20 * static_cast<int>(std::ceil(q.length / 2.0));
    return q;
}

double factorization_residual(const EnsembleParams& p, double x, double y, const QuadratureSpec& quad) {
    if (p.a < 2) throw DomainError("factorization_residual requires a >= 2");
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("factorization_residual requires x, y > 0");
    if (!(quad.length > 0.0) || quad.nodes < 1) throw DomainError("factorization_residual: empty quadrature");
    static const QuadratureRule panel = gauss_legendre(20, 0.0, 1.0);
    const int panels = std::max(1, quad.nodes / 20);
    const double width = quad.length / panels;
    double integral = 0.0;
    for (int k = 0; k < panels; ++k) {
        for (std::size_t i = 0; i < panel.nodes.size(); ++i) {
            double t = (k + panel.nodes[i]) * width;
            XiEta fx = xi_eta(p, x + t), fy = xi_eta(p, y + t);
            integral += panel.weights[i] * width * (fx.xi * fy.eta + fx.eta * fy.xi);
        }
    }
    return std::abs(lue_kernel(p, x, y) - integral);
}

XiEta xi_eta_tau(const EnsembleParams& p, const EdgeScaling& scaling, double u) {
    if (scaling.side != EdgeSide::left_soft) throw DomainError("xi_eta_tau requires a left-soft scaling");
    XiEta r = xi_eta(p, scaling.mu - scaling.sigma * u);
    return {scaling.sigma * r.xi, scaling.sigma * r.eta};
}

ScaledKernels scaled_kernels(const EnsembleParams& p, const EdgeScaling& scaling, double s0, double s, double t) {
    XiEta r = xi_eta_tau(p, scaling, s + t - s0);
    ScaledKernels k;
    k.g = r.xi;
    k.h = -r.eta;
    k.k_ls = scaling.sigma * lue_kernel(p, scaling.mu - scaling.sigma * s, scaling.mu - scaling.sigma * t);
    return k;
}

double mp_density(double lambda, double sigma, double x) {
    if (!(lambda > 0.0) || !(sigma > 0.0)) throw DomainError("mp_density: need lambda, sigma > 0");
    const double s2 = sigma * sigma, r = std::sqrt(lambda);
    const double lo = s2 * (1.0 - r) * (1.0 - r), hi = s2 * (1.0 + r) * (1.0 + r);
    if (!(x > lo) || !(x < hi)) return 0.0;
    return std::sqrt((hi - x) * (x - lo)) / (2.0 * std::numbers::pi * s2 * lambda * x);
}

double KernelSpec::operator()(double x, double y) const {
    switch (kind) {
        case KernelKind::airy: return airy_kernel(x, y);
        case KernelKind::bessel: return bessel_kernel(bessel_a, x, y);
        case KernelKind::lue: return lue_kernel(params, x, y);
        case KernelKind::lue_scaled_left: return scaled_kernels(params, scaling, s0, x, y).k_ls;
        case KernelKind::g_tau: return xi_eta_tau(params, scaling, x + y - s0).xi;
        case KernelKind::h_tau: return -xi_eta_tau(params, scaling, x + y - s0).eta;
        case KernelKind::airy_sum: return airy_eval(x + y - s0).ai;
    }
    return 0.0;
}

std::string KernelSpec::description() const {
    auto ens = [&] { return "N=" + std::to_string(params.big_n) + ", a=" + std::to_string(params.a); };
    switch (kind) {
        case KernelKind::airy: return "Airy kernel";
        case KernelKind::bessel: return "Bessel kernel, a=" + std::to_string(bessel_a);
        case KernelKind::lue: return "LUE kernel, " + ens();
        case KernelKind::lue_scaled_left: return "left-soft-edge scaled LUE kernel, " + ens();
        case KernelKind::g_tau: return "G_tau(x+y-s0), " + ens() + ", s0=" + std::to_string(s0);
        case KernelKind::h_tau: return "H_tau(x+y-s0), " + ens() + ", s0=" + std::to_string(s0);
        case KernelKind::airy_sum: return "Ai(x+y-s0), s0=" + std::to_string(s0);
    }
    return {};
}

KernelSpec KernelSpec::airy() { return {}; }

KernelSpec KernelSpec::bessel(double a) {
    KernelSpec k;
    k.kind = KernelKind::bessel;
    k.bessel_a = a;
    return k;
}

KernelSpec KernelSpec::lue(const EnsembleParams& p) {
    KernelSpec k;
    k.kind = KernelKind::lue;
    k.params = p;
    return k;
}

KernelSpec KernelSpec::lue_scaled_left(const EnsembleParams& p, const EdgeScaling& s) {
    KernelSpec k;
    k.kind = KernelKind::lue_scaled_left;
    k.params = p;
    k.scaling = s;
    return k;
}

KernelSpec KernelSpec::g_tau(const EnsembleParams& p, const EdgeScaling& s, double s0) {
    KernelSpec k = lue_scaled_left(p, s);
    k.kind = KernelKind::g_tau;
    k.s0 = s0;
    return k;
}

KernelSpec KernelSpec::h_tau(const EnsembleParams& p, const EdgeScaling& s, double s0) {
    KernelSpec k = g_tau(p, s, s0);
    k.kind = KernelKind::h_tau;
    return k;
}

KernelSpec KernelSpec::airy_sum(double s0) {
    KernelSpec k;
    k.kind = KernelKind::airy_sum;
    k.s0 = s0;
    return k;
}

}  // namespace edgekit
