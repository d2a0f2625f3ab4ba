#pragma once

namespace edgekit {

/// Airy functions Ai, Ai', Bi, Bi' at one argument.
/// Bi and Bi' become +infinity past the double range (x above about 104).
struct AiryPair {
    double ai = 0.0;
    double ai_prime = 0.0;
    double bi = 0.0;
    double bi_prime = 0.0;
};

/// Exponentially scaled Airy values. For x > 0 with z = (2/3) x^{3/2}:
/// ai, ai_prime carry e^{z} and bi, bi_prime carry e^{-z}. For x <= 0 they are unscaled.
struct ScaledAiry {
    double ai = 0.0;
    double ai_prime = 0.0;
    double bi = 0.0;
    double bi_prime = 0.0;
    double zeta = 0.0;  ///< the exponent z used for the scaling (0 when x <= 0)
};

/// Weight, moduli and phases of the Airy functions (Olver's M, N, E, theta, omega).
struct AiryModulus {
    double big_e = 1.0;
    double big_m = 0.0;
    double big_n = 0.0;
    double theta = 0.0;
    double omega = 0.0;
    double crossover_c = 0.0;
    double m_over_e = 0.0;  ///< M/E, finite even where E overflows
};

/// Ai, Ai', Bi, Bi' accurate to about 1e-13 relative (absolute near zeros) for |x| <= 30.
AiryPair airy_eval(double x);

/// Scaled variant that never overflows or underflows for finite x.
ScaledAiry airy_eval_scaled(double x);

/// Largest negative root c of Ai(x) = Bi(x), about -0.36605; computed once by bisection.
double airy_crossover_c();

/// E, M, N, theta, omega at x. For x <= c, E = 1 exactly.
AiryModulus airy_modulus(double x);

/// sup over x in [-100, 100] of pi |x|^{1/2} M(x)^2 on a dense grid with local refinement; cached.
double lambda0_estimate();

/// sup over [x_lo, x_hi] of pi E(x) M(x) |x|^{1/2} |Ai(x)|, grid step `step` plus golden-section
/// refinement at every grid maximum.
double lambda1_sup(double x_lo, double x_hi, double step = 0.01);

/// Generalized Laguerre polynomial L_j^a(x) by the three-term recurrence.
/// Throws OverflowError when the value leaves the double range.
double laguerre_poly(int j, double a, double x);

/// Sign and natural log of |value|; value = sign * exp(log_abs). sign == 0 means exactly zero.
struct LogValue {
    int sign = 0;
    double log_abs = 0.0;
    double value() const;
};

/// Orthonormal Laguerre polynomial p_j^{(alpha)}(x) = sqrt(j!/Gamma(j+alpha+1)) L_j^alpha(x)
/// evaluated with base-2 exponent tracking, together with p_{j-1}, and optionally derivatives.
struct OrthoLaguerre {
    LogValue p_j;
    LogValue p_jm1;
    LogValue dp_j;
    LogValue dp_jm1;
};
OrthoLaguerre ortho_laguerre(int j, double alpha, double x, bool with_derivative = false);

/// Laguerre function psi_j^a(x) = x^{a/2} e^{-x/2} L_j^a(x) in log form; never overflows.
LogValue laguerre_fn_log(int j, double a, double x);

/// Laguerre function psi_j^a(x) as a double (0 at x = 0 when a > 0).
double laguerre_fn(int j, double a, double x);

/// Bessel function of the first kind J_a(x), x >= 0, by its power series.
double bessel_j(double a, double x);

/// Derivative J_a'(x), x >= 0, by the differentiated power series.
double bessel_j_prime(double a, double x);

}  // namespace edgekit
