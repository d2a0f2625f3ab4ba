#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "edgekit/errors.hpp"
#include "edgekit/operator.hpp"
#include "edgekit/quadrature.hpp"

using namespace edgekit;

namespace {

QuadratureSpec spec_of(double s0, double length, int nodes) {
    QuadratureSpec q;
    q.s0 = s0;
    q.length = length;
    q.nodes = nodes;
    return q;
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g(rng);
    return 0.5 * (m + m.transpose());
}

}  // namespace

TEST_CASE("discretization basics") {
    QuadratureSpec q = spec_of(0.0, 5.0, 30);
    DiscretizedOperator zero = discretize([](double, double) { return 0.0; }, q);
    CHECK(zero.matrix.cwiseAbs().maxCoeff() == 0.0);
    CHECK(hs_norm(zero) == 0.0);

    // Rank one kernel phi(x) phi(y): HS norm equals ||phi||^2.
    auto phi = [](double x) { return std::exp(-x) * (1.0 + x); };
    DiscretizedOperator r1 = discretize([&](double x, double y) { return phi(x) * phi(y); }, q);
    double norm2 = integrate_adaptive([&](double x) { return phi(x) * phi(x); }, 0.0, 5.0);
    CHECK(hs_norm(r1) == doctest::Approx(norm2).epsilon(1e-12));

    DiscretizedOperator a = discretize(KernelSpec::airy(), spec_of(-3.0, 10.0, 40));
    CHECK((a.matrix - a.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
    DiscretizedOperator a2 = discretize(KernelSpec::airy(), spec_of(-3.0, 10.0, 40));
    CHECK(a.matrix == a2.matrix);
    // Fast Airy path agrees with entrywise evaluation.
    DiscretizedOperator a3 = discretize([](double x, double y) { return airy_kernel(x, y); }, spec_of(-3.0, 10.0, 40));
    CHECK((a.matrix - a3.matrix).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(discretize(KernelSpec::airy(), spec_of(0.0, 0.0, 10)), DomainError);
}

TEST_CASE("Airy operator spectrum and self-convergence") {
    DiscretizedOperator a = discretize(KernelSpec::airy(), spec_of(0.0, 12.0, 60));
    Eigen::VectorXd ev = eigenvalues(a);
    CHECK(ev.minCoeff() >= -1e-10);
    CHECK(ev.maxCoeff() <= 1.0 + 1e-10);
    Eigen::VectorXd ev2 = eigenvalues(discretize(KernelSpec::airy(), spec_of(0.0, 12.0, 120)));
    CHECK(std::abs(ev.maxCoeff() - ev2.maxCoeff()) < 1e-10);

    Eigen::VectorXd evn = eigenvalues(discretize(KernelSpec::airy(), spec_of(-8.0, 16.0, 120)));
    CHECK(evn.minCoeff() >= -1e-8);
    CHECK(evn.maxCoeff() <= 1.0 + 1e-8);
}

TEST_CASE("LUE operators are projections restricted to an interval") {
    EnsembleParams p = make_params(5, 3);
    Eigen::VectorXd ev = eigenvalues(discretize(KernelSpec::lue(p), spec_of(0.0, 80.0, 160)));
    CHECK(ev.minCoeff() >= -1e-8);
    CHECK(ev.maxCoeff() <= 1.0 + 1e-8);
    // Five eigenvalues equal to one (rank-N projection), the rest zero.
    CHECK(ev.sum() == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(ev(ev.size() - 5) == doctest::Approx(1.0).epsilon(1e-8));

    EnsembleParams q = make_params(64, 64);
    EdgeScaling sc = composite_left(q);
    Eigen::VectorXd evs = eigenvalues(discretize(KernelSpec::lue_scaled_left(q, sc), spec_of(-2.0, 14.0, 120)));
    CHECK(evs.minCoeff() >= -1e-8);
    CHECK(evs.maxCoeff() <= 1.0 + 1e-8);
}

TEST_CASE("Hilbert-Schmidt norms") {
    // ||Ai(x+y)||^2 on [0, L]^2 equals int_0^L u Ai(u)^2 du + int_L^{2L} (2L - u) Ai(u)^2 du.
    for (double length : {10.0, 14.0}) {
        double n_direct = hs_norm(KernelSpec::airy_sum(0.0), spec_of(0.0, length, 120));
        double i1 = integrate_adaptive(
            [](double u) {
                double a = boost::math::airy_ai(u);
                return u * a * a;
            },
            0.0, length, 1e-16, 1e-13);
        double i2 = integrate_adaptive(
            [&](double u) {
                double a = boost::math::airy_ai(u);
                return (2.0 * length - u) * a * a;
            },
            length, 2.0 * length, 1e-18, 1e-13);
        CHECK(n_direct == doctest::Approx(std::sqrt(i1 + i2)).epsilon(1e-10));
    }
    double n10 = hs_norm(KernelSpec::airy_sum(0.0), spec_of(0.0, 10.0, 120));
    double n14 = hs_norm(KernelSpec::airy_sum(0.0), spec_of(0.0, 14.0, 120));
    CHECK(std::abs(n10 - n14) < 1e-8);

    // Ai Ai = K_Ai on L^2(s0, infinity) when the Hankel kernel is Ai(x + y - s0).
    QuadratureSpec q = spec_of(-2.0, 14.0, 120);
    DiscretizedOperator ai = discretize(KernelSpec::airy_sum(-2.0), q);
    DiscretizedOperator k = discretize(KernelSpec::airy(), q);
    CHECK((ai.matrix * ai.matrix - k.matrix).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("trace inequality") {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(6, 6);
    TraceBound t0 = trace_bound(z, z, z);
    CHECK(t0.lhs == 0.0);
    CHECK(t0.rhs == 0.0);

    Eigen::VectorXd v = Eigen::VectorXd::Random(6).normalized();
    Eigen::MatrixXd proj = v * v.transpose();
    TraceBound t1 = trace_bound(proj, proj, std::numbers::sqrt2 * proj);
    CHECK(t1.lhs < 1e-12);
    CHECK(t1.rhs < 1e-12);
    CHECK(t1.lhs <= t1.rhs + 1e-9);

    std::mt19937_64 rng(99);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::MatrixXd a = random_symmetric(rng, 20), b = random_symmetric(rng, 20), c = random_symmetric(rng, 20);
        TraceBound t = trace_bound(a, b, c);
        if (!(t.lhs <= t.rhs + 1e-9)) ++violations;
    }
    CHECK(violations == 0);

    CHECK_THROWS_AS(trace_norm(Eigen::MatrixXd::Random(4, 4) + 5.0 * Eigen::MatrixXd::Identity(4, 4) +
                               Eigen::MatrixXd::Ones(4, 4).triangularView<Eigen::StrictlyUpper>().toDenseMatrix()),
                    DomainError);
    DiscretizedOperator g1 = discretize(KernelSpec::airy(), spec_of(0.0, 5.0, 10));
    DiscretizedOperator g2 = discretize(KernelSpec::airy(), spec_of(0.0, 6.0, 10));
    CHECK_THROWS_AS(trace_bound(g1, g1, g2), DomainError);
}

TEST_CASE("Tracy-Widom distribution") {
    CHECK(tw2(30.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tw2(0.0) > tw2(-2.0));
    double prev = 0.0;
    for (double s = -6.0; s <= 3.0; s += 0.25) {
        double f = tw2(s);
        CHECK(f >= prev);
        CHECK(f <= 1.0);
        prev = f;
    }
    for (double s = -5.0; s <= 2.0; s += 0.25) {
        CHECK(std::abs(tw2(s, tw2_quadrature(80)) - tw2(s, tw2_quadrature(160))) < 1e-8);
    }
    // Reference values from an independent refined Nystrom computation (m = 200, L = 16).
    CHECK(tw2(-1.7694) == doctest::Approx(0.5157629).epsilon(1e-6));
    CHECK(tw2(-1.8049124) == doctest::Approx(0.5).epsilon(1e-6));
    // Mean of F2 by integrating 1 - F2 and F2 over the two half-lines.
    double mean = integrate_adaptive([](double s) { return 1.0 - tw2(s); }, 0.0, 12.0, 1e-12, 1e-10) -
                  integrate_adaptive([](double s) { return tw2(s); }, -14.0, 0.0, 1e-12, 1e-10);
    CHECK(mean == doctest::Approx(-1.7710868).epsilon(1e-6));

    CHECK(fredholm_det_checked(KernelSpec::airy(), -1.0, tw2_quadrature()) == doctest::Approx(tw2(-1.0)).epsilon(1e-10));
    CHECK_THROWS_AS(fredholm_det_checked(KernelSpec::airy(), -4.0, tw2_quadrature(6)), ConvergenceError);
}

TEST_CASE("W1 upper bound") {
    QuadratureSpec q = spec_of(0.0, 14.0, 120);
    double prev = INFINITY;
    for (int big_n : {128, 256, 512}) {
        EnsembleParams p = params_for_gamma(big_n, 0.5);
        EdgeScaling sc = composite_left(p);
        EdgeNorms e = edge_norms(p, sc, 0.0, q);
        CHECK(e.w1 >= 0.0);
        CHECK(e.w1 < prev);
        CHECK(e.w1 == doctest::Approx(w1_upper_bound(p, sc, 0.0, q)).epsilon(1e-14));
        // Triangle inequality between the single-kernel and the combined norms.
        CHECK(e.norm_sum <= e.norm_g + e.norm_h + 1e-14);
        prev = e.w1;
    }
    // Gap probabilities differ by at most the trace-norm distance, hence by at most the bound.
    EnsembleParams p = params_for_gamma(256, 0.5);
    EdgeScaling sc = composite_left(p);
    double gap_lue = fredholm_det(KernelSpec::lue_scaled_left(p, sc), 0.0, q);
    double gap_airy = fredholm_det(KernelSpec::airy(), 0.0, q);
    CHECK(std::abs(gap_lue - gap_airy) <= w1_upper_bound(p, sc, 0.0, q));
    CHECK_THROWS_AS(edge_norms(make_params(10, 1), sc, 0.0, q), DomainError);
}
