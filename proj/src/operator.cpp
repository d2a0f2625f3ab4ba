#include "edgekit/operator.hpp"

#include <cmath>
#include <numbers>

#include "edgekit/errors.hpp"
#include "edgekit/parallel.hpp"
#include "edgekit/specfun.hpp"

namespace edgekit {

namespace {

DiscretizedOperator empty_operator(const QuadratureSpec& quad) {
    if (quad.nodes < 1 || !(quad.length > 0.0)) throw DomainError("quadrature needs nodes >= 1 and length > 0");
    QuadratureRule r = make_rule(quad);
    DiscretizedOperator op;
    op.nodes = std::move(r.nodes);
    op.weights = std::move(r.weights);
    op.matrix = Eigen::MatrixXd::Zero(quad.nodes, quad.nodes);
    return op;
}

// Fill the upper triangle row by row in parallel, then mirror it.
template <class Entry>
void fill_symmetric(DiscretizedOperator& op, Entry entry) {
    const std::size_t m = op.nodes.size();
    std::vector<double> sw(m);
    for (std::size_t i = 0; i < m; ++i) sw[i] = std::sqrt(op.weights[i]);
    parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = i; j < m; ++j) op.matrix(i, j) = sw[i] * entry(i, j) * sw[j];
    });
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) op.matrix(i, j) = op.matrix(j, i);
}

double frobenius(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace

DiscretizedOperator discretize(const KernelSpec& spec, const QuadratureSpec& quad) {
    DiscretizedOperator op = empty_operator(quad);
    const auto& x = op.nodes;
    if (spec.kind == KernelKind::airy) {
        // Ai and Ai' are needed only at the nodes.
        std::vector<double> ai(x.size()), aip(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            AiryPair a = airy_eval(x[i]);
            ai[i] = a.ai;
            aip[i] = a.ai_prime;
        }
        fill_symmetric(op, [&](std::size_t i, std::size_t j) {
            if (i == j) return aip[i] * aip[i] - x[i] * ai[i] * ai[i];
            if (std::abs(x[i] - x[j]) <= kernel_seam(x[i])) return airy_kernel(x[i], x[j]);
            return (ai[i] * aip[j] - ai[j] * aip[i]) / (x[i] - x[j]);
        });
        return op;
    }
    fill_symmetric(op, [&](std::size_t i, std::size_t j) { return spec(x[i], x[j]); });
    return op;
}

DiscretizedOperator discretize(const std::function<double(double, double)>& kernel, const QuadratureSpec& quad) {
    DiscretizedOperator op = empty_operator(quad);
    fill_symmetric(op, [&](std::size_t i, std::size_t j) { return kernel(op.nodes[i], op.nodes[j]); });
    return op;
}

Eigen::VectorXd eigenvalues(const DiscretizedOperator& op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed");
    return es.eigenvalues();
}

double hs_norm(const DiscretizedOperator& op) { return frobenius(op.matrix); }

double hs_norm(const KernelSpec& spec, const QuadratureSpec& quad) { return hs_norm(discretize(spec, quad)); }

double trace_norm(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DomainError("trace_norm: matrix must be square");
    double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("trace_norm: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed");
    return es.eigenvalues().cwiseAbs().sum();
}

TraceBound trace_bound(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c) {
    if (a.rows() != b.rows() || a.rows() != c.rows() || a.cols() != b.cols() || a.cols() != c.cols())
        throw DomainError("trace_bound: operand shapes differ");
    const double r2 = std::numbers::sqrt2;
    Eigen::MatrixXd combo = a * b + b * a - c * c;
    combo = 0.5 * (combo + combo.transpose());
    TraceBound t;
    t.lhs = 2.0 * trace_norm(combo);
    double d = frobenius(a - b);
    t.rhs = frobenius(a + b - r2 * c) * frobenius(a + b + r2 * c) + d * d;
    return t;
}

TraceBound trace_bound(const DiscretizedOperator& a, const DiscretizedOperator& b, const DiscretizedOperator& c) {
    if (a.nodes != b.nodes || a.nodes != c.nodes || a.weights != b.weights || a.weights != c.weights)
        throw DomainError("trace_bound: operators live on different quadrature grids");
    return trace_bound(a.matrix, b.matrix, c.matrix);
}

double fredholm_det(const KernelSpec& spec, double s, const QuadratureSpec& quad) {
    QuadratureSpec q = quad;
    q.s0 = s;
    DiscretizedOperator op = discretize(spec, q);
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(q.nodes, q.nodes) - op.matrix;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const Eigen::MatrixXd& u = lu.matrixLU();
    double log_abs = 0.0;
    int sign = lu.permutationP().determinant();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        double d = u(i, i);
        if (d == 0.0) return 0.0;
        if (d < 0.0) sign = -sign;
        log_abs += std::log(std::abs(d));
    }
    return sign * std::exp(log_abs);
}

double fredholm_det_checked(const KernelSpec& spec, double s, const QuadratureSpec& quad, double tol) {
    double coarse = fredholm_det(spec, s, quad);
    QuadratureSpec fine = quad;
    fine.nodes *= 2;
    double refined = fredholm_det(spec, s, fine);
    if (std::abs(refined - coarse) > tol)
        throw ConvergenceError("Fredholm determinant moved by more than the tolerance when doubling the nodes");
    return refined;
}

QuadratureSpec tw2_quadrature(int nodes, double length) {
    QuadratureSpec q;
    q.nodes = nodes;
    q.length = length;
    return q;
}

double tw2(double s, const QuadratureSpec& quad) { return fredholm_det(KernelSpec::airy(), s, quad); }

EdgeNorms edge_norms(const EnsembleParams& p, const EdgeScaling& scaling, double s0, const QuadratureSpec& quad) {
    if (p.a < 2) throw DomainError("edge norms require a >= 2");
    QuadratureSpec q = quad;
    q.s0 = s0;
    DiscretizedOperator g = empty_operator(q);
    DiscretizedOperator h = g, ai = g;
    const auto& x = g.nodes;
    const std::size_t m = x.size();
    parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = i; j < m; ++j) {
            double u = x[i] + x[j] - s0;
            double sw = std::sqrt(g.weights[i] * g.weights[j]);
            XiEta v = xi_eta_tau(p, scaling, u);
            g.matrix(i, j) = g.matrix(j, i) = sw * v.xi;
            h.matrix(i, j) = h.matrix(j, i) = -sw * v.eta;
            ai.matrix(i, j) = ai.matrix(j, i) = sw * airy_eval(u).ai;
        }
    });
    const double sign = (p.big_n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N+1}
    const double r2 = std::numbers::sqrt2;
    EdgeNorms e;
    Eigen::MatrixXd sum = g.matrix + h.matrix;
    e.norm_sum = frobenius(sum + sign * r2 * ai.matrix);
    e.norm_plus = frobenius(sum - sign * r2 * ai.matrix);
    e.norm_g = frobenius(g.matrix + sign * ai.matrix / r2);
    e.norm_h = frobenius(h.matrix + sign * ai.matrix / r2);
    e.norm_diff = frobenius(g.matrix - h.matrix);
    e.w1 = 0.5 * (e.norm_sum * e.norm_plus + e.norm_diff * e.norm_diff);
    return e;
}

double w1_upper_bound(const EnsembleParams& p, const EdgeScaling& scaling, double s0, const QuadratureSpec& quad) {
    return edge_norms(p, scaling, s0, quad).w1;
}

}  // namespace edgekit
