#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "edgekit/kernels.hpp"
#include "edgekit/quadrature.hpp"
#include "edgekit/scaling.hpp"

namespace edgekit {

/// Nystrom section of an integral operator: matrix entries sqrt(w_i) K(x_i, x_j) sqrt(w_j).
struct DiscretizedOperator {
    std::vector<double> nodes;
    std::vector<double> weights;
    Eigen::MatrixXd matrix;
};

DiscretizedOperator discretize(const KernelSpec& spec, const QuadratureSpec& quad);

/// Discretize an arbitrary symmetric kernel.
DiscretizedOperator discretize(const std::function<double(double, double)>& kernel, const QuadratureSpec& quad);

/// Eigenvalues (ascending) of a discretized operator.
Eigen::VectorXd eigenvalues(const DiscretizedOperator& op);

/// Hilbert-Schmidt norm: the L^2 norm of the kernel on the truncated square (Frobenius norm).
double hs_norm(const DiscretizedOperator& op);
double hs_norm(const KernelSpec& spec, const QuadratureSpec& quad);

/// Trace norm of a symmetric matrix: sum of absolute eigenvalues. Throws DomainError if not symmetric.
double trace_norm(const Eigen::MatrixXd& m);

struct TraceBound {
    double lhs = 0.0;  ///< 2 ||AB + BA - CC||_1
    double rhs = 0.0;  ///< ||A + B - sqrt2 C||_2 ||A + B + sqrt2 C||_2 + ||A - B||_2^2
};

TraceBound trace_bound(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c);

/// Same on discretized operators; throws DomainError when the quadrature grids differ.
TraceBound trace_bound(const DiscretizedOperator& a, const DiscretizedOperator& b, const DiscretizedOperator& c);

/// det(I - K) on (s, s + quad.length) with quad.nodes Gauss-Legendre points (quad.s0 is ignored).
double fredholm_det(const KernelSpec& spec, double s, const QuadratureSpec& quad);

/// fredholm_det that also evaluates 2m nodes and throws ConvergenceError if the two differ by more than tol.
double fredholm_det_checked(const KernelSpec& spec, double s, const QuadratureSpec& quad, double tol = 1e-8);

/// Default quadrature for the Tracy-Widom distribution: m = 80 nodes on an interval of length 16.
QuadratureSpec tw2_quadrature(int nodes = 80, double length = 16.0);

/// Tracy-Widom GUE distribution F2(s) = det(I - K_Ai) on (s, infinity).
double tw2(double s, const QuadratureSpec& quad = tw2_quadrature());

/// Kernel-difference norms at the left soft edge on L^2(s0, s0 + L), with sign (-1)^{N+1}.
struct EdgeNorms {
    double norm_sum = 0.0;   ///< ||G + H + (-1)^{N+1} sqrt2 Ai||
    double norm_plus = 0.0;  ///< ||G + H - (-1)^{N+1} sqrt2 Ai||
    double norm_g = 0.0;     ///< ||G + (-1)^{N+1} Ai / sqrt2||
    double norm_h = 0.0;     ///< ||H + (-1)^{N+1} Ai / sqrt2||
    double norm_diff = 0.0;  ///< ||G - H||
    double w1 = 0.0;         ///< (norm_sum norm_plus + norm_diff^2) / 2
};

EdgeNorms edge_norms(const EnsembleParams& p, const EdgeScaling& scaling, double s0, const QuadratureSpec& quad);

/// Upper bound on W1 between the scaled LUE and Airy point processes restricted to (s0, s0 + L).
double w1_upper_bound(const EnsembleParams& p, const EdgeScaling& scaling, double s0, const QuadratureSpec& quad);

}  // namespace edgekit
