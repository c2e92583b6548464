#ifndef DELBOUND_SPECTRAL_HPP
#define DELBOUND_SPECTRAL_HPP

#include <Eigen/Core>

#include <optional>

#include "delbound/constructions.hpp"

namespace delbound {

/// J_k of a basis, optionally with a corner term: J_k + rho e_k e_k^T.
struct JacobiOperator {
    Eigen::MatrixXd jacobi;
    std::optional<double> rho;  ///< signed amount added at (k,k)
    BasisId basis = BasisId::base;
    int k = 0;

    Eigen::MatrixXd matrix() const;
};

struct EigenPair {
    double lambda = 0.0;
    Eigen::VectorXd vector;  ///< unit norm, first nonzero entry positive
    double residual = 0.0;   ///< ||(T - lambda) v||
    /// Second eigenvalue within 1e-12 of lambda, if any.
    std::optional<double> tied_lambda;
};

/// T_k(s) = J_k + rho_k e_k e_k^T with rho_k = a_k p_{k+1}(s) / p_k(s).
JacobiOperator build_Tk(const MeasureSpec& spec, BasisId basis, int k, double s);

EigenPair top_eigenpair(const JacobiOperator& op);

struct KernelEigenCheck {
    double residual = 0.0;      ///< ||T_k(s) v - s v|| for v = (p_0(s), ..., p_k(s))
    bool in_window = false;     ///< s strictly between the largest zeros of p_k and p_{k+1}
    double top_lambda = 0.0;
    bool kernel_is_top = false; ///< v spans the top eigenspace with strictly positive entries
};

/// Throws NumericError when s is in the window but the kernel vector is not
/// the positive top eigenvector.
KernelEigenCheck verify_kernel_eigen(const MeasureSpec& spec, BasisId basis, int k, double s);

/// (x - s) [(x + 1)] g^2 with g the top eigenfunction of T_k(s), certified.
/// The base basis reproduces the closed-form MRRW value, minus and plusminus
/// the Levenshtein polynomials; the analytic value is attached as
/// closed_form and checked to 1e-7 relative.
BoundResult spectral_recover_bound(const MeasureSpec& spec, BasisId basis, int k, double s,
                                   const Tolerances& tol = default_tolerances());

/// The s-independent operator with rho_k(1) = a_k p_{k+1}(1) / p_k(1) under
/// the given sign. The top eigenvalue lambda_k fixes the polynomial
/// (x - lambda_k) f^2, valid for inner products up to lambda_k. The bound
/// is min(4 a_k p_{k+1}(1) p_k(1) / (1 - lambda_k), 1/F_0); the former is
/// attached as closed_form.
BoundResult spectral_bound_fixed(const MeasureSpec& spec, int k, SignVariant sign,
                                 const Tolerances& tol = default_tolerances());

}  // namespace delbound

#endif
