#ifndef DELBOUND_ORTHOPOLY_HPP
#define DELBOUND_ORTHOPOLY_HPP

#include <Eigen/Core>

#include <memory>

#include "delbound/spaces.hpp"
#include "delbound/tridiagonal.hpp"

namespace delbound {

/// The base system {p_i}, or one of the adjacent systems {p_i^-}, {p_i^+-}.
using BasisId = Variant;

/// Orthonormal polynomials of one variant measure, known through their
/// recurrence coefficients up to `degree()`. Immutable once built.
class OrthonormalSystem {
public:
    OrthonormalSystem(Variant variant, RecurrenceCoeffs coeffs, double mass, int max_degree);

    Variant variant() const { return variant_; }
    /// Highest degree the measure carries (finite for discrete measures).
    int max_degree() const { return max_degree_; }
    /// Highest degree with coefficients on hand.
    int degree() const { return coeffs_.degree(); }
    double mass() const { return mass_; }
    double p0() const { return p0_; }
    const RecurrenceCoeffs& coeffs() const { return coeffs_; }
    double a(int i) const { return coeffs_.a(i); }
    double b(int i) const { return coeffs_.b(i); }

    double eval(int i, double x) const;
    /// (p_0(x), ..., p_k(x))
    Eigen::VectorXd eval_upto(int k, double x) const;
    void eval_upto_with_derivative(int k, double x, Eigen::VectorXd& p, Eigen::VectorXd& dp) const;
    /// a_k p_{k+1}(x); defined for k = degree() as well.
    double scaled_next(int k, double x) const;

    /// J_k, the leading (k+1)x(k+1) block of the Jacobi matrix.
    Eigen::MatrixXd jacobi(int k) const;
    /// Zeros of p_k as eigenvalues of J_{k-1}, ascending; empty for k = 0.
    /// k = degree()+1 is allowed and yields the zeros of a_k p_{k+1}.
    Eigen::VectorXd zeros(int k) const;
    /// Largest zero of p_k; -1 for k = 0.
    double largest_zero(int k) const;

    void require_degree(int k, const char* what) const;

private:
    Variant variant_;
    RecurrenceCoeffs coeffs_;
    double mass_;
    double p0_;
    int max_degree_;
};

/// Cached system for (spec, variant) with coefficients through at least
/// `degree` (clamped to the measure's maximal degree). Safe to call
/// concurrently.
std::shared_ptr<const OrthonormalSystem> orthonormal_system(const MeasureSpec& spec, Variant variant, int degree);

/// Coefficients a_0..a_m, b_0..b_m of the basis.
RecurrenceCoeffs recurrence_coeffs(const MeasureSpec& spec, BasisId basis, int m);

double eval_basis(const MeasureSpec& spec, BasisId basis, int i, double x);
Eigen::MatrixXd jacobi_matrix(const MeasureSpec& spec, BasisId basis, int k);
Eigen::VectorXd zeros(const MeasureSpec& spec, BasisId basis, int k);
double largest_zero(const MeasureSpec& spec, BasisId basis, int k);

}  // namespace delbound

#endif
