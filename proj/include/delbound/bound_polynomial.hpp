#ifndef DELBOUND_BOUND_POLYNOMIAL_HPP
#define DELBOUND_BOUND_POLYNOMIAL_HPP

#include <Eigen/Core>

#include <memory>
#include <string>

#include "delbound/kernels.hpp"

namespace delbound {

enum class Family { mrrw, lev_odd, lev_even, fourier };
/// How the squared factor g was obtained.
enum class Route { analytic, spectral, fourier };

std::string to_string(Family family);
std::string to_string(Route route);

/// A candidate for the Delsarte bound, normalized to f(1) = 1.
///
/// Kernel-square families have the shape
///     f(x) = c (x - root) (x + 1)^e g(x)^2,   g = sum_i g_i p_i^{basis}(x),
/// with e = 1 only for lev_even. The analytic route takes g_i = p_i(s), the
/// spectral route an eigenvector of T_k. The fourier family is an explicit
/// expansion in the base system.
struct BoundPolynomial {
    Family family = Family::mrrw;
    Route route = Route::analytic;
    int k = 0;
    int degree = 0;
    double s = 0.0;      ///< maximal inner product the polynomial is built for
    double root = 0.0;   ///< the linear factor's zero; equals s except for the fixed-operator bound
    BasisId basis = BasisId::base;
    bool plus_one = false;
    double c = 1.0;
    Eigen::VectorXd g;
    std::shared_ptr<const OrthonormalSystem> system;
    /// f_0, f_1, ... in the base orthonormal system. For discrete spaces the
    /// expansion is of f restricted to the support, so it stops at the
    /// space's maximal degree even when deg f is larger.
    Eigen::VectorXd fourier;

    double value(double x) const;
    double derivative(double x) const;
    double f0() const { return fourier(0); }
};

/// Kernel-square polynomial with c fixed so that f(1) = 1; fills `fourier`.
BoundPolynomial make_kernel_square(const MeasureSpec& spec, Family family, Route route, BasisId basis, int k,
                                   double s, double root, Eigen::VectorXd g);

/// Explicit polynomial sum_i coeffs_i p_i, rescaled to f(1) = 1.
BoundPolynomial make_fourier_polynomial(const MeasureSpec& spec, const Eigen::VectorXd& coeffs, double s);

}  // namespace delbound

#endif
