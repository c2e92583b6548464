#ifndef DELBOUND_KERNELS_HPP
#define DELBOUND_KERNELS_HPP

#include <functional>

#include "delbound/orthopoly.hpp"

namespace delbound {

struct KernelParams {
    BasisId basis = BasisId::base;
    int k = 0;
    double s = 0.0;
};

/// A polynomial given by an evaluator and a bound on its degree.
struct PolynomialFn {
    std::function<double(double)> eval;
    int degree = 0;
};

/// K_k(x,s) = sum_{i<=k} p_i(s) p_i(x), summed directly (no 0/0 at x = s).
double cd_kernel(const OrthonormalSystem& system, int k, double s, double x);
double cd_kernel(const MeasureSpec& spec, const KernelParams& params, double x);

/// (x-s) K_k(x,s) - a_k (p_{k+1}(x) p_k(s) - p_{k+1}(s) p_k(x)).
///
/// The recurrence is re-run in binary128: for large discrete spaces the
/// individual terms reach 1e18 near |x| = 1, so a double evaluation could
/// not resolve the identity to 1e-9 even though it holds exactly for the
/// stored coefficients.
double cd_identity_residual(const OrthonormalSystem& system, int k, double s, double x);
double cd_identity_residual(const MeasureSpec& spec, const KernelParams& params, double x);

/// <K_k(., y), f> against the basis's own (variant) measure.
double reproduce(const MeasureSpec& spec, BasisId basis, int k, double y, const PolynomialFn& f);

/// p_i^-(x) = K_i(1,x) / sqrt(a_i p_{i+1}(1) p_i(1)), built from the base
/// system alone.
double adjacent_minus_from_kernel(const OrthonormalSystem& base, int i, double x);

/// K_i(x,-1) p_{i+1}(1) - K_i(x,1) p_{i+1}(-1): the plus-minus adjacent
/// polynomial up to a positive factor (p_{i+1} enters through a_i p_{i+1}).
double adjacent_plusminus_from_kernel(const OrthonormalSystem& base, int i, double x);

}  // namespace delbound

#endif
