#include "delbound/kernels.hpp"

#include <cmath>
#include <vector>

#include "delbound/errors.hpp"

namespace delbound {

double cd_kernel(const OrthonormalSystem& system, int k, double s, double x)
{
    system.require_degree(k, "cd_kernel");
    const auto ps = evaluate_recurrence<double>(system.coeffs(), system.p0(), s, k);
    const auto px = evaluate_recurrence<double>(system.coeffs(), system.p0(), x, k);
    double sum = 0.0;
    for (int i = 0; i <= k; ++i) sum += ps[i] * px[i];
    return sum;
}

double cd_kernel(const MeasureSpec& spec, const KernelParams& params, double x)
{
    return cd_kernel(*orthonormal_system(spec, params.basis, params.k), params.k, params.s, x);
}

double cd_identity_residual(const OrthonormalSystem& system, int k, double s, double x)
{
    using Quad = __float128;
    system.require_degree(k, "cd_identity_residual");
    const RecurrenceCoeffs& rc = system.coeffs();
    const Quad qs = s, qx = x;
    // p0 = 1/sqrt(mass) is only known to double precision; the identity is
    // homogeneous of degree two in p0, so evaluate with p0 = 1 and rescale.
    const auto ps = evaluate_recurrence<Quad>(rc, Quad(1), qs, k);
    const auto px = evaluate_recurrence<Quad>(rc, Quad(1), qx, k);
    Quad kernel = 0;
    for (int i = 0; i <= k; ++i) kernel += ps[i] * px[i];
    const Quad next_x = scaled_next_term<Quad>(rc, px, qx, k);
    const Quad next_s = scaled_next_term<Quad>(rc, ps, qs, k);
    const Quad residual = (qx - qs) * kernel - (next_x * ps[k] - next_s * px[k]);
    return static_cast<double>(residual) / system.mass();
}

double cd_identity_residual(const MeasureSpec& spec, const KernelParams& params, double x)
{
    return cd_identity_residual(*orthonormal_system(spec, params.basis, params.k), params.k, params.s, x);
}

double reproduce(const MeasureSpec& spec, BasisId basis, int k, double y, const PolynomialFn& f)
{
    if (f.degree > k) {
        throw ValidationError("reproduce: polynomial degree " + std::to_string(f.degree) + " exceeds kernel degree " +
                              std::to_string(k));
    }
    auto system = orthonormal_system(spec, basis, k);
    const Eigen::VectorXd py = system->eval_upto(k, y);
    auto integrand = [&](double x) { return py.dot(system->eval_upto(k, x)) * f.eval(x); };
    return moment_functional(spec, basis, integrand, k + f.degree);
}

double adjacent_minus_from_kernel(const OrthonormalSystem& base, int i, double x)
{
    base.require_degree(i, "adjacent_minus_from_kernel");
    const auto p1 = evaluate_recurrence<double>(base.coeffs(), base.p0(), 1.0, i);
    const double norm = scaled_next_term<double>(base.coeffs(), p1, 1.0, i) * p1[i];
    if (!(norm > 0.0)) throw NumericError("a_i p_{i+1}(1) p_i(1) is not positive");
    return cd_kernel(base, i, 1.0, x) / std::sqrt(norm);
}

double adjacent_plusminus_from_kernel(const OrthonormalSystem& base, int i, double x)
{
    base.require_degree(i, "adjacent_plusminus_from_kernel");
    const auto pp = evaluate_recurrence<double>(base.coeffs(), base.p0(), 1.0, i);
    const auto pm = evaluate_recurrence<double>(base.coeffs(), base.p0(), -1.0, i);
    const double next_p = scaled_next_term<double>(base.coeffs(), pp, 1.0, i);
    const double next_m = scaled_next_term<double>(base.coeffs(), pm, -1.0, i);
    return cd_kernel(base, i, -1.0, x) * next_p - cd_kernel(base, i, 1.0, x) * next_m;
}

}  // namespace delbound
