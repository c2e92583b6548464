#include "delbound/bound_polynomial.hpp"

#include <cmath>

#include "delbound/errors.hpp"
#include "delbound/feasibility.hpp"

namespace delbound {

std::string to_string(Family family)
{
    switch (family) {
    case Family::mrrw: return "mrrw";
    case Family::lev_odd: return "lev_odd";
    case Family::lev_even: return "lev_even";
    case Family::fourier: return "fourier";
    }
    return "fourier";
}

std::string to_string(Route route)
{
    switch (route) {
    case Route::analytic: return "analytic";
    case Route::spectral: return "spectral";
    case Route::fourier: return "fourier";
    }
    return "fourier";
}

double BoundPolynomial::value(double x) const
{
    if (family == Family::fourier) return fourier.dot(system->eval_upto(static_cast<int>(fourier.size()) - 1, x));
    const double gx = g.dot(system->eval_upto(k, x));
    double h = x - root;
    if (plus_one) h *= x + 1.0;
    return c * h * gx * gx;
}

double BoundPolynomial::derivative(double x) const
{
    Eigen::VectorXd p, dp;
    if (family == Family::fourier) {
        system->eval_upto_with_derivative(static_cast<int>(fourier.size()) - 1, x, p, dp);
        return fourier.dot(dp);
    }
    system->eval_upto_with_derivative(k, x, p, dp);
    const double gx = g.dot(p);
    const double dg = g.dot(dp);
    double h = x - root, dh = 1.0;
    if (plus_one) {
        dh = (x + 1.0) + (x - root);
        h *= x + 1.0;
    }
    return c * (dh * gx * gx + 2.0 * h * gx * dg);
}

BoundPolynomial make_kernel_square(const MeasureSpec& spec, Family family, Route route, BasisId basis, int k,
                                   double s, double root, Eigen::VectorXd g)
{
    if (g.size() != k + 1) throw ValidationError("kernel coefficient vector must have k+1 entries");
    BoundPolynomial f;
    f.family = family;
    f.route = route;
    f.k = k;
    f.s = s;
    f.root = root;
    f.basis = basis;
    f.plus_one = family == Family::lev_even;
    f.degree = 2 * k + 1 + (f.plus_one ? 1 : 0);
    f.system = orthonormal_system(spec, basis, k);
    f.g = std::move(g);

    const double g1 = f.g.dot(f.system->eval_upto(k, 1.0));
    const double scale = (1.0 - root) * (f.plus_one ? 2.0 : 1.0) * g1 * g1;
    if (!(std::abs(scale) > 0.0) || !std::isfinite(scale)) {
        throw ValidationError("normalization undefined: (1-s) K(1,s)^2 vanishes for " + to_string(family) +
                              " at k=" + std::to_string(k) + ", s=" + std::to_string(s));
    }
    f.c = 1.0 / scale;
    f.fourier = delsarte_coefficients(spec, PolynomialFn{[&f](double x) { return f.value(x); }, f.degree});
    return f;
}

BoundPolynomial make_fourier_polynomial(const MeasureSpec& spec, const Eigen::VectorXd& coeffs, double s)
{
    if (coeffs.size() == 0) throw ValidationError("empty coefficient list");
    const int n = static_cast<int>(coeffs.size()) - 1;
    BoundPolynomial f;
    f.family = Family::fourier;
    f.route = Route::fourier;
    f.degree = n;
    f.k = n;
    f.s = s;
    f.root = s;
    f.system = orthonormal_system(spec, BasisId::base, n);
    const double at_one = coeffs.dot(f.system->eval_upto(n, 1.0));
    if (!(at_one > 0.0)) throw ValidationError("f(1) must be positive to normalize, got " + std::to_string(at_one));
    f.fourier = coeffs / at_one;
    return f;
}

}  // namespace delbound
