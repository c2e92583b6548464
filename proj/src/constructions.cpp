#include "delbound/constructions.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <tuple>

#include "delbound/errors.hpp"
#include "delbound/spectral.hpp"

namespace delbound {

namespace {

constexpr double kWindowTie = 1e-12;

int kernel_degree_cap(const MeasureSpec& spec, Variant variant, int max_k)
{
    const int top = max_degree(spec, variant);
    return top == INT_MAX ? max_k : std::min(top, spec.discrete() ? top : max_k);
}

/// Closed-form MRRW value without the window check; +inf where the
/// denominator has the wrong sign.
double mrrw_value(const OrthonormalSystem& base, int k, double s)
{
    const Eigen::VectorXd ps = base.eval_upto(k, s);
    const Eigen::VectorXd p1 = base.eval_upto(k, 1.0);
    const double kernel = ps.dot(p1);
    const double denom = base.scaled_next(k, s) * ps(k);
    if (!(denom < 0.0)) return std::numeric_limits<double>::infinity();
    return -(1.0 - s) * kernel * kernel / denom;
}

/// Minimizer of the MRRW value over [lo, hi) (lo excluded unless
/// `lo_closed`): a coarse scan followed by golden-section refinement.
std::pair<double, double> minimize_in_window(const OrthonormalSystem& base, int k, double lo, bool lo_closed, double hi)
{
    constexpr int samples = 48;
    const double width = hi - lo;
    auto point = [&](int i) {
        if (i == 0) return lo_closed ? lo : lo + 1e-9 * width;
        return lo + width * i / samples;
    };
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double v = mrrw_value(base, k, point(i));
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (!std::isfinite(best_val)) return {best_val, lo};
    double a = best == 0 ? point(0) : point(best - 1);
    double b = best + 1 < samples ? point(best + 1) : hi - 1e-9 * width;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a), d = a + ratio * (b - a);
    double fc = mrrw_value(base, k, c), fd = mrrw_value(base, k, d);
    for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = mrrw_value(base, k, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = mrrw_value(base, k, d);
        }
    }
    double arg = point(best);
    double val = best_val;
    if (fc < val) {
        val = fc;
        arg = c;
    }
    if (fd < val) {
        val = fd;
        arg = d;
    }
    return {val, arg};
}

BoundResult best_mrrw(const MeasureSpec& spec, double s, const BoundOptions& options)
{
    const int kmax = kernel_degree_cap(spec, Variant::base, options.max_k);
    auto base = orthonormal_system(spec, Variant::base, kmax);
    std::vector<std::tuple<double, int, double>> candidates;
    for (int k = 0; k <= kmax; ++k) {
        const double xk = base->largest_zero(k);
        const double xk1 = base->largest_zero(k + 1);
        if (xk1 <= s) continue;
        const bool inside = s > xk;
        const double lo = inside ? s : xk;
        const auto [val, arg] = minimize_in_window(*base, k, lo, inside, xk1);
        if (std::isfinite(val)) candidates.emplace_back(val, k, arg);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& l, const auto& r) { return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r)); });
    std::string last_reason = "no MRRW window above s";
    for (const auto& [val, k, arg] : candidates) {
        BoundPolynomial f = mrrw_poly(spec, k, arg);
        ConeCertificate cert = cone_certificate(spec, f, f.s, options.tolerances);
        if (!cert.passed()) {
            last_reason = cert.reason;
            continue;
        }
        BoundResult result = certify(spec, Method::mrrw, std::move(f), s, options.tolerances);
        result.closed_form = val;
        return result;
    }
    throw NotCertifiedError("no certified MRRW polynomial for s = " + std::to_string(s) + " (" + last_reason + ")");
}

BoundResult best_spectral(const MeasureSpec& spec, double s, const BoundOptions& options)
{
    const int kmax = kernel_degree_cap(spec, Variant::base, options.max_k);
    std::optional<BoundResult> best;
    std::string last_reason = "no operator with lambda_k >= s";
    for (int k = 1; k <= kmax; ++k) {
        try {
            BoundResult r = spectral_bound_fixed(spec, k, options.sign, options.tolerances);
            if (r.s_used < s) continue;
            if (!best || r.bound < best->bound) best = std::move(r);
        } catch (const NotCertifiedError& e) {
            last_reason = e.what();
        }
    }
    if (!best) throw NotCertifiedError("no certified fixed-operator bound for s = " + std::to_string(s) + " (" + last_reason + ")");
    best->s = s;
    return *best;
}

}  // namespace

std::string to_string(Method method)
{
    switch (method) {
    case Method::mrrw: return "mrrw";
    case Method::lev: return "lev";
    case Method::spectral: return "spectral";
    }
    return "lev";
}

Method parse_method(const std::string& name)
{
    if (name == "mrrw") return Method::mrrw;
    if (name == "lev") return Method::lev;
    if (name == "spectral") return Method::spectral;
    throw ValidationError("unknown method '" + name + "' (expected mrrw, lev or spectral)");
}

std::string to_string(SignVariant variant)
{
    return variant == SignVariant::subtractive ? "subtractive" : "additive";
}

SignVariant parse_sign_variant(const std::string& name)
{
    if (name == "subtractive" || name == "-") return SignVariant::subtractive;
    if (name == "additive" || name == "+") return SignVariant::additive;
    throw ValidationError("unknown sign variant '" + name + "' (expected subtractive or additive)");
}

double inner_product_for_distance(int n, int d) { return 1.0 - 2.0 * d / n; }

Baselines classical_baselines(int n, int d)
{
    Baselines b;
    b.singleton = std::ldexp(1.0, n - d + 1);
    const int t = (d - 1) / 2;
    double volume = 0.0, binom = 1.0;
    for (int i = 0; i <= t; ++i) {
        volume += binom;
        binom = binom * (n - i) / (i + 1.0);
    }
    b.hamming = std::ldexp(1.0, n) / volume;
    if (2 * d > n) b.plotkin = 2.0 * d / (2.0 * d - n);
    return b;
}

BoundPolynomial mrrw_poly(const MeasureSpec& spec, int k, double s)
{
    if (!(s < 1.0)) throw ValidationError("MRRW polynomial needs s < 1");
    auto base = orthonormal_system(spec, Variant::base, k);
    return make_kernel_square(spec, Family::mrrw, Route::analytic, Variant::base, k, s, s, base->eval_upto(k, s));
}

double mrrw_bound_closed(const MeasureSpec& spec, int k, double s)
{
    auto base = orthonormal_system(spec, Variant::base, k);
    const double xk = base->largest_zero(k);
    const double xk1 = base->largest_zero(k + 1);
    if (!(xk < s && s < xk1)) {
        throw ValidationError("closed-form MRRW bound needs x_k < s < x_{k+1}: s = " + std::to_string(s) +
                              " outside (" + std::to_string(xk) + ", " + std::to_string(xk1) + ")");
    }
    const double v = mrrw_value(*base, k, s);
    if (!std::isfinite(v)) throw NumericError("closed-form MRRW denominator vanished at s = " + std::to_string(s));
    return v;
}

BoundPolynomial lev_odd_poly(const MeasureSpec& spec, int k, double s)
{
    if (!(s < 1.0)) throw ValidationError("Levenshtein polynomial needs s < 1");
    auto minus = orthonormal_system(spec, Variant::minus, k);
    return make_kernel_square(spec, Family::lev_odd, Route::analytic, Variant::minus, k, s, s, minus->eval_upto(k, s));
}

BoundPolynomial lev_even_poly(const MeasureSpec& spec, int k, double s)
{
    if (!(s < 1.0)) throw ValidationError("Levenshtein polynomial needs s < 1");
    auto pm = orthonormal_system(spec, Variant::plusminus, k);
    return make_kernel_square(spec, Family::lev_even, Route::analytic, Variant::plusminus, k, s, s, pm->eval_upto(k, s));
}

std::vector<LevWindow> lev_windows(const MeasureSpec& spec, int max_k)
{
    const int top_minus = kernel_degree_cap(spec, Variant::minus, max_k);
    const int top_pm = max_degree(spec, Variant::plusminus) < 0 ? -1 : kernel_degree_cap(spec, Variant::plusminus, max_k);
    if (top_minus < 0) throw ValidationError("no adjacent system on " + spec.descriptor());
    auto minus = orthonormal_system(spec, Variant::minus, top_minus);
    std::shared_ptr<const OrthonormalSystem> pm;
    if (top_pm >= 0) pm = orthonormal_system(spec, Variant::plusminus, top_pm);
    auto pm_zero = [&](int k) { return k == 0 ? -1.0 : pm->largest_zero(k); };

    std::vector<LevWindow> windows;
    for (int k = 0; k <= top_minus; ++k) {
        if (k > top_pm + 1) break;
        windows.push_back({k, false, pm_zero(k), minus->largest_zero(k + 1)});
        if (k <= top_pm) windows.push_back({k, true, minus->largest_zero(k + 1), pm->largest_zero(k + 1)});
    }
    return windows;
}

LevSelection lev_degree_select(const MeasureSpec& spec, double s, int max_k)
{
    if (!(s >= -1.0)) throw ValidationError("s below -1 is outside the distance range");
    for (const LevWindow& w : lev_windows(spec, max_k)) {
        if (!w.even && s >= w.lo - kWindowTie && s <= w.hi + kWindowTie) return {w.k, false};
        if (w.even && s > w.lo + kWindowTie && s < w.hi - kWindowTie) return {w.k, true};
    }
    throw NotCertifiedError("degree budget exceeded: s = " + std::to_string(s) +
                            " lies above every Levenshtein window on " + spec.descriptor());
}

double bound_value(const MeasureSpec& spec, const BoundPolynomial& f)
{
    const Tolerances tol = default_tolerances();
    if (!(f.f0() > tol.positive)) {
        ConeCertificate cert = cone_certificate(spec, f, f.s, tol);
        throw NotInConeError("not in cone: f̂_0 = " + std::to_string(f.f0()) + " (" + cert.id + ")", std::move(cert));
    }
    return 1.0 / f.f0();
}

BoundResult certify(const MeasureSpec& spec, Method method, BoundPolynomial f, double s_target, const Tolerances& tol)
{
    ConeCertificate cert = cone_certificate(spec, f, f.s, tol);
    if (!cert.passed()) {
        throw NotInConeError(to_string(f.family) + " polynomial (k=" + std::to_string(f.k) + ", s=" +
                                 std::to_string(f.s) + ") failed the cone certificate: " + cert.reason + " [" +
                                 cert.id + "]",
                             cert);
    }
    BoundResult r;
    r.method = method;
    r.space = spec.descriptor();
    r.s = s_target;
    r.s_used = f.s;
    r.k = f.k;
    r.degree = f.degree;
    r.bound = bound_value(spec, f);
    r.polynomial = std::move(f);
    r.certificate = std::move(cert);
    return r;
}

BoundResult bound_at(const MeasureSpec& spec, double s, Method method, const BoundOptions& options)
{
    if (!(s >= -1.0 && s < 1.0)) throw ValidationError("s must lie in [-1, 1), got " + std::to_string(s));
    switch (method) {
    case Method::lev: {
        LevSelection sel;
        if (options.k) {
            sel.k = *options.k;
            for (const LevWindow& w : lev_windows(spec, std::max(options.max_k, *options.k + 1))) {
                if (w.k == sel.k && w.even && s > w.lo + kWindowTie && s < w.hi - kWindowTie) sel.even = true;
            }
        } else {
            sel = lev_degree_select(spec, s, options.max_k);
        }
        BoundPolynomial f = sel.even ? lev_even_poly(spec, sel.k, s) : lev_odd_poly(spec, sel.k, s);
        return certify(spec, Method::lev, std::move(f), s, options.tolerances);
    }
    case Method::mrrw: {
        if (!options.k) return best_mrrw(spec, s, options);
        BoundResult r = certify(spec, Method::mrrw, mrrw_poly(spec, *options.k, s), s, options.tolerances);
        try {
            r.closed_form = mrrw_bound_closed(spec, *options.k, s);
        } catch (const ValidationError&) {
        }
        return r;
    }
    case Method::spectral: {
        if (!options.k) return best_spectral(spec, s, options);
        if (options.sign == SignVariant::additive) {
            BoundResult r = spectral_bound_fixed(spec, *options.k, options.sign, options.tolerances);
            r.s = s;
            return r;
        }
        return spectral_recover_bound(spec, options.spectral_basis, *options.k, s, options.tolerances);
    }
    }
    throw ValidationError("unknown method");
}

BoundResult bound_for_distance(const MeasureSpec& spec, int d, Method method, const BoundOptions& options)
{
    if (spec.kind != SpaceKind::hamming) throw ValidationError("distance queries need a Hamming space");
    const int n = spec.dimension;
    if (d < 1 || d > n) {
        throw ValidationError("d must satisfy 1 <= d <= n (d = " + std::to_string(d) + ", n = " + std::to_string(n) + ")");
    }
    BoundResult r = bound_at(spec, inner_product_for_distance(n, d), method, options);
    r.n = n;
    r.d = d;
    r.baselines = classical_baselines(n, d);
    return r;
}

}  // namespace delbound
