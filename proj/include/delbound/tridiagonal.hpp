#ifndef DELBOUND_TRIDIAGONAL_HPP
#define DELBOUND_TRIDIAGONAL_HPP

// Dense kernels for symmetric tridiagonal (Jacobi) matrices: three-term
// recurrence evaluation, Sturm-sequence bisection, the discretized Stieltjes
// (Lanczos) procedure and Gauss rules. Templated on the scalar so the same
// recurrence can run in double or in an extended type for residual checks.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "delbound/errors.hpp"

namespace delbound {

/// Orthonormal recurrence x p_i = a_i p_{i+1} + b_i p_i + a_{i-1} p_{i-1}.
/// Both vectors hold indices 0..m; a(m) is zero when m is the last degree
/// supported by a discrete measure.
struct RecurrenceCoeffs {
    Eigen::VectorXd a;
    Eigen::VectorXd b;

    int degree() const { return static_cast<int>(b.size()) - 1; }
};

/// p_0..p_k at x, with p_0 the constant 1/sqrt(mass).
template <typename Scalar>
std::vector<Scalar> evaluate_recurrence(const RecurrenceCoeffs& rc, Scalar p0, Scalar x, int k)
{
    std::vector<Scalar> p(static_cast<std::size_t>(k) + 1);
    p[0] = p0;
    if (k >= 1) p[1] = (x - Scalar(rc.b(0))) * p0 / Scalar(rc.a(0));
    for (int i = 1; i < k; ++i) {
        p[i + 1] = ((x - Scalar(rc.b(i))) * p[i] - Scalar(rc.a(i - 1)) * p[i - 1]) / Scalar(rc.a(i));
    }
    return p;
}

/// a_k p_{k+1}(x), computed without dividing by a_k so it is defined at the
/// last degree of a discrete system too (it vanishes on the support there).
template <typename Scalar>
Scalar scaled_next_term(const RecurrenceCoeffs& rc, const std::vector<Scalar>& p, Scalar x, int k)
{
    Scalar next = (x - Scalar(rc.b(k))) * p[k];
    if (k >= 1) next -= Scalar(rc.a(k - 1)) * p[k - 1];
    return next;
}

/// p_0..p_k and their derivatives at x.
inline void evaluate_recurrence_with_derivative(const RecurrenceCoeffs& rc, double p0, double x, int k,
                                                Eigen::VectorXd& p, Eigen::VectorXd& dp)
{
    p.resize(k + 1);
    dp.resize(k + 1);
    p(0) = p0;
    dp(0) = 0.0;
    if (k >= 1) {
        p(1) = (x - rc.b(0)) * p0 / rc.a(0);
        dp(1) = p0 / rc.a(0);
    }
    for (int i = 1; i < k; ++i) {
        p(i + 1) = ((x - rc.b(i)) * p(i) - rc.a(i - 1) * p(i - 1)) / rc.a(i);
        dp(i + 1) = (p(i) + (x - rc.b(i)) * dp(i) - rc.a(i - 1) * dp(i - 1)) / rc.a(i);
    }
}

/// Number of eigenvalues strictly below x of the tridiagonal matrix with
/// diagonal `diag` and off-diagonal `off` (LDL^T inertia).
template <typename Scalar>
int sturm_count(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& off, Scalar x)
{
    const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    int count = 0;
    Scalar q = diag(0) - x;
    if (q < Scalar(0)) ++count;
    for (Eigen::Index i = 1; i < diag.size(); ++i) {
        if (q == Scalar(0)) q = tiny;
        q = diag(i) - x - off(i - 1) * off(i - 1) / q;
        if (q < Scalar(0)) ++count;
    }
    return count;
}

/// All eigenvalues in ascending order by bisection on the Sturm count. Each
/// bracket is halved until it cannot shrink further in Scalar, so the result
/// is accurate to a few ulps of the matrix norm (well inside 1e-13).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tridiagonal_eigenvalues(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& off)
{
    using std::abs;
    const Eigen::Index m = diag.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(m);
    if (m == 0) return values;

    // Gershgorin enclosure.
    Scalar lo = diag(0), hi = diag(0);
    for (Eigen::Index i = 0; i < m; ++i) {
        Scalar radius = Scalar(0);
        if (i > 0) radius += abs(off(i - 1));
        if (i + 1 < m) radius += abs(off(i));
        lo = std::min(lo, diag(i) - radius);
        hi = std::max(hi, diag(i) + radius);
    }
    const Scalar pad = (hi - lo) * Scalar(4) * std::numeric_limits<Scalar>::epsilon() + std::numeric_limits<Scalar>::min();
    lo -= pad;
    hi += pad;

    for (Eigen::Index j = 0; j < m; ++j) {
        Scalar left = lo, right = hi;
        for (int iter = 0; iter < 4096; ++iter) {
            const Scalar mid = left + (right - left) / Scalar(2);
            if (mid <= left || mid >= right) break;
            if (sturm_count(diag, off, mid) > j)
                right = mid;
            else
                left = mid;
        }
        values(j) = left + (right - left) / Scalar(2);
        lo = left;  // eigenvalue j+1 is not below eigenvalue j
    }
    return values;
}

/// Largest eigenvalue only, by the same bisection.
template <typename Scalar>
Scalar tridiagonal_largest_eigenvalue(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                                      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& off)
{
    using std::abs;
    const Eigen::Index m = diag.size();
    Scalar lo = diag(0), hi = diag(0);
    for (Eigen::Index i = 0; i < m; ++i) {
        Scalar radius = Scalar(0);
        if (i > 0) radius += abs(off(i - 1));
        if (i + 1 < m) radius += abs(off(i));
        lo = std::min(lo, diag(i) - radius);
        hi = std::max(hi, diag(i) + radius);
    }
    const Scalar pad = (hi - lo) * Scalar(4) * std::numeric_limits<Scalar>::epsilon() + std::numeric_limits<Scalar>::min();
    Scalar left = lo - pad, right = hi + pad;
    for (int iter = 0; iter < 4096; ++iter) {
        const Scalar mid = left + (right - left) / Scalar(2);
        if (mid <= left || mid >= right) break;
        if (sturm_count(diag, off, mid) > m - 1)
            right = mid;
        else
            left = mid;
    }
    return left + (right - left) / Scalar(2);
}

/// Recurrence coefficients of the discrete measure sum_j w_j delta(x - x_j),
/// by the Stieltjes procedure in vector (Lanczos) form with full
/// reorthogonalization. Zero weights are dropped from the support. Returns
/// b_0..b_m and a_0..a_m, with a_m = 0 when m is the last supported degree.
inline RecurrenceCoeffs discrete_stieltjes(const Eigen::VectorXd& nodes, const Eigen::VectorXd& weights, int m)
{
    std::vector<double> xs, ws;
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
        if (weights(j) > 0.0) {
            xs.push_back(nodes(j));
            ws.push_back(weights(j));
        } else if (weights(j) < 0.0) {
            throw ValidationError("discrete measure has a negative weight");
        }
    }
    const int support = static_cast<int>(xs.size());
    if (m < 0 || m > support - 1) {
        throw ValidationError("requested degree " + std::to_string(m) + " exceeds the " +
                              std::to_string(support) + "-point support");
    }
    const Eigen::Map<const Eigen::VectorXd> x(xs.data(), support);
    Eigen::VectorXd sqrtw = Eigen::Map<const Eigen::VectorXd>(ws.data(), support).cwiseSqrt();

    Eigen::MatrixXd q(support, m + 1);
    q.col(0) = sqrtw / sqrtw.norm();

    RecurrenceCoeffs rc;
    rc.a = Eigen::VectorXd::Zero(m + 1);
    rc.b = Eigen::VectorXd::Zero(m + 1);
    for (int i = 0; i <= m; ++i) {
        Eigen::VectorXd r = x.cwiseProduct(q.col(i));
        rc.b(i) = q.col(i).dot(r);
        if (i == m) break;
        r -= rc.b(i) * q.col(i);
        if (i > 0) r -= rc.a(i - 1) * q.col(i - 1);
        for (int pass = 0; pass < 2; ++pass) {
            r -= q.leftCols(i + 1) * (q.leftCols(i + 1).transpose() * r);
        }
        rc.a(i) = r.norm();
        if (!(rc.a(i) > 0.0)) {
            throw NumericError("Stieltjes procedure lost positivity at a_" + std::to_string(i));
        }
        q.col(i + 1) = r / rc.a(i);
    }
    if (m == support - 1) rc.a(m) = 0.0;
    return rc;
}

struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// m-point Gauss rule of the measure with recurrence `rc` and total mass
/// `mass` (Golub-Welsch). Nodes are eigenvalues of J_{m-1}; weights are the
/// Christoffel numbers 1/K_{m-1}(x_j, x_j).
inline QuadratureRule gauss_rule(const RecurrenceCoeffs& rc, double mass, int m)
{
    if (m < 1) throw ValidationError("quadrature needs at least one node");
    if (rc.degree() < m - 1) throw ValidationError("not enough recurrence coefficients for the quadrature order");
    Eigen::VectorXd diag = rc.b.head(m);
    Eigen::VectorXd off = rc.a.head(std::max(m - 1, 0));
    QuadratureRule rule;
    rule.nodes = tridiagonal_eigenvalues<double>(diag, off);
    rule.weights.resize(m);
    const double p0 = 1.0 / std::sqrt(mass);
    for (int j = 0; j < m; ++j) {
        const auto p = evaluate_recurrence<double>(rc, p0, rule.nodes(j), m - 1);
        double k = 0.0;
        for (double v : p) k += v * v;
        if (!(k > 0.0) || !std::isfinite(k)) {
            throw NumericError("Golub-Welsch weight undefined at node " + std::to_string(rule.nodes(j)));
        }
        rule.weights(j) = 1.0 / k;
    }
    return rule;
}

}  // namespace delbound

#endif
